//! The GQE equation `T(psi1) . M = N(psi2)[d]` and its degree-by-degree
//! solver.

use std::collections::HashMap;
use std::fmt;

use crystal::Colouring;
use exactalg::linsolve::interpolate;
use exactalg::{ri, Poly1, Rat, RingElem, Series};

use crate::error::GqeError;

/// Tuning of the adaptive interpolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverParams {
    /// Initial number of interpolation intervals `D` (so `D + 1` samples).
    pub d0: usize,
    /// Largest `D` tried before giving up.
    pub dmax: usize,
    /// Validation points beyond the samples.
    pub validation: usize,
    /// Number of consecutive vanishing entries that declares the tail.
    pub tail: usize,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams { d0: 4, dmax: 32, validation: 4, tail: 3 }
    }
}

/// An instance of the GQE equation of degree `degree`.
#[derive(Debug, Clone)]
pub struct GqeEquation {
    pub psi1: Colouring,
    pub psi2: Colouring,
    pub degree: i64,
    /// Truncation `h^order`.
    pub order: usize,
    /// Largest entry index computed before the tail search is abandoned.
    pub pmax: usize,
    /// Every row `(n, p)` with `p <= n <= ncheck` is verified at the end.
    pub ncheck: i64,
    pub params: SolverParams,
}

impl GqeEquation {
    pub fn new(psi1: Colouring, psi2: Colouring, degree: i64, order: usize) -> Self {
        GqeEquation { psi1, psi2, degree, order, pmax: 24, ncheck: 16, params: SolverParams::default() }
    }

    pub fn with_pmax(mut self, pmax: usize) -> Self {
        self.pmax = pmax;
        self
    }

    pub fn with_ncheck(mut self, ncheck: i64) -> Self {
        self.ncheck = ncheck;
        self
    }

    pub fn with_params(mut self, params: SolverParams) -> Self {
        self.params = params;
        self
    }
}

/// The entries `M_0..M_P` of a solution; all later entries vanish modulo
/// `h^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct GqeSolution {
    pub entries: Vec<Series<Poly1<Rat>>>,
    /// Degree in `u` of each entry.
    pub degrees: Vec<usize>,
    pub order: usize,
}

impl GqeSolution {
    pub fn new(entries: Vec<Series<Poly1<Rat>>>, order: usize) -> Self {
        let mut entries = entries;
        while entries.last().is_some_and(|e| e.is_zero()) {
            entries.pop();
        }
        let degrees = entries.iter().map(degree).collect();
        GqeSolution { entries, degrees, order }
    }

    /// `M_p`, zero past the stored entries.
    pub fn entry(&self, p: usize) -> Series<Poly1<Rat>> {
        self.entries.get(p).cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    /// Index of the last nonzero entry, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.entries.len().checked_sub(1)
    }

    /// `M_p(n)`.
    pub fn eval(&self, p: usize, n: i64) -> Series<Rat> {
        match self.entries.get(p) {
            Some(e) => e.eval_at(&ri(n)),
            None => Series::zero(self.order),
        }
    }

    /// The shifted column `M[d]`, with `(M[d])_p = M_{p-d}` for `p >= d`.
    pub fn shifted(&self, d: i64) -> GqeSolution {
        let entries = if d >= 0 {
            std::iter::repeat_n(Series::zero(self.order), d as usize).chain(self.entries.iter().cloned()).collect()
        } else {
            self.entries.iter().skip((-d) as usize).cloned().collect()
        };
        GqeSolution::new(entries, self.order)
    }

    /// The `h^0` part of each entry.
    pub fn at_h_zero(&self) -> Vec<Poly1<Rat>> {
        self.entries.iter().map(|e| e.coeff(0)).collect()
    }
}

impl fmt::Display for GqeSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "M = 0");
        }
        for (p, e) in self.entries.iter().enumerate() {
            writeln!(f, "M_{} = {}", p, e)?;
        }
        writeln!(f, "M_p = 0 for p >= {}", self.entries.len())
    }
}

fn degree(e: &Series<Poly1<Rat>>) -> usize {
    e.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0)
}

/// A row `(n, p)` of the equation that no solution can satisfy, with the
/// lowest h-order of the discrepancy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: i64,
    pub p: usize,
    pub order: usize,
    pub residual: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row (n={}, p={}) inconsistent at h^{}: {}", self.n, self.p, self.order, self.residual)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    Solved(GqeSolution),
    NoSolution(Witness),
}

/// `N(psi2)[d]` at `(n, p)`: `[psi2](n, p - d)` when `0 < p - d <= n`, else 0.
pub fn rhs_row(psi2: &Colouring, d: i64, n: i64, p: usize, order: usize) -> Result<Series<Rat>, GqeError> {
    let k = p as i64 - d;
    if 0 < k && k <= n {
        Ok(psi2.congruence(n, k, order)?)
    } else {
        Ok(Series::zero(order))
    }
}

/// Caches congruence values of `psi1`.
struct Rows<'a> {
    eq: &'a GqeEquation,
    cong: HashMap<(i64, i64), Series<Rat>>,
}

impl<'a> Rows<'a> {
    fn new(eq: &'a GqeEquation) -> Self {
        Rows { eq, cong: HashMap::new() }
    }

    fn cong(&mut self, n: i64, k: i64) -> Result<Series<Rat>, GqeError> {
        if let Some(v) = self.cong.get(&(n, k)) {
            return Ok(v.clone());
        }
        let v = self.eq.psi1.congruence(n, k, self.eq.order)?;
        self.cong.insert((n, k), v.clone());
        Ok(v)
    }

    /// `[psi1](n, p)! / [psi1](n, p - a)! = prod_{k = p - a + 1}^{p} [psi1](n, k)`.
    fn ratio(&mut self, n: i64, p: usize, a: usize) -> Result<Series<Rat>, GqeError> {
        let mut acc = Series::one(self.eq.order);
        for k in (p - a + 1)..=p {
            acc = acc.mul_ref(&self.cong(n, k as i64)?);
        }
        Ok(acc)
    }

    /// `sum_{a <= p} ratio(n, p, a) M_a(n - 2p + 2a) - rhs(n, p)` over the
    /// given entries.
    fn residual(&mut self, entries: &[Series<Poly1<Rat>>], n: i64, p: usize) -> Result<Series<Rat>, GqeError> {
        let mut acc = rhs_row(&self.eq.psi2, self.eq.degree, n, p, self.eq.order)?.neg_ref();
        for (a, m) in entries.iter().enumerate().take(p + 1) {
            if m.is_zero() {
                continue;
            }
            let arg = n - 2 * p as i64 + 2 * a as i64;
            acc = acc.add_ref(&self.ratio(n, p, a)?.mul_ref(&m.eval_at(&ri(arg))));
        }
        Ok(acc)
    }

    /// The value `M_p(n)` forced by row `(n, p)` given `M_0..M_{p-1}`.
    fn forced(&mut self, known: &[Series<Poly1<Rat>>], n: i64, p: usize) -> Result<Series<Rat>, GqeError> {
        let pivot = self.ratio(n, p, p)?;
        if pivot.coeff(0).is_zero_elem() {
            return Err(GqeError::SingularPivot { n, p });
        }
        let r = self.residual(known, n, p)?;
        Ok(r.neg_ref().div(&pivot)?)
    }
}

fn interpolate_series(xs: &[Rat], ys: &[Series<Rat>], order: usize) -> Series<Poly1<Rat>> {
    let coeffs = (0..order)
        .map(|m| {
            let vals: Vec<Rat> = ys.iter().map(|y| y.coeff(m)).collect();
            interpolate(xs, &vals)
        })
        .collect();
    Series::new(order, coeffs)
}

fn first_nonzero_order(s: &Series<Rat>) -> Option<usize> {
    s.coeffs().iter().position(|c| !c.is_zero_elem())
}

/// Result of fitting one entry on a window of rows.
enum Fit {
    Ok(Series<Poly1<Rat>>),
    Mismatch,
}

/// Solves the equation entry by entry. Sample points for `M_p` are
/// `n = p, ..., p + D`, validated on the next `V` rows; `D` doubles from `d0`
/// to `dmax`. When the window starting at `n = p` fails but the window
/// starting at `n = p + 1` fits, row `(p, p)` is an exact inconsistency and is
/// returned as the witness.
pub fn solve(eq: &GqeEquation) -> Result<SolveOutcome, GqeError> {
    let mut rows = Rows::new(eq);
    let order = eq.order;
    let prm = eq.params;
    let mut entries: Vec<Series<Poly1<Rat>>> = Vec::new();
    let mut zeros = 0;
    for p in 0..=eq.pmax {
        let mut fit = None;
        let mut d = prm.d0;
        while d <= prm.dmax {
            match fit_window(&mut rows, &entries, p, p as i64, d)? {
                Fit::Ok(m) => {
                    fit = Some(m);
                    break;
                }
                Fit::Mismatch => {
                    if let Fit::Ok(m) = fit_window(&mut rows, &entries, p, p as i64 + 1, d)? {
                        let n = p as i64;
                        let got = m.eval_at(&ri(n));
                        let want = rows.forced(&entries, n, p)?;
                        let diff = got.sub_ref(&want);
                        let o = first_nonzero_order(&diff).expect("the first window failed, so row p differs");
                        let mut withm = entries.clone();
                        withm.push(m);
                        let res = rows.residual(&withm, n, p)?;
                        return Ok(SolveOutcome::NoSolution(Witness { n, p, order: o, residual: res.to_string() }));
                    }
                }
            }
            d *= 2;
        }
        let Some(m) = fit else {
            return Err(GqeError::DegreeExhausted { p, dmax: prm.dmax });
        };
        zeros = if m.is_zero() { zeros + 1 } else { 0 };
        entries.push(m);
        if zeros >= prm.tail {
            let sol = GqeSolution::new(entries, order);
            return Ok(match check_rows(&mut rows, &sol)? {
                Some(w) => SolveOutcome::NoSolution(w),
                None => SolveOutcome::Solved(sol),
            });
        }
    }
    Err(GqeError::TailNotFound { pmax: eq.pmax, width: prm.tail })
}

fn fit_window(rows: &mut Rows<'_>, known: &[Series<Poly1<Rat>>], p: usize, start: i64, d: usize) -> Result<Fit, GqeError> {
    let order = rows.eq.order;
    let v = rows.eq.params.validation as i64;
    let xs: Vec<Rat> = (start..=start + d as i64).map(ri).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for n in start..=start + d as i64 {
        ys.push(rows.forced(known, n, p)?);
    }
    let m = interpolate_series(&xs, &ys, order);
    for n in start + d as i64 + 1..=start + d as i64 + v {
        if m.eval_at(&ri(n)) != rows.forced(known, n, p)? {
            return Ok(Fit::Mismatch);
        }
    }
    Ok(Fit::Ok(m))
}

fn check_rows(rows: &mut Rows<'_>, sol: &GqeSolution) -> Result<Option<Witness>, GqeError> {
    for n in 0..=rows.eq.ncheck {
        for p in 0..=n as usize {
            let r = rows.residual(&sol.entries, n, p)?;
            if let Some(o) = first_nonzero_order(&r) {
                return Ok(Some(Witness { n, p, order: o, residual: r.to_string() }));
            }
        }
    }
    Ok(None)
}

/// The first row `(n, p)` with `p <= n <= eq.ncheck` that `sol` violates.
pub fn verify_solution(eq: &GqeEquation, sol: &GqeSolution) -> Result<Option<Witness>, GqeError> {
    check_rows(&mut Rows::new(eq), sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::Poly2;

    fn solved(eq: &GqeEquation) -> GqeSolution {
        match solve(eq).unwrap() {
            SolveOutcome::Solved(s) => s,
            SolveOutcome::NoSolution(w) => panic!("{}", w),
        }
    }

    #[test]
    fn rhs_rows() {
        let cl = Colouring::Classical;
        assert!(rhs_row(&cl, -1, 4, 4, 2).unwrap().is_zero());
        assert_eq!(rhs_row(&cl, -1, 4, 1, 2).unwrap(), Series::from_int(2, 6));
        assert!(rhs_row(&cl, 0, 4, 0, 2).unwrap().is_zero());
    }

    #[test]
    fn classical_solutions() {
        let s = solved(&GqeEquation::new(Colouring::Classical, Colouring::Classical, -1, 6));
        assert_eq!(s.entries, vec![Series::constant(6, Poly1::x()), Series::one(6)]);
        let sb = solved(&GqeEquation::new(Colouring::Classical, Colouring::Classical, 0, 6));
        assert_eq!(sb.entries, vec![Series::zero(6), Series::one(6)]);
        assert_eq!(s.to_string(), "M_0 = u + O(h^6)\nM_1 = 1 + O(h^6)\nM_p = 0 for p >= 2\n");
    }

    #[test]
    fn quantum_solution_is_the_quantum_casimir() {
        let s = solved(&GqeEquation::new(Colouring::quantum(), Colouring::quantum(), -1, 6));
        assert_eq!(s.entries.len(), 2);
        assert_eq!(s.entries[0], exactalg::series::quantum_number_poly(1, 6));
        assert_eq!(s.entries[1], Series::one(6));
    }

    #[test]
    fn perturbed_colouring_has_a_witness() {
        let p = Series::new(4, vec![Poly2::v(), Poly2::constant(ri(1))]);
        let out = solve(&GqeEquation::new(Colouring::symmetric_poly(p.clone()), Colouring::symmetric_poly(p), -1, 4)).unwrap();
        let SolveOutcome::NoSolution(w) = out else { panic!("expected no solution") };
        assert_eq!((w.n, w.p, w.order), (0, 0, 1));
    }
}
