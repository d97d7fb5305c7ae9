//! The h-admissible expansion of a field-valued colouring.

use exactalg::linsolve::solve_linear;
use exactalg::{ri, Poly2, Rat, Series};

use crate::colouring::Colouring;
use crate::edge::Sign;
use crate::error::CrystalError;
use crate::interp::field_value;

/// Result of [`h_admissible_expansion`]: `psi_h^{+-} = sum_m P^{+-}_m h^m`.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub minus: Vec<Poly2<Rat>>,
    pub plus: Vec<Poly2<Rat>>,
}

impl Expansion {
    /// The expansion as a colouring over `Q[u, v][[h]]` truncated at `h^(M+1)`.
    pub fn colouring(&self) -> Colouring {
        let k = self.minus.len();
        Colouring::PolySeries { minus: Series::new(k, self.minus.clone()), plus: Series::new(k, self.plus.clone()) }
    }

    /// `sum_m P^{sign}_m(n, k)`, the specialisation at `h = 1`.
    pub fn at_h_one(&self, sign: Sign, n: i64, k: i64) -> Rat {
        let ps = if sign == Sign::Minus { &self.minus } else { &self.plus };
        ps.iter().fold(ri(0), |acc, p| acc + p.eval_int(n, k))
    }
}

/// `P^+(u, v) = -P^-(-u - 2, -v)`.
fn plus_from_minus(p: &Poly2<Rat>) -> Poly2<Rat> {
    p.compose(&Poly2::affine(-1, 0, -2), &Poly2::affine(0, -1, 0)).scale(&ri(-1))
}

/// Monomials `u^a v^b` with `b >= 1`, by total degree and then by `a`
/// descending.
fn monomials(count: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(count);
    let mut deg = 1;
    while out.len() < count {
        for b in 1..=deg {
            out.push((deg - b, b));
        }
        deg += 1;
    }
    out.truncate(count);
    out
}

/// Builds `P^{+-}_0 = v` and, for `1 <= m <= depth`, polynomials `P^{+-}_m`
/// that vanish at `(n, k)` for `n < m`, `1 <= k <= n + 1`, match the residual
/// `psi^{+-}(m, k) - sum_{m' < m} P^{+-}_{m'}(m, k)` for `k <= m`, and vanish at
/// `(m, m + 1)`.
///
/// Only `P^-` is solved for: `P^+` is defined by `P^+(u, v) = -P^-(-u - 2, -v)`,
/// which gives the antisymmetry `P^{+-}(-u - 2, v) = -P^{-+}(u, -v)`. Each
/// `P^-_m` is the interpolant on the shortest initial segment of the
/// monomials `u^a v^b` with `b >= 1` (ordered by total degree), so `v`
/// divides it and the quotient axiom holds identically.
pub fn h_admissible_expansion(psi: &Colouring, depth: usize) -> Result<Expansion, CrystalError> {
    let mut minus = vec![Poly2::v()];
    let mut plus = vec![Poly2::v()];
    for m in 1..=depth as i64 {
        let mut pts: Vec<((i64, i64), Rat)> = Vec::new();
        for n in 1..=m {
            for k in 1..=n + 1 {
                let (tm, tp) = if n == m && k <= m {
                    let rm = field_value(psi, Sign::Minus, m, k)? - prefix(&minus, m, k);
                    let rp = field_value(psi, Sign::Plus, m, k)? - prefix(&plus, m, k);
                    (rm, rp)
                } else {
                    (ri(0), ri(0))
                };
                pts.push(((n, k), tm));
                pts.push(((-n - 2, -k), -tp));
            }
        }
        let p = interpolate_points(&pts);
        plus.push(plus_from_minus(&p));
        minus.push(p);
    }
    Ok(Expansion { minus, plus })
}

fn prefix(ps: &[Poly2<Rat>], n: i64, k: i64) -> Rat {
    ps.iter().fold(ri(0), |acc, p| acc + p.eval_int(n, k))
}

fn try_interpolate(pts: &[((i64, i64), Rat)], count: usize) -> Option<Poly2<Rat>> {
    let mons = monomials(count);
    let a: Vec<Vec<Rat>> = pts
        .iter()
        .map(|((n, k), _)| mons.iter().map(|&(e, f)| ri(*n).pow(e as i32) * ri(*k).pow(f as i32)).collect())
        .collect();
    let b: Vec<Rat> = pts.iter().map(|(_, t)| t.clone()).collect();
    solve_linear(&a, &b).map(|x| Poly2::from_terms(mons.into_iter().zip(x)))
}

/// Interpolant on the shortest solvable initial segment of the monomial
/// order, with free coefficients set to zero. Solvability is monotone in the
/// segment length, so the length is found by doubling and bisection.
fn interpolate_points(pts: &[((i64, i64), Rat)]) -> Poly2<Rat> {
    if pts.iter().all(|(_, t)| *t == ri(0)) {
        return Poly2::zero();
    }
    let mut hi = 1;
    while try_interpolate(pts, hi).is_none() {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if try_interpolate(pts, mid).is_some() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    try_interpolate(pts, hi).expect("solvable at the upper bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_h_admissible;

    #[test]
    fn classical_expansion_is_trivial() {
        let e = h_admissible_expansion(&Colouring::Classical, 4).unwrap();
        assert_eq!(e.minus[0], Poly2::v());
        assert!(e.minus[1..].iter().all(|p| p.is_zero()));
        assert!(e.plus[1..].iter().all(|p| p.is_zero()));
    }

    #[test]
    fn expansion_reconstructs_and_is_admissible() {
        let psi = Colouring::pointwise("n+k^2", |s, n, k, o| {
            Series::from_int(o, if s == Sign::Minus { n + k * k } else { 2 * k - 1 + n })
        });
        let depth = 4;
        let e = h_admissible_expansion(&psi, depth).unwrap();
        for n in 1..=depth as i64 {
            for k in 1..=n {
                assert_eq!(e.at_h_one(Sign::Minus, n, k), ri(n + k * k));
                assert_eq!(e.at_h_one(Sign::Plus, n, k), ri(2 * k - 1 + n));
            }
        }
        let v = check_h_admissible(&e.colouring(), depth + 1).unwrap();
        assert!(v.iter().all(|x| x.passed()), "{:?}", v);
    }
}
