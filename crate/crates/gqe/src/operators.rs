//! Operators on weight modules built from GQE solutions.

use crystal::{Colouring, Sign};
use exactalg::rational::binomial;
use exactalg::{ri, Rat, RingElem, Series, SparseMat};
use repmod::{Gen, WeightModule};

use crate::error::GqeError;
use crate::solve::GqeSolution;

type Op = SparseMat<Series<Rat>>;

fn check_order(sol: &GqeSolution, m: &WeightModule<Series<Rat>>) -> Result<(), GqeError> {
    let module = m.unit().order();
    if sol.order != module {
        return Err(GqeError::TruncationMismatch { solution: sol.order, module });
    }
    Ok(())
}

fn check_index(m: &WeightModule<Series<Rat>>, i: usize) -> Result<(), GqeError> {
    let rank = m.datum().cartan().rank();
    if i >= rank {
        return Err(GqeError::Index { index: i, rank });
    }
    Ok(())
}

/// `M_a(s H_i)` as a diagonal operator, where `H_i` acts by the coroot
/// pairing of each weight and `s = +-1`.
fn entry_of_h(sol: &GqeSolution, a: usize, m: &WeightModule<Series<Rat>>, i: usize, s: i64) -> Op {
    let coroot = m.datum().coroot(i).to_vec();
    m.weight_op(|w| {
        let h: i64 = coroot.iter().zip(w).map(|(c, x)| c * x).sum();
        sol.eval(a, s * h)
    })
}

/// `sum_a (X_i^-)^a M_a(H_i) (X_i^+)^a`, which equals `X_i^+ X_i^-` on
/// `L(n, psi)` when `sol` solves the degree -1 equation for `(psi, psi)`.
pub fn deformed_commutator_operator(sol: &GqeSolution, m: &WeightModule<Series<Rat>>, i: usize) -> Result<Op, GqeError> {
    check_order(sol, m)?;
    check_index(m, i)?;
    let one = m.unit().clone();
    let (xp, xm) = (m.op(Gen::Raise(i)), m.op(Gen::Lower(i)));
    let mut acc = m.zero_op();
    for a in 0..sol.entries.len() {
        let term = xm.pow(a as u32, &one).mul(&entry_of_h(sol, a, m, i, 1)).mul(&xp.pow(a as u32, &one));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The trivialised generator `{}^psi X_i^{sign}` built from `solbar`, the
/// solution of the degree 0 equation for `(psi_i, psi_cl)`:
/// `sum_a (X_i^{-sign})^a Sbar_{a+1}(sign H_i) (X_i^{sign})^{a+1}`.
///
/// The coefficient of the `a`-th term is `Sbar_{a+1}`: the isomorphism
/// criterion asks for `M[1] = Sbar`, and the classical solution
/// `Sbar_cl = (0, 1, 0, ...)` must give back `X^+` itself.
pub fn trivialised_generator(solbar: &GqeSolution, m: &WeightModule<Series<Rat>>, i: usize, sign: Sign) -> Result<Op, GqeError> {
    check_order(solbar, m)?;
    check_index(m, i)?;
    let one = m.unit().clone();
    let (x, y, s) = match sign {
        Sign::Plus => (m.op(Gen::Raise(i)), m.op(Gen::Lower(i)), 1),
        Sign::Minus => (m.op(Gen::Lower(i)), m.op(Gen::Raise(i)), -1),
    };
    let mut acc = m.zero_op();
    for a in 0..solbar.entries.len().saturating_sub(1) {
        let coeff = entry_of_h(solbar, a + 1, m, i, s);
        let term = y.pow(a as u32, &one).mul(&coeff).mul(&x.pow(a as u32 + 1, &one));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The colouring congruent to `psi` whose `psi^-` is classical:
/// `psi'^-(n, k) = k` and `psi'^+(n, k) = [psi](n, n - k + 1) / (n - k + 1)`.
/// In this frame the trivialised `X^+` acts by the classical coefficients.
pub fn classical_frame(psi: &Colouring) -> Colouring {
    let base = psi.clone();
    let label = format!("classical frame of {}", psi.describe());
    Colouring::pointwise(&label, move |sign, n, k, order| match sign {
        Sign::Minus => Series::from_int(order, k),
        Sign::Plus => {
            let c = base.congruence(n, n - k + 1, order).expect("edge in range");
            c.scale(&Rat::new((1).into(), (n - k + 1).into()))
        }
    })
}

/// Outcome of [`gqe_serre_residual`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerreResidual {
    /// Lowest h-order at which some matrix entry is nonzero, `None` when
    /// the residual vanishes modulo `h^order`.
    pub nonzero_order: Option<usize>,
    /// First basis vector on which the residual is nonzero.
    pub witness: Option<String>,
}

impl SerreResidual {
    pub fn passed(&self) -> bool {
        self.nonzero_order.is_none()
    }
}

/// `sum_{k + k' = 1 - c_ij} (-1)^k binom(1 - c_ij, k) (Xi)^k X_j^{sign} (Xi)^{k'}`
/// with `Xi` the trivialised generator of index `i` built from `solbar_i`.
pub fn gqe_serre_residual(
    m: &WeightModule<Series<Rat>>,
    i: usize,
    j: usize,
    solbar_i: &GqeSolution,
    sign: Sign,
) -> Result<SerreResidual, GqeError> {
    check_index(m, i)?;
    check_index(m, j)?;
    if i == j {
        return Err(GqeError::Index { index: j, rank: m.datum().cartan().rank() });
    }
    let c = m.datum().cartan().entry(i, j);
    let top = (1 - c) as u32;
    let one = m.unit().clone();
    let xi = trivialised_generator(solbar_i, m, i, sign)?;
    let xj = m.op(if sign == Sign::Plus { Gen::Raise(j) } else { Gen::Lower(j) });
    let mut acc = m.zero_op();
    for k in 0..=top {
        let coeff = binomial(top as i64, k as i64) * ri(if k % 2 == 0 { 1 } else { -1 });
        let term = xi.pow(k, &one).mul(&xj).mul(&xi.pow(top - k, &one));
        acc = acc.add(&term.scale(&one.scale(&coeff)));
    }
    let mut best: Option<(usize, usize)> = None;
    for ((_, col), a) in acc.entries() {
        if let Some(o) = a.coeffs().iter().position(|x| !x.is_zero_elem()) {
            if best.is_none_or(|(bo, _)| o < bo) {
                best = Some((o, *col));
            }
        }
    }
    Ok(SerreResidual {
        nonzero_order: best.map(|(o, _)| o),
        witness: best.map(|(_, col)| m.labels()[col].clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{solve, GqeEquation, SolveOutcome};
    use repmod::build_l;

    fn solved(eq: GqeEquation) -> GqeSolution {
        match solve(&eq).unwrap() {
            SolveOutcome::Solved(s) => s,
            SolveOutcome::NoSolution(w) => panic!("{}", w),
        }
    }

    #[test]
    fn classical_commutator_on_l3() {
        let s = solved(GqeEquation::new(Colouring::Classical, Colouring::Classical, -1, 2));
        let m = build_l(3, &Colouring::Classical, 2).unwrap();
        let op = deformed_commutator_operator(&s, &m, 0).unwrap();
        assert_eq!(op.get(1, 1), Some(&Series::from_int(2, 4)));
        let ef = m.op(Gen::Raise(0)).mul(&m.op(Gen::Lower(0)));
        assert_eq!(op, ef);
    }

    #[test]
    fn classical_trivialised_generator_is_x_plus() {
        let sb = solved(GqeEquation::new(Colouring::Classical, Colouring::Classical, 0, 3));
        let m = build_l(4, &Colouring::Classical, 3).unwrap();
        assert_eq!(trivialised_generator(&sb, &m, 0, Sign::Plus).unwrap(), m.op(Gen::Raise(0)));
        assert_eq!(trivialised_generator(&sb, &m, 0, Sign::Minus).unwrap(), m.op(Gen::Lower(0)));
    }

    #[test]
    fn truncation_mismatch_is_reported() {
        let s = solved(GqeEquation::new(Colouring::Classical, Colouring::Classical, -1, 2));
        let m = build_l(2, &Colouring::Classical, 3).unwrap();
        assert!(matches!(deformed_commutator_operator(&s, &m, 0), Err(GqeError::TruncationMismatch { .. })));
    }
}
