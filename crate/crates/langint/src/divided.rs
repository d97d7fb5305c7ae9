//! Commutation of quantum divided powers on `L(n, psi_q)`.

use crystal::Colouring;
use exactalg::{quantum_number_series, Rat, RingElem, Series, SparseMat};
use repmod::{build_l, Gen, WeightModule};

use crate::check::{series_order, IdentityCheck};
use crate::error::LangError;

type Op = SparseMat<Series<Rat>>;

fn qfact(k: u32, order: usize) -> Series<Rat> {
    (1..=k as i64).fold(Series::one(order), |acc, c| acc.mul_ref(&quantum_number_series(c, order)))
}

/// `X^k / [k]_q!`.
fn divided(x: &Op, k: u32, order: usize) -> Result<Op, LangError> {
    let inv = qfact(k, order).inv()?;
    Ok(x.pow(k, &Series::one(order)).scale(&inv))
}

/// `[K; b over t]`, acting on weight `w` by `prod_{c=1}^t [w + b + 1 - c]_q / [c]_q`.
fn gauss_op(m: &WeightModule<Series<Rat>>, b: i64, t: u32, order: usize) -> Result<Op, LangError> {
    let den = qfact(t, order).inv()?;
    Ok(m.weight_op(|w| {
        let num = (1..=t as i64).fold(Series::one(order), |acc, c| acc.mul_ref(&quantum_number_series(w[0] + b + 1 - c, order)));
        num.mul_ref(&den)
    }))
}

/// `(X^+)^{(k)} (X^-)^{(k')} = sum_{t <= min(k, k')} (X^-)^{(k'-t)} [K; 2t - k - k' over t] (X^+)^{(k-t)}`
/// on `L(n, psi_q)` modulo `h^order`.
pub fn divided_power_identity(n: usize, k: u32, kp: u32, order: usize) -> Result<IdentityCheck, LangError> {
    let m = build_l(n, &Colouring::quantum(), order)?;
    let (xp, xm) = (m.op(Gen::Raise(0)), m.op(Gen::Lower(0)));
    let lhs = divided(&xp, k, order)?.mul(&divided(&xm, kp, order)?);
    let mut rhs = m.zero_op();
    for t in 0..=k.min(kp) {
        let b = 2 * t as i64 - k as i64 - kp as i64;
        let term = divided(&xm, kp - t, order)?.mul(&gauss_op(&m, b, t, order)?).mul(&divided(&xp, k - t, order)?);
        rhs = rhs.add(&term);
    }
    let name = format!("divided powers k={} k'={} on L({})", k, kp, n);
    Ok(IdentityCheck::from_residual(&name, &lhs.sub(&rhs), m.labels(), |_| true, series_order))
}

/// All pairs `k, k' <= 3` on `L(n, psi_q)`.
pub fn divided_power_route(n: usize, order: usize) -> Result<IdentityCheck, LangError> {
    let mut checks = Vec::new();
    for k in 0..=3 {
        for kp in 0..=3 {
            checks.push(divided_power_identity(n, k, kp, order)?);
        }
    }
    Ok(IdentityCheck::combine(&format!("divided powers on L({})", n), checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(divided_power_identity(3, 1, 0, 4).unwrap().passed());
        assert!(divided_power_identity(4, 1, 1, 4).unwrap().passed());
        assert!(divided_power_identity(4, 2, 2, 4).unwrap().passed());
    }

    #[test]
    fn a_wrong_shift_is_detected() {
        // Without the t = 1 correction the k = k' = 1 identity fails.
        let m = build_l(2, &Colouring::quantum(), 3).unwrap();
        let (xp, xm) = (m.op(Gen::Raise(0)), m.op(Gen::Lower(0)));
        assert!(!xp.mul(&xm).sub(&xm.mul(&xp)).is_zero());
    }
}
