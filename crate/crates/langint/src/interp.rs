//! The interpolation polynomial `P` and the polynomials `{a} = P(Q^a)`.

use exactalg::{ri, rq, Coeff, Cyclo, LaurentPoly, Rat, RingElem, Series};

use crate::error::LangError;

/// Data attached to `g`: the root of unity `eps` of order `2g`, the
/// interpolation polynomial and `g' = g / 2` (g even) or `g` (g odd).
#[derive(Debug, Clone)]
pub struct InterpParams {
    pub g: u32,
    pub eps: Cyclo,
    pub poly: LaurentPoly<Cyclo>,
    pub g_prime: u32,
}

impl InterpParams {
    pub fn new(g: u32) -> Result<Self, LangError> {
        if g == 0 {
            return Err(LangError::ZeroG);
        }
        Ok(InterpParams { g, eps: eps(g), poly: interpolation_poly(g), g_prime: g_prime(g) })
    }
}

/// The primitive `2g`-th root of unity `eps`.
pub fn eps(g: u32) -> Cyclo {
    Cyclo::zeta(2 * g)
}

/// `eps^k` in `Q(eps)`.
pub fn eps_pow(g: u32, k: i64) -> Cyclo {
    Cyclo::zeta_pow(2 * g, k)
}

pub fn g_prime(g: u32) -> u32 {
    if g % 2 == 0 {
        g / 2
    } else {
        g
    }
}

/// `P(u) = 1/2 (u^{g-1} + u^{1-g}) prod_{k=1}^{g-1} (eps^k u - eps^{-k} u^{-1}) / (eps^k - eps^{-k})`.
pub fn interpolation_poly(g: u32) -> LaurentPoly<Cyclo> {
    let m = 2 * g;
    let gi = g as i64;
    let half = Cyclo::rational(m, rq(1, 2));
    let mut p = LaurentPoly::monomial(gi - 1, half.clone());
    p.add_term(1 - gi, half);
    for k in 1..gi {
        let (ek, emk) = (eps_pow(g, k), eps_pow(g, -k));
        let inv = ek.sub_ref(&emk).inv().expect("eps^k != eps^-k for 0 < k < g");
        let mut f = LaurentPoly::monomial(1, ek.mul_ref(&inv));
        f.add_term(-1, emk.neg_ref().mul_ref(&inv));
        p = p.mul(&f);
    }
    p
}

/// `P` with its coefficients read in `Q`. The interpolation conditions are
/// stable under the Galois group, so every coefficient is rational.
pub fn rational_poly(g: u32) -> Result<LaurentPoly<Rat>, LangError> {
    let mut out = LaurentPoly::zero();
    for (k, c) in interpolation_poly(g).terms() {
        out.add_term(*k, c.as_rational().ok_or(LangError::NotRational(*k))?);
    }
    Ok(out)
}

/// `{a} = P(Q^a)` with `Q = exp(h)`, modulo `h^order`.
pub fn brace(a: i64, g: u32, order: usize) -> Result<Series<Rat>, LangError> {
    Ok(rational_poly(g)?.eval_exp(&ri(a), order))
}

/// `P(eps^a)`, the value of `{a}` at `Q = eps`.
pub fn brace_at_eps(a: i64, g: u32) -> Cyclo {
    interpolation_poly(g).eval(&eps_pow(g, a))
}

/// `{a}` at `Q = eps` read as a boolean: true for `1`, false for `0`.
///
/// # Panics
/// If the value is neither `0` nor `1`.
pub fn deformed_at_eps(a: i64, g: u32) -> bool {
    let v = brace_at_eps(a, g);
    if v == Cyclo::one() {
        true
    } else if v.is_zero_elem() {
        false
    } else {
        panic!("P(eps^{}) = {} is neither 0 nor 1", a, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_is_constant() {
        assert_eq!(rational_poly(1).unwrap(), LaurentPoly::constant(ri(1)));
        assert_eq!(brace(5, 1, 4).unwrap(), Series::one(4));
    }

    #[test]
    fn g2_is_a_square() {
        // (u + u^-1)^2 / 4
        let mut want = LaurentPoly::monomial(2, rq(1, 4));
        want.add_term(0, rq(1, 2));
        want.add_term(-2, rq(1, 4));
        assert_eq!(rational_poly(2).unwrap(), want);
        assert!(brace_at_eps(0, 2) == Cyclo::one());
        assert!(brace_at_eps(1, 2).is_zero_elem());
    }

    #[test]
    fn brace_is_one_at_h_zero() {
        for g in 1..=4 {
            for a in -5..=5 {
                assert_eq!(brace(a, g, 3).unwrap().coeff(0), ri(1));
            }
        }
        assert_eq!(brace(0, 3, 5).unwrap(), Series::one(5));
    }

    #[test]
    fn symmetries() {
        for g in 1..=6 {
            let p = rational_poly(g).unwrap();
            assert_eq!(p.substitute_power(-1), p);
            assert_eq!(p.negate_variable(), p);
        }
    }
}
