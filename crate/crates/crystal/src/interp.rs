//! The isogenic interpolation colouring over rational functions in `u`
//! without pole at 0 and 1, and specialisation along `u -> beta`.

use std::sync::Arc;

use exactalg::{ri, Poly1, Rat, RatFn, RingElem, Series};

use crate::colouring::Colouring;
use crate::edge::{check_edge, Sign};
use crate::error::CrystalError;

/// `psi_u^{+-}(n, k) = u psi(n, k) + (1 - u) psi'(n, k / xi)` when `xi | k`,
/// and `u psi(n, k) + (1 - u)` otherwise.
///
/// With `flipped` set, `u` is replaced by `1 - u`, which exchanges the two
/// endpoint specialisations.
#[derive(Debug, Clone)]
pub struct InterpColouring {
    psi: Colouring,
    psi_prime: Colouring,
    xi: i64,
    flipped: bool,
}

/// Value of a colouring that must not depend on `h`, checked below `h^4` or
/// below the colouring's own truncation if that is smaller.
pub fn field_value(psi: &Colouring, sign: Sign, n: i64, k: i64) -> Result<Rat, CrystalError> {
    let s = match psi.eval(sign, n, k, 4) {
        Err(CrystalError::Truncation { have, .. }) if have >= 1 => psi.eval(sign, n, k, have)?,
        other => other?,
    };
    if s.coeffs()[1..].iter().any(|c| !c.is_zero_elem()) {
        return Err(CrystalError::NotFieldValued { sign, n, k });
    }
    Ok(s.coeff(0))
}

/// Builds the interpolation colouring after checking that both endpoint
/// colourings are field-valued and admissible on edges with `n <= check_n`.
pub fn interpolation_colouring(
    psi: &Colouring,
    psi_prime: &Colouring,
    xi: i64,
    flipped: bool,
    check_n: i64,
) -> Result<InterpColouring, CrystalError> {
    if xi < 1 {
        return Err(CrystalError::BadScaling(xi));
    }
    for c in [psi, psi_prime] {
        for e in crate::edge::edges_up_to(check_n) {
            if field_value(c, e.sign, e.n, e.k)? == ri(0) {
                return Err(CrystalError::NotAdmissible { sign: e.sign, n: e.n, k: e.k });
            }
        }
    }
    Ok(InterpColouring { psi: psi.clone(), psi_prime: psi_prime.clone(), xi, flipped })
}

impl InterpColouring {
    pub fn eval(&self, sign: Sign, n: i64, k: i64) -> Result<RatFn, CrystalError> {
        check_edge(n, k)?;
        let a = field_value(&self.psi, sign, n, k)?;
        let b = if k % self.xi == 0 { field_value(&self.psi_prime, sign, n, k / self.xi)? } else { ri(1) };
        let f = RatFn::poly(Poly1::linear(a - &b, b));
        Ok(if self.flipped { f.flip() } else { f })
    }

    /// Pushforward along `u -> beta`.
    pub fn specialize(&self, beta: &Rat) -> Colouring {
        let me = Arc::new(self.clone());
        let b = beta.clone();
        let label = format!("interp at u={}", exactalg::rational::fmt_rat(beta));
        Colouring::pointwise(&label, move |sign, n, k, order| {
            let f = me.eval(sign, n, k).expect("values are polynomials in u");
            Series::constant(order, specialize_value(&f, &b).expect("polynomial values have no pole"))
        })
    }
}

/// Value of `f` at `u = beta`, or a pole error.
pub fn specialize_value(f: &RatFn, beta: &Rat) -> Result<Rat, CrystalError> {
    f.eval(beta).ok_or_else(|| CrystalError::Pole(exactalg::rational::fmt_rat(beta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::rq;

    fn table_psi() -> Colouring {
        Colouring::pointwise("k+1", |_, _, k, o| Series::from_int(o, k + 1))
    }

    #[test]
    fn endpoints() {
        let psi = table_psi();
        let psi_p = Colouring::Classical;
        let iu = interpolation_colouring(&psi, &psi_p, 2, false, 6).unwrap();
        let at1 = iu.specialize(&ri(1));
        let at0 = iu.specialize(&ri(0));
        for n in 1..7 {
            for k in 1..=n {
                assert_eq!(at1.eval(Sign::Minus, n, k, 1).unwrap(), Series::from_int(1, k + 1));
                let want = if k % 2 == 0 { k / 2 } else { 1 };
                assert_eq!(at0.eval(Sign::Plus, n, k, 1).unwrap(), Series::from_int(1, want));
            }
        }
        let flipped = interpolation_colouring(&psi, &psi_p, 2, true, 6).unwrap();
        assert_eq!(flipped.specialize(&ri(0)).eval(Sign::Minus, 3, 2, 1).unwrap(), Series::from_int(1, 3));
    }

    #[test]
    fn trivial_isogeny_is_affine_blend() {
        let iu = interpolation_colouring(&table_psi(), &Colouring::Classical, 1, false, 4).unwrap();
        let f = iu.eval(Sign::Minus, 4, 3).unwrap();
        assert_eq!(f, RatFn::poly(Poly1::linear(ri(1), ri(3))));
    }

    #[test]
    fn poles_are_reported() {
        let f = RatFn::new(Poly1::constant(ri(1)), Poly1::linear(ri(1), ri(-2)));
        assert!(specialize_value(&f, &ri(2)).is_err());
        assert_eq!(specialize_value(&f, &ri(0)).unwrap(), rq(-1, 2));
    }

    #[test]
    fn rejects_h_dependent_endpoint() {
        assert!(interpolation_colouring(&Colouring::quantum(), &Colouring::Classical, 1, false, 3).is_err());
    }
}
