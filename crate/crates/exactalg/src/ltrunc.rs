//! Truncated Laurent series: h^v times a truncated power series, v possibly negative.

use crate::coeff::{Coeff, RingElem};
use crate::error::SeriesError;
use crate::series::Series;
use std::fmt;

/// `h^val · s`, known modulo h^{val + order(s)}.
///
/// After [`LaurentTrunc::normalize`] the series part has a nonzero constant
/// term (unless the value is zero to the available precision).
#[derive(Clone, Debug)]
pub struct LaurentTrunc<T: Coeff> {
    val: i64,
    s: Series<T>,
}

impl<T: Coeff> LaurentTrunc<T> {
    pub fn new(val: i64, s: Series<T>) -> Self {
        LaurentTrunc { val, s }.normalize()
    }
    pub fn from_series(s: Series<T>) -> Self {
        LaurentTrunc::new(0, s)
    }
    /// Moves leading zero coefficients into the exponent shift.
    pub fn normalize(self) -> Self {
        match self.s.valuation() {
            Some(v) if v > 0 => LaurentTrunc { val: self.val + v as i64, s: self.s.shift_down(v) },
            _ => self,
        }
    }
    /// Normalized exponent shift; `None` for zero to the available precision.
    pub fn valuation(&self) -> Option<i64> {
        self.s.valuation().map(|v| self.val + v as i64)
    }
    /// Exponent below which nothing is known.
    pub fn precision(&self) -> i64 {
        self.val + self.s.order() as i64
    }
    pub fn is_zero(&self) -> bool {
        self.s.is_zero()
    }
    /// True iff the normalized shift is nonnegative.
    pub fn is_regular(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }
    pub fn mul(&self, o: &Self) -> Self {
        LaurentTrunc { val: self.val + o.val, s: self.s.mul_ref(&o.s) }.normalize()
    }
    pub fn add(&self, o: &Self) -> Self {
        let lo = self.val.min(o.val);
        let prec = self.precision().min(o.precision());
        let k = (prec - lo).max(0) as usize;
        let a = Series::new(k, lift(&self.s, (self.val - lo) as usize, k));
        let b = Series::new(k, lift(&o.s, (o.val - lo) as usize, k));
        LaurentTrunc { val: lo, s: a.add_ref(&b) }.normalize()
    }
    pub fn neg(&self) -> Self {
        LaurentTrunc { val: self.val, s: self.s.neg_ref() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let n = self.clone().normalize();
        if n.s.is_zero() {
            return Err(SeriesError::ZeroDivisor(n.s.order()));
        }
        Ok(LaurentTrunc { val: -n.val, s: n.s.inv()? })
    }
    /// The power series h^val · s, truncated to order `k`; fails when the shift is negative.
    pub fn to_series(&self, k: usize) -> Result<Series<T>, SeriesError> {
        let n = self.clone().normalize();
        match n.valuation() {
            None => Ok(Series::zero(k.min(n.precision().max(0) as usize))),
            Some(v) if v < 0 => Err(SeriesError::NotRegular(v)),
            Some(_) => {
                let prec = (n.precision().max(0) as usize).min(k);
                Ok(Series::new(prec, lift(&n.s, n.val as usize, prec)))
            }
        }
    }
}

fn lift<T: Coeff>(s: &Series<T>, shift: usize, k: usize) -> Vec<T> {
    let mut c = vec![T::zero(); k];
    for (i, a) in s.coeffs().iter().enumerate() {
        if i + shift < k {
            c[i + shift] = a.clone();
        }
    }
    c
}

impl<T: Coeff> fmt::Display for LaurentTrunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h^({}) * ({})", self.val, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ri, Rat};

    #[test]
    fn negative_shift_cancels() {
        let h2 = LaurentTrunc::from_series(Series::<Rat>::monomial(6, 2, ri(3)));
        let inv = h2.inv().unwrap();
        assert_eq!(inv.valuation(), Some(-2));
        assert!(!inv.is_regular());
        let back = inv.mul(&LaurentTrunc::from_series(Series::monomial(6, 3, ri(3))));
        assert!(back.is_regular());
        assert_eq!(back.to_series(4).unwrap(), Series::monomial(4, 1, ri(1)));
    }
}
