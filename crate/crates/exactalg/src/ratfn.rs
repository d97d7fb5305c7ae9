//! Rational functions in one variable over ℚ, with a pole check at evaluation.

use crate::coeff::RingElem;
use crate::poly::Poly1;
use crate::rational::{ri, Rat};
use num_traits::Zero;
use std::fmt;

/// `num / den`; the denominator is never zero. No cancellation is attempted,
/// so evaluation reports a pole at any root of the stored denominator.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: Poly1<Rat>,
    den: Poly1<Rat>,
}

impl PartialEq for RatFn {
    fn eq(&self, o: &RatFn) -> bool {
        self.num.mul_ref(&o.den) == o.num.mul_ref(&self.den)
    }
}

impl RatFn {
    pub fn new(num: Poly1<Rat>, den: Poly1<Rat>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }
    pub fn poly(p: Poly1<Rat>) -> Self {
        RatFn { num: p, den: Poly1::constant(ri(1)) }
    }
    pub fn constant(r: Rat) -> Self {
        RatFn::poly(Poly1::constant(r))
    }
    pub fn num(&self) -> &Poly1<Rat> {
        &self.num
    }
    pub fn den(&self) -> &Poly1<Rat> {
        &self.den
    }
    /// True when the denominator does not vanish at `x`.
    pub fn regular_at(&self, x: &Rat) -> bool {
        !self.den.eval(x).is_zero()
    }
    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
    pub fn add(&self, o: &RatFn) -> RatFn {
        RatFn::new(self.num.mul_ref(&o.den).add_ref(&o.num.mul_ref(&self.den)), self.den.mul_ref(&o.den))
    }
    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den))
    }
    /// Substitutes `u ↦ 1 − u`.
    pub fn flip(&self) -> RatFn {
        let f = Poly1::linear(ri(-1), ri(1));
        RatFn::new(self.num.compose(&f), self.den.compose(&f))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly1::constant(ri(1)) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
