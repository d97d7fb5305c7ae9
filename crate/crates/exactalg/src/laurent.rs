//! Laurent polynomials Σ c_k u^k with k ∈ ℤ.

use crate::coeff::{Coeff, RingElem};
use crate::rational::{ri, Rat};
use crate::series::{exp_linear, Series};
use std::collections::BTreeMap;

/// Finitely supported map from integer exponents to coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<T: Coeff> {
    t: BTreeMap<i64, T>,
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { t: BTreeMap::new() }
    }
    pub fn monomial(k: i64, a: T) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, a);
        p
    }
    pub fn constant(a: T) -> Self {
        LaurentPoly::monomial(0, a)
    }
    pub fn add_term(&mut self, k: i64, a: T) {
        let s = match self.t.remove(&k) {
            Some(b) => b.add_ref(&a),
            None => a,
        };
        if !s.is_zero_elem() {
            self.t.insert(k, s);
        }
    }
    pub fn terms(&self) -> &BTreeMap<i64, T> {
        &self.t
    }
    pub fn coeff(&self, k: i64) -> T {
        self.t.get(&k).cloned().unwrap_or_else(T::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (k, a) in &o.t {
            p.add_term(*k, a.clone());
        }
        p
    }
    pub fn sub(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (k, a) in &o.t {
            p.add_term(*k, a.neg_ref());
        }
        p
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut p = LaurentPoly::zero();
        for (k1, a) in &self.t {
            for (k2, b) in &o.t {
                p.add_term(k1 + k2, a.mul_ref(b));
            }
        }
        p
    }
    pub fn scale(&self, r: &Rat) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, a) in &self.t {
            p.add_term(*k, a.scale(r));
        }
        p
    }
    /// `u ↦ u^s` for a nonzero integer s (covers u ↦ 1/u with s = −1).
    pub fn substitute_power(&self, s: i64) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, a) in &self.t {
            p.add_term(k * s, a.clone());
        }
        p
    }
    /// `u ↦ −u`.
    pub fn negate_variable(&self) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, a) in &self.t {
            p.add_term(*k, if k % 2 == 0 { a.clone() } else { a.neg_ref() });
        }
        p
    }
    /// Value at u = x for an invertible x.
    pub fn eval(&self, x: &T) -> T {
        let xi = x.inv().expect("Laurent evaluation needs an invertible point");
        let mut acc = T::zero();
        for (k, a) in &self.t {
            let base = if *k >= 0 { x } else { &xi };
            let mut m = a.clone();
            for _ in 0..k.unsigned_abs() {
                m = m.mul_ref(base);
            }
            acc = acc.add_ref(&m);
        }
        acc
    }
    pub fn map<S: Coeff>(&self, f: impl Fn(&T) -> S) -> LaurentPoly<S> {
        let mut p = LaurentPoly::zero();
        for (k, a) in &self.t {
            p.add_term(*k, f(a));
        }
        p
    }
}

impl LaurentPoly<Rat> {
    /// Value at u = exp(c·h), as a series mod h^K.
    pub fn eval_exp(&self, c: &Rat, k: usize) -> Series<Rat> {
        let mut acc = Series::zero(k);
        for (e, a) in &self.t {
            acc = acc.add_ref(&exp_linear(&(c * ri(*e)), k).scale(a));
        }
        acc
    }
}
