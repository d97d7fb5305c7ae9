//! Power series in two variables (h, h'), truncated in each variable separately.

use crate::coeff::{render_terms, Coeff, RingElem};
use crate::error::SeriesError;
use crate::impl_ring_ops;
use crate::rational::{factorial, Rat};
use crate::series::Series;
use std::fmt;

/// Σ c_{ij} h^i h'^j over i < K_h, j < K_h'.
#[derive(Clone, Debug)]
pub struct Series2<T: Coeff> {
    kh: usize,
    khp: usize,
    c: Vec<T>,
}

impl<T: Coeff> PartialEq for Series2<T> {
    fn eq(&self, o: &Self) -> bool {
        let (kh, khp) = (self.kh.min(o.kh), self.khp.min(o.khp));
        (0..kh).all(|i| (0..khp).all(|j| self.coeff(i, j) == o.coeff(i, j)))
    }
}

impl<T: Coeff> Series2<T> {
    pub fn zero(kh: usize, khp: usize) -> Self {
        Series2 { kh, khp, c: vec![T::zero(); kh * khp] }
    }
    pub fn constant(kh: usize, khp: usize, a: T) -> Self {
        let mut s = Series2::zero(kh, khp);
        s.set(0, 0, a);
        s
    }
    pub fn one(kh: usize, khp: usize) -> Self {
        Series2::constant(kh, khp, T::one())
    }
    pub fn h(kh: usize, khp: usize) -> Self {
        let mut s = Series2::zero(kh, khp);
        s.set(1, 0, T::one());
        s
    }
    pub fn hp(kh: usize, khp: usize) -> Self {
        let mut s = Series2::zero(kh, khp);
        s.set(0, 1, T::one());
        s
    }
    pub fn orders(&self) -> (usize, usize) {
        (self.kh, self.khp)
    }
    pub fn coeff(&self, i: usize, j: usize) -> T {
        if i < self.kh && j < self.khp {
            self.c[i * self.khp + j].clone()
        } else {
            T::zero()
        }
    }
    pub fn set(&mut self, i: usize, j: usize, a: T) {
        if i < self.kh && j < self.khp {
            self.c[i * self.khp + j] = a;
        }
    }
    /// Embeds a series in h.
    pub fn from_h(s: &Series<T>, khp: usize) -> Self {
        let mut out = Series2::zero(s.order(), khp);
        for i in 0..s.order() {
            out.set(i, 0, s.coeff(i));
        }
        out
    }
    /// Embeds a series in h'.
    pub fn from_hp(s: &Series<T>, kh: usize) -> Self {
        let mut out = Series2::zero(kh, s.order());
        for j in 0..s.order() {
            out.set(0, j, s.coeff(j));
        }
        out
    }
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero_elem())
    }
    pub fn scale(&self, r: &Rat) -> Self {
        Series2 { kh: self.kh, khp: self.khp, c: self.c.iter().map(|x| x.scale(r)).collect() }
    }
    pub fn map<S: Coeff>(&self, f: impl Fn(&T) -> S) -> Series2<S> {
        Series2 { kh: self.kh, khp: self.khp, c: self.c.iter().map(f).collect() }
    }
    /// The slice h' = 0.
    pub fn at_hp_zero(&self) -> Series<T> {
        Series::new(self.kh, (0..self.kh).map(|i| self.coeff(i, 0)).collect())
    }
    /// The coefficient of h'^j, as a series in h.
    pub fn hp_coeff(&self, j: usize) -> Series<T> {
        Series::new(self.kh, (0..self.kh).map(|i| self.coeff(i, j)).collect())
    }
    /// The coefficient of h^i, as a series in h'.
    pub fn h_coeff(&self, i: usize) -> Series<T> {
        Series::new(self.khp, (0..self.khp).map(|j| self.coeff(i, j)).collect())
    }
    fn restrict(&self, kh: usize, khp: usize) -> Self {
        let mut out = Series2::zero(kh, khp);
        for i in 0..kh {
            for j in 0..khp {
                out.set(i, j, self.coeff(i, j));
            }
        }
        out
    }
    /// exp(a) for a series with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeff(0, 0).is_zero_elem() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = Series2::one(self.kh, self.khp);
        let mut p = acc.clone();
        for m in 1..self.kh + self.khp {
            p = p.mul_ref(self);
            if p.is_zero() {
                break;
            }
            acc = acc.add_ref(&p.scale(&factorial(m as u64).recip()));
        }
        Ok(acc)
    }
    /// `f(x)` for a univariate rational series f and x with zero constant term.
    pub fn compose_into(f: &Series<Rat>, x: &Series2<T>) -> Result<Self, SeriesError> {
        if !x.coeff(0, 0).is_zero_elem() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let need = x.kh + x.khp - 1;
        assert!(f.order() >= need, "outer series too short for the requested bi-order");
        let mut acc = Series2::zero(x.kh, x.khp);
        let mut p = Series2::one(x.kh, x.khp);
        for m in 0..need {
            if m > 0 {
                p = p.mul_ref(x);
            }
            let fm = f.coeff(m);
            if !fm.is_zero_elem() {
                acc = acc.add_ref(&p.scale(&fm));
            }
        }
        Ok(acc)
    }
}

impl<T: Coeff> RingElem for Series2<T> {
    fn add_ref(&self, o: &Self) -> Self {
        let (kh, khp) = (self.kh.min(o.kh), self.khp.min(o.khp));
        let (a, b) = (self.restrict(kh, khp), o.restrict(kh, khp));
        Series2 { kh, khp, c: a.c.iter().zip(&b.c).map(|(x, y)| x.add_ref(y)).collect() }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let (kh, khp) = (self.kh.min(o.kh), self.khp.min(o.khp));
        let (a, b) = (self.restrict(kh, khp), o.restrict(kh, khp));
        Series2 { kh, khp, c: a.c.iter().zip(&b.c).map(|(x, y)| x.sub_ref(y)).collect() }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let (kh, khp) = (self.kh.min(o.kh), self.khp.min(o.khp));
        let mut out: Series2<T> = Series2::zero(kh, khp);
        for i1 in 0..kh {
            for j1 in 0..khp {
                let a = self.coeff(i1, j1);
                if a.is_zero_elem() {
                    continue;
                }
                for i2 in 0..kh - i1 {
                    for j2 in 0..khp - j1 {
                        let b = o.coeff(i2, j2);
                        if b.is_zero_elem() {
                            continue;
                        }
                        let idx = (i1 + i2) * khp + j1 + j2;
                        out.c[idx] = out.c[idx].add_ref(&a.mul_ref(&b));
                    }
                }
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        self.map(|x| x.neg_ref())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl_ring_ops!(Series2, Coeff);

impl<T: Coeff> fmt::Display for Series2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = vec![];
        for i in 0..self.kh {
            for j in 0..self.khp {
                for (e, s) in self.coeff(i, j).terms() {
                    t.push(([i as u32, j as u32, e[0], e[1]], s));
                }
            }
        }
        write!(f, "{} + O(h^{}, h'^{})", render_terms(t), self.kh, self.khp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ri;
    use crate::series::exp_linear;

    #[test]
    fn exp_of_sum_factorizes() {
        let x = Series2::<Rat>::h(4, 3).add_ref(&Series2::hp(4, 3).scale(&ri(2)));
        let lhs = x.exp().unwrap();
        let rhs = Series2::from_h(&exp_linear(&ri(1), 4), 3).mul_ref(&Series2::from_hp(&exp_linear(&ri(2), 3), 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_two_variables() {
        let x = Series2::<Rat>::h(2, 2).add_ref(&Series2::hp(2, 2));
        assert_eq!(x.to_string(), "h + h' + O(h^2, h'^2)");
    }
}
