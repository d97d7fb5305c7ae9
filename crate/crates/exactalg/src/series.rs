//! Power series in one variable h, truncated modulo h^K.

use crate::coeff::{render_terms, Coeff, RingElem};
use crate::error::SeriesError;
use crate::impl_ring_ops;
use crate::poly::{Poly1, Poly2};
use crate::rational::{factorial, ri, Rat};
use std::fmt;

/// `c_0 + c_1 h + … + c_{K−1} h^{K−1} + O(h^K)`.
///
/// Operands of different orders are truncated to the smaller one and the
/// result carries the `mixed` flag, so that such comparisons stay visible.
#[derive(Clone, Debug)]
pub struct Series<T: Coeff> {
    c: Vec<T>,
    mixed: bool,
}

impl<T: Coeff> PartialEq for Series<T> {
    /// Coefficientwise equality below the common truncation order.
    fn eq(&self, o: &Self) -> bool {
        let k = self.order().min(o.order());
        self.c[..k] == o.c[..k]
    }
}

impl<T: Coeff> Series<T> {
    /// Pads with zeros or truncates so that exactly `k` coefficients are kept.
    pub fn new(k: usize, mut c: Vec<T>) -> Self {
        c.resize(k, T::zero());
        Series { c, mixed: false }
    }
    pub fn zero(k: usize) -> Self {
        Series::new(k, vec![])
    }
    pub fn one(k: usize) -> Self {
        Series::constant(k, T::one())
    }
    pub fn constant(k: usize, a: T) -> Self {
        Series::new(k, vec![a])
    }
    pub fn from_int(k: usize, n: i64) -> Self {
        Series::constant(k, T::from_rat(ri(n)))
    }
    /// The variable h itself.
    pub fn var(k: usize) -> Self {
        Series::monomial(k, 1, T::one())
    }
    pub fn monomial(k: usize, i: usize, a: T) -> Self {
        let mut c = vec![T::zero(); k];
        if i < k {
            c[i] = a;
        }
        Series { c, mixed: false }
    }
    pub fn order(&self) -> usize {
        self.c.len()
    }
    pub fn coeffs(&self) -> &[T] {
        &self.c
    }
    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::zero)
    }
    /// True if some operation combined operands of different orders.
    pub fn is_mixed(&self) -> bool {
        self.mixed
    }
    /// Index of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero_elem())
    }
    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }
    pub fn truncate(&self, k: usize) -> Self {
        let k = k.min(self.order());
        Series { c: self.c[..k].to_vec(), mixed: self.mixed }
    }
    pub fn map<S: Coeff>(&self, f: impl Fn(&T) -> S) -> Series<S> {
        Series { c: self.c.iter().map(f).collect(), mixed: self.mixed }
    }
    pub fn scale(&self, r: &Rat) -> Self {
        self.map(|x| x.scale(r))
    }
    pub fn mul_coeff(&self, a: &T) -> Self {
        self.map(|x| x.mul_ref(a))
    }
    /// Product with a series that has rational coefficients.
    pub fn mul_rat_series(&self, o: &Series<Rat>) -> Self {
        let k = self.order().min(o.order());
        let mut c = vec![T::zero(); k];
        for (i, a) in self.c.iter().take(k).enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in o.c.iter().take(k - i).enumerate() {
                c[i + j] = c[i + j].add_ref(&a.scale(b));
            }
        }
        Series { c, mixed: self.mixed || o.mixed || self.order() != o.order() }
    }
    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let k = self.order();
        let a0 = self.c.first().ok_or(SeriesError::ZeroDivisor(0))?;
        let inv0 = a0.inv().ok_or(SeriesError::NotInvertible)?;
        let mut b: Vec<T> = vec![T::zero(); k];
        if k == 0 {
            return Ok(Series { c: b, mixed: self.mixed });
        }
        b[0] = inv0.clone();
        for i in 1..k {
            let mut s = T::zero();
            for j in 1..=i {
                s = s.add_ref(&self.c[j].mul_ref(&b[i - j]));
            }
            b[i] = s.mul_ref(&inv0).neg_ref();
        }
        Ok(Series { c: b, mixed: self.mixed })
    }
    /// Drops the first `v` coefficients, i.e. divides by h^v exactly.
    pub fn shift_down(&self, v: usize) -> Self {
        Series { c: self.c[v.min(self.order())..].to_vec(), mixed: self.mixed }
    }
    /// Multiplies by h^v, keeping the order.
    pub fn shift_up(&self, v: usize) -> Self {
        let k = self.order();
        let mut c = vec![T::zero(); v.min(k)];
        c.extend(self.c.iter().take(k.saturating_sub(v)).cloned());
        Series { c, mixed: self.mixed }
    }
    /// Exact quotient after cancelling the common power of h.
    ///
    /// The result is known modulo h^{K − v}, where v is the valuation of
    /// the divisor and K the smaller of the two input orders.
    pub fn div(&self, den: &Self) -> Result<Self, SeriesError> {
        let k = self.order().min(den.order());
        let vd = den.truncate(k).valuation().ok_or(SeriesError::ZeroDivisor(k))?;
        let vn = self.truncate(k).valuation().unwrap_or(k);
        if vn < vd {
            return Err(SeriesError::ValuationMismatch { num: vn, den: vd });
        }
        let n = self.truncate(k).shift_down(vd);
        let d = den.truncate(k).shift_down(vd);
        let mut q = n.mul_ref(&d.inv()?);
        q.mixed = self.mixed || den.mixed || self.order() != den.order();
        Ok(q)
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl<T: Coeff> RingElem for Series<T> {
    fn add_ref(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        Series {
            c: (0..k).map(|i| self.c[i].add_ref(&o.c[i])).collect(),
            mixed: self.mixed || o.mixed || self.order() != o.order(),
        }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        Series {
            c: (0..k).map(|i| self.c[i].sub_ref(&o.c[i])).collect(),
            mixed: self.mixed || o.mixed || self.order() != o.order(),
        }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        let mut c = vec![T::zero(); k];
        for i in 0..k {
            if self.c[i].is_zero_elem() {
                continue;
            }
            for j in 0..k - i {
                if !o.c[j].is_zero_elem() {
                    c[i + j] = c[i + j].add_ref(&self.c[i].mul_ref(&o.c[j]));
                }
            }
        }
        Series { c, mixed: self.mixed || o.mixed || self.order() != o.order() }
    }
    fn neg_ref(&self) -> Self {
        self.map(|x| x.neg_ref())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl_ring_ops!(Series, Coeff);

/// `exp(a) = Σ_{m<K} a^m/m!` for a series with zero constant term.
pub fn series_exp<T: Coeff>(a: &Series<T>) -> Result<Series<T>, SeriesError> {
    if !a.coeff(0).is_zero_elem() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let k = a.order();
    let mut acc = Series::one(k);
    let mut p = Series::one(k);
    for m in 1..k {
        p = p.mul_ref(a);
        acc = acc.add_ref(&p.scale(&factorial(m as u64).recip()));
    }
    Ok(acc)
}

/// exp(c·h) mod h^K for a rational c.
pub fn exp_linear(c: &Rat, k: usize) -> Series<Rat> {
    Series::new(k, (0..k).map(|m| c.pow(m as i32) / factorial(m as u64)).collect())
}

/// sinh(c·h) mod h^K.
pub fn sinh_linear(c: &Rat, k: usize) -> Series<Rat> {
    Series::new(
        k,
        (0..k).map(|m| if m % 2 == 1 { c.pow(m as i32) / factorial(m as u64) } else { ri(0) }).collect(),
    )
}

/// `f(x)` for f with rational coefficients and x with zero constant term.
pub fn compose<T: Coeff>(f: &Series<Rat>, x: &Series<T>) -> Result<Series<T>, SeriesError> {
    if !x.coeff(0).is_zero_elem() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let k = x.order().min(f.order());
    let x = x.truncate(k);
    let mut acc = Series::zero(k);
    let mut p = Series::one(k);
    for m in 0..k {
        if m > 0 {
            p = p.mul_ref(&x);
        }
        if !f.c[m].is_zero_elem() {
            acc = acc.add_ref(&p.scale(&f.c[m]));
        }
    }
    Ok(acc)
}

/// The quantum integer [k]_q = sinh(kh)/sinh(h) with q = exp(h), mod h^K.
pub fn quantum_number_series(k: i64, order: usize) -> Series<Rat> {
    quantum_number_series_d(k, 1, order)
}

/// [k]_{q^d} = sinh(dkh)/sinh(dh), mod h^K.
pub fn quantum_number_series_d(k: i64, d: i64, order: usize) -> Series<Rat> {
    let num = sinh_linear(&ri(d * k), order + 1);
    let den = sinh_linear(&ri(d), order + 1);
    num.div(&den).expect("sinh(dh) has valuation one").truncate(order)
}

/// [x]_{q^d} as a series whose coefficients are polynomials in the integer x.
pub fn quantum_number_poly(d: i64, order: usize) -> Series<Poly1<Rat>> {
    let num: Series<Poly1<Rat>> = Series::new(
        order + 1,
        (0..=order)
            .map(|m| {
                if m % 2 == 1 {
                    Poly1::monomial(m, ri(d).pow(m as i32) / factorial(m as u64))
                } else {
                    Poly1::zero()
                }
            })
            .collect(),
    );
    let den = sinh_linear(&ri(d), order + 1).shift_down(1);
    num.shift_down(1).mul_rat_series(&den.inv().expect("unit")).truncate(order)
}

impl Series<Poly1<Rat>> {
    /// Coefficientwise evaluation of polynomial coefficients.
    pub fn eval_at(&self, x: &Rat) -> Series<Rat> {
        self.map(|p| p.eval(x))
    }
}

impl Series<Poly2<Rat>> {
    pub fn eval_at(&self, u: &Rat, v: &Rat) -> Series<Rat> {
        self.map(|p| p.eval(u, v))
    }
}

impl<T: Coeff> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = vec![];
        for (i, a) in self.c.iter().enumerate() {
            for (e, s) in a.terms() {
                t.push(([i as u32, 0, e[0], e[1]], s));
            }
        }
        write!(f, "{} + O(h^{})", render_terms(t), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rq;

    #[test]
    fn exp_examples() {
        assert_eq!(series_exp(&Series::<Rat>::var(3)).unwrap(), Series::new(3, vec![ri(1), ri(1), rq(1, 2)]));
        assert_eq!(series_exp(&Series::<Rat>::zero(4)).unwrap(), Series::one(4));
        let two_h = Series::<Rat>::var(2).scale(&ri(2));
        assert_eq!(series_exp(&two_h).unwrap(), Series::new(2, vec![ri(1), ri(2)]));
        assert_eq!(series_exp(&Series::<Rat>::one(2)), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn division_examples() {
        let q = sinh_linear(&ri(2), 4).div(&sinh_linear(&ri(1), 4)).unwrap();
        assert_eq!(q, Series::new(3, vec![ri(2), ri(0), ri(1)]));
        let h2 = Series::<Rat>::monomial(5, 2, ri(1));
        let h3 = Series::<Rat>::monomial(5, 3, ri(1));
        assert_eq!(h2.div(&h3), Err(SeriesError::ValuationMismatch { num: 2, den: 3 }));
        assert_eq!(h3.div(&h3).unwrap(), Series::one(2));
    }

    #[test]
    fn quantum_numbers() {
        assert_eq!(quantum_number_series(1, 5), Series::one(5));
        assert!(quantum_number_series(0, 5).is_zero());
        assert_eq!(quantum_number_series(2, 3), Series::new(3, vec![ri(2), ri(0), ri(1)]));
        let p = quantum_number_poly(1, 6);
        for k in -5..=5 {
            assert_eq!(p.eval_at(&ri(k)), quantum_number_series(k, 6));
        }
    }

    #[test]
    fn text_format() {
        let s = Series::new(3, vec![ri(1), ri(1), rq(1, 2)]);
        assert_eq!(s.to_string(), "1 + h + 1/2*h^2 + O(h^3)");
        let p: Series<Poly1<Rat>> = Series::new(2, vec![Poly1::x(), Poly1::constant(ri(-2))]);
        assert_eq!(p.to_string(), "-2*h + u + O(h^2)");
        assert_eq!(Series::<Rat>::zero(4).to_string(), "0 + O(h^4)");
    }
}
