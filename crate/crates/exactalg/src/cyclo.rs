//! Cyclotomic fields ℚ[x]/Φ_m with x standing for ε = exp(2πi/m).

use crate::coeff::{Coeff, RingElem, Scalar};
use crate::poly::Poly1;
use crate::rational::{fmt_rat, ri, to_f64, Rat};
use num_traits::Zero;
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// Φ_m, obtained by exact division of x^m − 1 by Φ_d for the proper divisors d of m.
pub fn cyclotomic_polynomial(m: u32) -> Poly1<Rat> {
    assert!(m >= 1, "cyclotomic order must be positive");
    thread_local! {
        static CACHE: RefCell<HashMap<u32, Poly1<Rat>>> = RefCell::new(HashMap::new());
    }
    if let Some(p) = CACHE.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    let mut num = Poly1::monomial(m as usize, ri(1));
    num = num.sub_ref(&Poly1::constant(ri(1)));
    for d in divisors(m) {
        if d < m {
            let (q, r) = num.div_rem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    CACHE.with(|c| c.borrow_mut().insert(m, num.clone()));
    num
}

/// An element of ℚ(ε), ε a primitive m-th root of unity.
///
/// `m == 0` marks a bare rational not yet placed in any field; it combines
/// with an element of any order and is what [`Coeff::zero`] and
/// [`Coeff::one`] produce. A nonzero `m` always stores exactly deg Φ_m
/// coefficients.
#[derive(Clone, Debug)]
pub struct Cyclo {
    m: u32,
    c: Vec<Rat>,
}

impl Cyclo {
    /// An element of ℚ(ε_m) from a coefficient list in powers of ε (any length).
    pub fn from_coeffs(m: u32, c: Vec<Rat>) -> Self {
        reduce(m, Poly1::new(c))
    }
    pub fn rational(m: u32, r: Rat) -> Self {
        Cyclo::from_coeffs(m, vec![r])
    }
    /// ε^k for any integer k.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        reduce(m, Poly1::monomial(e, ri(1)))
    }
    pub fn zeta(m: u32) -> Self {
        Cyclo::zeta_pow(m, 1)
    }
    pub fn order(&self) -> u32 {
        self.m
    }
    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }
    /// Places a bare rational into ℚ(ε_m); elements already in ℚ(ε_m) pass through.
    pub fn embed(&self, m: u32) -> Self {
        if self.m == m {
            self.clone()
        } else {
            assert_eq!(self.m, 0, "cannot move an element of Q(zeta({})) to Q(zeta({}))", self.m, m);
            Cyclo::rational(m, self.c.first().cloned().unwrap_or_else(|| ri(0)))
        }
    }
    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.c.iter().skip(1).all(|x| x.is_zero()) {
            Some(self.c.first().cloned().unwrap_or_else(|| ri(0)))
        } else {
            None
        }
    }
    /// Complex value at ε = exp(2πi/m), as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.m.max(1) as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, a) in self.c.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * k as f64 / m;
            re += to_f64(a) * t.cos();
            im += to_f64(a) * t.sin();
        }
        (re, im)
    }
    fn poly(&self) -> Poly1<Rat> {
        Poly1::new(self.c.clone())
    }
    fn common(&self, o: &Cyclo) -> u32 {
        match (self.m, o.m) {
            (0, b) => b,
            (a, 0) => a,
            (a, b) => {
                assert_eq!(a, b, "mixed cyclotomic orders {} and {}", a, b);
                a
            }
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Cyclo) -> bool {
        if self.m == 0 || o.m == 0 || self.m == o.m {
            let m = self.common(o);
            self.embed(m).c == o.embed(m).c
        } else {
            false
        }
    }
}

fn reduce(m: u32, p: Poly1<Rat>) -> Cyclo {
    if m == 0 {
        assert!(p.degree().unwrap_or(0) == 0, "a bare rational cannot carry powers of zeta");
        return Cyclo { m, c: vec![p.coeff(0)] };
    }
    let phi = cyclotomic_polynomial(m);
    let deg = phi.degree().unwrap_or(0);
    let r = if p.degree().is_some_and(|d| d >= deg) { p.div_rem(&phi).1 } else { p };
    Cyclo { m, c: (0..deg).map(|i| r.coeff(i)).collect() }
}

impl RingElem for Cyclo {
    fn add_ref(&self, o: &Self) -> Self {
        let m = self.common(o);
        let (a, b) = (self.embed(m), o.embed(m));
        Cyclo { m, c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect() }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let m = self.common(o);
        let (a, b) = (self.embed(m), o.embed(m));
        Cyclo { m, c: a.c.iter().zip(&b.c).map(|(x, y)| x - y).collect() }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let m = self.common(o);
        if self.m == 0 {
            return o.embed(m).scale_rat(&self.c[0]);
        }
        if o.m == 0 {
            return self.scale_rat(&o.c[0]);
        }
        reduce(m, self.poly().mul_ref(&o.poly()))
    }
    fn neg_ref(&self) -> Self {
        Cyclo { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }
    fn is_zero_elem(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl Cyclo {
    fn scale_rat(&self, r: &Rat) -> Self {
        Cyclo { m: self.m, c: self.c.iter().map(|x| x * r).collect() }
    }
}

impl Coeff for Cyclo {
    fn zero() -> Self {
        Cyclo { m: 0, c: vec![ri(0)] }
    }
    fn one() -> Self {
        Cyclo { m: 0, c: vec![ri(1)] }
    }
    fn from_rat(r: Rat) -> Self {
        Cyclo { m: 0, c: vec![r] }
    }
    fn scale(&self, r: &Rat) -> Self {
        self.scale_rat(r)
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        if self.m == 0 {
            return Some(Cyclo { m: 0, c: vec![self.c[0].recip()] });
        }
        let (g, s, _) = Poly1::ext_gcd(&self.poly(), &cyclotomic_polynomial(self.m));
        debug_assert_eq!(g, Poly1::constant(ri(1)));
        Some(reduce(self.m, s))
    }
    fn fmt_scalar(&self) -> String {
        self.to_string()
    }
    fn terms(&self) -> Vec<([u32; 2], Scalar)> {
        if self.is_zero_elem() {
            vec![]
        } else {
            vec![([0, 0], Scalar::Other(self.to_string()))]
        }
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.c.iter().map(fmt_rat).collect();
        write!(f, "[{}]@zeta({})", body.join(","), self.m)
    }
}

/// The quantum integer [a]_ε = ε^{a−1} + ε^{a−3} + … + ε^{1−a} in ℚ(ε), ε of order 2g.
///
/// This is (ε^a − ε^{−a})/(ε − ε^{−1}) whenever the denominator is nonzero,
/// and stays well defined at g = 1, where ε = −1.
pub fn quantum_number_cyclotomic(a: i64, g: u32) -> Cyclo {
    let m = 2 * g;
    if a < 0 {
        return quantum_number_cyclotomic(-a, g).neg_ref();
    }
    let mut acc = Cyclo::rational(m, ri(0));
    for k in 0..a {
        acc = acc.add_ref(&Cyclo::zeta_pow(m, a - 1 - 2 * k));
    }
    acc
}

/// [a]_ε! = [1]_ε [2]_ε … [a]_ε.
pub fn quantum_factorial_cyclotomic(a: i64, g: u32) -> Cyclo {
    let mut acc = Cyclo::rational(2 * g, ri(1));
    for k in 1..=a {
        acc = acc.mul_ref(&quantum_number_cyclotomic(k, g));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), Poly1::new(vec![ri(-1), ri(1)]));
        assert_eq!(cyclotomic_polynomial(2), Poly1::new(vec![ri(1), ri(1)]));
        assert_eq!(cyclotomic_polynomial(6), Poly1::new(vec![ri(1), ri(-1), ri(1)]));
        assert_eq!(cyclotomic_polynomial(12).degree(), Some(4));
    }

    #[test]
    fn zeta_relations() {
        for g in 1..=6u32 {
            let m = 2 * g;
            assert_eq!(Cyclo::zeta_pow(m, m as i64), Cyclo::rational(m, ri(1)));
            assert_eq!(Cyclo::zeta_pow(m, g as i64), Cyclo::rational(m, ri(-1)));
        }
    }

    #[test]
    fn quantum_numbers_at_roots() {
        assert_eq!(quantum_number_cyclotomic(1, 3), Cyclo::rational(6, ri(1)));
        assert!(quantum_number_cyclotomic(3, 3).is_zero_elem());
        assert!(quantum_number_cyclotomic(2, 2).is_zero_elem());
        // ε = exp(iπ/3): ε + ε^{-1} = 1
        assert_eq!(quantum_number_cyclotomic(2, 3), Cyclo::rational(6, ri(1)));
    }

    #[test]
    fn inverse() {
        let x = Cyclo::from_coeffs(10, vec![ri(2), ri(-1), ri(3)]);
        let y = x.inv().unwrap();
        assert_eq!(x.mul_ref(&y), Cyclo::rational(10, ri(1)));
    }
}
