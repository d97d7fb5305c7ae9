//! Univariate and bivariate polynomials over a coefficient ring.

use crate::coeff::{render_terms, Coeff, RingElem, Scalar};
use crate::impl_ring_ops;
use crate::rational::{ri, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// Dense univariate polynomial; trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly1<T: Coeff> {
    c: Vec<T>,
}

impl<T: Coeff> Poly1<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|x| x.is_zero_elem()) {
            c.pop();
        }
        Poly1 { c }
    }
    pub fn zero() -> Self {
        Poly1 { c: vec![] }
    }
    pub fn constant(a: T) -> Self {
        Poly1::new(vec![a])
    }
    /// The variable itself.
    pub fn x() -> Self {
        Poly1::new(vec![T::zero(), T::one()])
    }
    pub fn monomial(deg: usize, a: T) -> Self {
        let mut c = vec![T::zero(); deg + 1];
        c[deg] = a;
        Poly1::new(c)
    }
    /// `a*x + b`.
    pub fn linear(a: T, b: T) -> Self {
        Poly1::new(vec![b, a])
    }
    pub fn coeffs(&self) -> &[T] {
        &self.c
    }
    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::zero)
    }
    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(x).add_ref(a);
        }
        acc
    }
    pub fn eval_int(&self, n: i64) -> T {
        self.eval(&T::from_rat(ri(n)))
    }
    /// `self(f(x))`.
    pub fn compose(&self, f: &Poly1<T>) -> Poly1<T> {
        let mut acc = Poly1::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(f).add_ref(&Poly1::constant(a.clone()));
        }
        acc
    }
    pub fn map<S: Coeff>(&self, f: impl Fn(&T) -> S) -> Poly1<S> {
        Poly1::new(self.c.iter().map(f).collect())
    }
    pub fn scale(&self, r: &Rat) -> Self {
        Poly1::new(self.c.iter().map(|a| a.scale(r)).collect())
    }
    pub fn mul_coeff(&self, a: &T) -> Self {
        Poly1::new(self.c.iter().map(|x| x.mul_ref(a)).collect())
    }
    /// Embeds as a polynomial in the first variable of [`Poly2`].
    pub fn in_u(&self) -> Poly2<T> {
        Poly2::from_terms(self.c.iter().enumerate().map(|(i, a)| ((i as u32, 0), a.clone())))
    }
    /// Embeds as a polynomial in the second variable of [`Poly2`].
    pub fn in_v(&self) -> Poly2<T> {
        Poly2::from_terms(self.c.iter().enumerate().map(|(i, a)| ((0, i as u32), a.clone())))
    }
}

impl Poly1<Rat> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly1<Rat>) -> (Poly1<Rat>, Poly1<Rat>) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.c[dd].clone();
        let mut r = self.c.clone();
        let mut q = vec![ri(0); self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = &r[top] / &lead;
            if f != ri(0) {
                for (i, di) in d.c.iter().enumerate() {
                    r[top - dd + i] = &r[top - dd + i] - &(&f * di);
                }
            }
            q[top - dd] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero_elem()) {
                r.pop();
            }
        }
        (Poly1::new(q), Poly1::new(r))
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic (or zero).
    pub fn ext_gcd(a: &Poly1<Rat>, b: &Poly1<Rat>) -> (Poly1<Rat>, Poly1<Rat>, Poly1<Rat>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly1::constant(ri(1)), Poly1::zero());
        let (mut t0, mut t1) = (Poly1::zero(), Poly1::constant(ri(1)));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub_ref(&q.mul_ref(&s1));
            let t2 = t0.sub_ref(&q.mul_ref(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if let Some(d) = r0.degree() {
            let l = r0.c[d].recip();
            (r0.scale(&l), s0.scale(&l), t0.scale(&l))
        } else {
            (r0, s0, t0)
        }
    }
}

impl<T: Coeff> RingElem for Poly1<T> {
    fn add_ref(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly1::new((0..n).map(|i| self.coeff(i).add_ref(&o.coeff(i))).collect())
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly1::new((0..n).map(|i| self.coeff(i).sub_ref(&o.coeff(i))).collect())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Poly1::zero();
        }
        let mut c = vec![T::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly1::new(c)
    }
    fn neg_ref(&self) -> Self {
        Poly1 { c: self.c.iter().map(|a| a.neg_ref()).collect() }
    }
    fn is_zero_elem(&self) -> bool {
        self.c.is_empty()
    }
}

impl<T: Coeff> Coeff for Poly1<T> {
    fn zero() -> Self {
        Poly1::zero()
    }
    fn one() -> Self {
        Poly1::constant(T::one())
    }
    fn from_rat(r: Rat) -> Self {
        Poly1::constant(T::from_rat(r))
    }
    fn scale(&self, r: &Rat) -> Self {
        Poly1::scale(self, r)
    }
    fn inv(&self) -> Option<Self> {
        if self.c.len() == 1 {
            self.c[0].inv().map(Poly1::constant)
        } else {
            None
        }
    }
    fn fmt_scalar(&self) -> String {
        format!("({})", self)
    }
    fn terms(&self) -> Vec<([u32; 2], Scalar)> {
        let mut out = vec![];
        for (i, a) in self.c.iter().enumerate() {
            for (e, s) in a.terms() {
                out.push(([e[0] + i as u32, e[1]], s));
            }
        }
        out
    }
}

impl_ring_ops!(Poly1, Coeff);

impl<T: Coeff> fmt::Display for Poly1<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.terms().into_iter().map(|(e, s)| ([0, 0, e[0], e[1]], s)).collect();
        write!(f, "{}", render_terms(t))
    }
}

/// Sparse bivariate polynomial in `(u, v)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly2<T: Coeff> {
    t: BTreeMap<(u32, u32), T>,
}

impl<T: Coeff> Poly2<T> {
    pub fn zero() -> Self {
        Poly2 { t: BTreeMap::new() }
    }
    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut p = Poly2::zero();
        for (e, a) in it {
            p.add_term(e, a);
        }
        p
    }
    pub fn constant(a: T) -> Self {
        Poly2::from_terms([((0, 0), a)])
    }
    pub fn u() -> Self {
        Poly2::from_terms([((1, 0), T::one())])
    }
    pub fn v() -> Self {
        Poly2::from_terms([((0, 1), T::one())])
    }
    /// `a*u + b*v + c`.
    pub fn affine(a: i64, b: i64, c: i64) -> Self {
        Poly2::from_terms([
            ((1, 0), T::from_rat(ri(a))),
            ((0, 1), T::from_rat(ri(b))),
            ((0, 0), T::from_rat(ri(c))),
        ])
    }
    pub fn add_term(&mut self, e: (u32, u32), a: T) {
        let s = match self.t.remove(&e) {
            Some(old) => old.add_ref(&a),
            None => a,
        };
        if !s.is_zero_elem() {
            self.t.insert(e, s);
        }
    }
    pub fn terms_map(&self) -> &BTreeMap<(u32, u32), T> {
        &self.t
    }
    pub fn coeff(&self, a: u32, b: u32) -> T {
        self.t.get(&(a, b)).cloned().unwrap_or_else(T::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    pub fn total_degree(&self) -> Option<u32> {
        self.t.keys().map(|(a, b)| a + b).max()
    }
    pub fn eval(&self, u: &T, v: &T) -> T {
        let mut acc = T::zero();
        for ((a, b), c) in &self.t {
            let mut m = c.clone();
            for _ in 0..*a {
                m = m.mul_ref(u);
            }
            for _ in 0..*b {
                m = m.mul_ref(v);
            }
            acc = acc.add_ref(&m);
        }
        acc
    }
    pub fn eval_int(&self, u: i64, v: i64) -> T {
        self.eval(&T::from_rat(ri(u)), &T::from_rat(ri(v)))
    }
    /// `self(fu(u,v), fv(u,v))`.
    pub fn compose(&self, fu: &Poly2<T>, fv: &Poly2<T>) -> Poly2<T> {
        let max_a = self.t.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let max_b = self.t.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let pu = powers(fu, max_a);
        let pv = powers(fv, max_b);
        let mut acc = Poly2::zero();
        for ((a, b), c) in &self.t {
            let m = pu[*a as usize].mul_ref(&pv[*b as usize]).mul_coeff(c);
            acc = acc.add_ref(&m);
        }
        acc
    }
    /// Restriction to the line `v = f(u)`, as a univariate polynomial in `u`.
    pub fn on_line(&self, f: &Poly1<T>) -> Poly1<T> {
        let mut acc = Poly1::zero();
        for ((a, b), c) in &self.t {
            let mut m = Poly1::monomial(*a as usize, c.clone());
            for _ in 0..*b {
                m = m.mul_ref(f);
            }
            acc = acc.add_ref(&m);
        }
        acc
    }
    pub fn map<S: Coeff>(&self, f: impl Fn(&T) -> S) -> Poly2<S> {
        Poly2::from_terms(self.t.iter().map(|(e, a)| (*e, f(a))))
    }
    pub fn scale(&self, r: &Rat) -> Self {
        Poly2::from_terms(self.t.iter().map(|(e, a)| (*e, a.scale(r))))
    }
    pub fn mul_coeff(&self, c: &T) -> Self {
        Poly2::from_terms(self.t.iter().map(|(e, a)| (*e, a.mul_ref(c))))
    }
}

fn powers<T: Coeff>(f: &Poly2<T>, n: usize) -> Vec<Poly2<T>> {
    let mut out = vec![Poly2::constant(T::one())];
    for i in 0..n {
        let next = out[i].mul_ref(f);
        out.push(next);
    }
    out
}

impl<T: Coeff> RingElem for Poly2<T> {
    fn add_ref(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, a) in &o.t {
            p.add_term(*e, a.clone());
        }
        p
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, a) in &o.t {
            p.add_term(*e, a.neg_ref());
        }
        p
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let mut p = Poly2::zero();
        for ((a1, b1), c1) in &self.t {
            for ((a2, b2), c2) in &o.t {
                p.add_term((a1 + a2, b1 + b2), c1.mul_ref(c2));
            }
        }
        p
    }
    fn neg_ref(&self) -> Self {
        Poly2 { t: self.t.iter().map(|(e, a)| (*e, a.neg_ref())).collect() }
    }
    fn is_zero_elem(&self) -> bool {
        self.t.is_empty()
    }
}

impl<T: Coeff> Coeff for Poly2<T> {
    fn zero() -> Self {
        Poly2::zero()
    }
    fn one() -> Self {
        Poly2::constant(T::one())
    }
    fn from_rat(r: Rat) -> Self {
        Poly2::constant(T::from_rat(r))
    }
    fn scale(&self, r: &Rat) -> Self {
        Poly2::scale(self, r)
    }
    fn inv(&self) -> Option<Self> {
        if self.t.len() == 1 {
            if let Some(c) = self.t.get(&(0, 0)) {
                return c.inv().map(Poly2::constant);
            }
        }
        None
    }
    fn fmt_scalar(&self) -> String {
        format!("({})", self)
    }
    fn terms(&self) -> Vec<([u32; 2], Scalar)> {
        let mut out = vec![];
        for ((a, b), c) in &self.t {
            for (e, s) in c.terms() {
                out.push(([e[0] + a, e[1] + b], s));
            }
        }
        out
    }
}

impl_ring_ops!(Poly2, Coeff);

impl<T: Coeff> fmt::Display for Poly2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.terms().into_iter().map(|(e, s)| ([0, 0, e[0], e[1]], s)).collect();
        write!(f, "{}", render_terms(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rq;

    #[test]
    fn div_rem_roundtrip() {
        let a = Poly1::new(vec![ri(-1), ri(0), ri(0), ri(1)]);
        let b = Poly1::new(vec![ri(-1), ri(1)]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, Poly1::new(vec![ri(1), ri(1), ri(1)]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = Poly1::new(vec![ri(1), ri(-1), ri(1)]);
        let b = Poly1::new(vec![ri(2), ri(1)]);
        let (g, s, t) = Poly1::ext_gcd(&a, &b);
        assert_eq!(g, Poly1::constant(ri(1)));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn compose_affine() {
        // v(u - v + 1) at (u, v) -> (-u - 2, v) is v(-u - v - 1)
        let p = Poly2::<Rat>::v() * Poly2::affine(1, -1, 1);
        let q = p.compose(&Poly2::affine(-1, 0, -2), &Poly2::v());
        assert_eq!(q, Poly2::v() * Poly2::affine(-1, -1, -1));
        assert_eq!(q.eval_int(1, 2), ri(-8));
    }

    #[test]
    fn display_order() {
        let p = Poly2::from_terms([((1, 0), ri(1)), ((0, 2), rq(-1, 2)), ((0, 1), ri(3))]);
        assert_eq!(p.to_string(), "u + 3*v - 1/2*v^2");
    }
}
