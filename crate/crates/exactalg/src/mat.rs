//! Sparse matrices over any [`RingElem`], used for operators on finite bases.

use crate::coeff::RingElem;
use std::collections::BTreeMap;

/// Square or rectangular matrix storing only nonzero entries, keyed by `(row, col)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<T: RingElem> {
    rows: usize,
    cols: usize,
    e: BTreeMap<(usize, usize), T>,
}

impl<T: RingElem> SparseMat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, e: BTreeMap::new() }
    }
    pub fn identity(n: usize, one: T) -> Self {
        let mut m = SparseMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }
    pub fn diagonal(vals: Vec<T>) -> Self {
        let n = vals.len();
        let mut m = SparseMat::zero(n, n);
        for (i, a) in vals.into_iter().enumerate() {
            m.set(i, i, a);
        }
        m
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn set(&mut self, r: usize, c: usize, a: T) {
        assert!(r < self.rows && c < self.cols, "entry ({}, {}) out of range", r, c);
        if a.is_zero_elem() {
            self.e.remove(&(r, c));
        } else {
            self.e.insert((r, c), a);
        }
    }
    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        self.e.get(&(r, c))
    }
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &T)> {
        self.e.iter()
    }
    pub fn is_zero(&self) -> bool {
        self.e.values().all(|a| a.is_zero_elem())
    }
    /// Nonzero entries of column `c`, as `(row, value)`.
    pub fn column(&self, c: usize) -> Vec<(usize, T)> {
        self.e.iter().filter(|((_, cc), _)| *cc == c).map(|((r, _), a)| (*r, a.clone())).collect()
    }
    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.shape(), o.shape());
        let mut m = self.clone();
        for (k, a) in &o.e {
            let s = match m.e.get(k) {
                Some(b) => b.add_ref(a),
                None => a.clone(),
            };
            m.set(k.0, k.1, s);
        }
        m
    }
    pub fn neg(&self) -> Self {
        SparseMat { rows: self.rows, cols: self.cols, e: self.e.iter().map(|(k, a)| (*k, a.neg_ref())).collect() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut by_row: BTreeMap<usize, Vec<(usize, &T)>> = BTreeMap::new();
        for ((r, c), a) in &o.e {
            by_row.entry(*r).or_default().push((*c, a));
        }
        let mut m: SparseMat<T> = SparseMat::zero(self.rows, o.cols);
        for ((r, k), a) in &self.e {
            if let Some(list) = by_row.get(k) {
                for (c, b) in list {
                    let p = a.mul_ref(b);
                    let s = match m.e.get(&(*r, *c)) {
                        Some(x) => x.add_ref(&p),
                        None => p,
                    };
                    m.set(*r, *c, s);
                }
            }
        }
        m
    }
    /// Entrywise product with a scalar on the left.
    pub fn scale(&self, a: &T) -> Self {
        let mut m = SparseMat::zero(self.rows, self.cols);
        for (k, b) in &self.e {
            m.set(k.0, k.1, a.mul_ref(b));
        }
        m
    }
    pub fn map<S: RingElem>(&self, f: impl Fn(&T) -> S) -> SparseMat<S> {
        let mut m = SparseMat::zero(self.rows, self.cols);
        for (k, a) in &self.e {
            m.set(k.0, k.1, f(a));
        }
        m
    }
    /// `self^e`, with `one` the unit of the entry ring.
    pub fn pow(&self, e: u32, one: &T) -> Self {
        let mut acc = SparseMat::identity(self.rows, one.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
}
