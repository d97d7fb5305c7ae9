//! Ring traits shared by every coefficient type in the crate.

use crate::rational::{fmt_rat, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// A commutative ring element that knows its own zero test.
///
/// Methods take references so that generic code never has to move values.
pub trait RingElem: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

/// A ℚ-algebra with context-free zero and one.
pub trait Coeff: RingElem {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: Rat) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    /// Multiplicative inverse inside the coefficient ring, when it exists.
    fn inv(&self) -> Option<Self>;
    /// Scalar rendering used by the textual series format.
    fn fmt_scalar(&self) -> String;
    /// Flattened terms `(u exponent, v exponent, scalar)` for the textual format.
    fn terms(&self) -> Vec<([u32; 2], Scalar)>;
}

/// A printable scalar attached to a monomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rat(Rat),
    Other(String),
}

impl Scalar {
    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }
}

impl RingElem for Rat {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn fmt_scalar(&self) -> String {
        fmt_rat(self)
    }
    fn terms(&self) -> Vec<([u32; 2], Scalar)> {
        if Zero::is_zero(self) {
            vec![]
        } else {
            vec![([0, 0], Scalar::Rat(self.clone()))]
        }
    }
}

/// Renders a sum of monomials in the canonical order: total degree first,
/// then lexicographic in the exponent tuple `(h, h', u, v)` with h ranked
/// highest, so that `h` precedes `h'`, which precedes `u`, which precedes `v`.
pub fn render_terms(mut terms: Vec<([u32; 4], Scalar)>) -> String {
    const NAMES: [&str; 4] = ["h", "h'", "u", "v"];
    terms.sort_by(|a, b| {
        let da: u32 = a.0.iter().sum();
        let db: u32 = b.0.iter().sum();
        da.cmp(&db).then(b.0.cmp(&a.0))
    });
    let mut out = String::new();
    for (idx, (e, s)) in terms.iter().enumerate() {
        let mono: Vec<String> = e
            .iter()
            .zip(NAMES)
            .filter(|(x, _)| **x > 0)
            .map(|(x, n)| if *x == 1 { n.to_string() } else { format!("{}^{}", n, x) })
            .collect();
        let (neg, body) = match s {
            Scalar::Rat(r) => (r.is_negative(), fmt_rat(&r.abs())),
            Scalar::Other(t) => (false, t.clone()),
        };
        let unit = matches!(s, Scalar::Rat(r) if r.abs().is_one());
        let term = if mono.is_empty() {
            body
        } else if unit {
            mono.join("*")
        } else {
            format!("{}*{}", body, mono.join("*"))
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
