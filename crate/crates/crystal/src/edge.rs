//! Signed edges of the rank-one global crystal.

use std::fmt;

use crate::error::CrystalError;

/// Orientation of an edge: `Minus` lowers `b_{n,k-1}` to `b_{n,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// An edge `(sign, n, k)` with `1 <= k <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub sign: Sign,
    pub n: i64,
    pub k: i64,
}

impl Edge {
    pub fn new(sign: Sign, n: i64, k: i64) -> Result<Edge, CrystalError> {
        check_edge(n, k)?;
        Ok(Edge { sign, n, k })
    }
}

pub(crate) fn check_edge(n: i64, k: i64) -> Result<(), CrystalError> {
    if k < 1 || k > n {
        return Err(CrystalError::EdgeOutOfRange { n, k });
    }
    Ok(())
}

/// All edges of both signs with `n <= max_n`, in a fixed order.
pub fn edges_up_to(max_n: i64) -> impl Iterator<Item = Edge> {
    (1..=max_n).flat_map(|n| {
        (1..=n).flat_map(move |k| [Sign::Minus, Sign::Plus].into_iter().map(move |sign| Edge { sign, n, k }))
    })
}
