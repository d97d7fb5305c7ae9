//! Identity reports shared by the module checks.

use exactalg::{Coeff, RingElem, Series, Series2, SparseMat};

/// Outcome of checking that a residual operator vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    /// Lowest order at which some residual entry is nonzero, `None` when it
    /// vanishes to the available precision.
    pub nonzero_order: Option<usize>,
    /// Label of the first basis vector on which the residual is nonzero,
    /// or a short description for combinatorial checks.
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.nonzero_order.is_none()
    }

    /// A yes/no check; a failure is reported at order 0.
    pub fn verdict(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        IdentityCheck {
            name: name.into(),
            nonzero_order: if ok { None } else { Some(0) },
            witness: if ok { None } else { Some(witness()) },
        }
    }

    /// Scans `residual` over the columns accepted by `keep`.
    pub fn from_residual<T: RingElem>(
        name: &str,
        residual: &SparseMat<T>,
        labels: &[String],
        keep: impl Fn(usize) -> bool,
        order_of: impl Fn(&T) -> Option<usize>,
    ) -> Self {
        let mut best: Option<(usize, usize)> = None;
        for ((_, col), a) in residual.entries() {
            if !keep(*col) {
                continue;
            }
            if let Some(o) = order_of(a) {
                if best.is_none_or(|(bo, bc)| (o, *col) < (bo, bc)) {
                    best = Some((o, *col));
                }
            }
        }
        IdentityCheck {
            name: name.into(),
            nonzero_order: best.map(|(o, _)| o),
            witness: best.map(|(_, c)| labels[c].clone()),
        }
    }

    /// The worst of several checks under a common name.
    pub fn combine(name: &str, checks: impl IntoIterator<Item = IdentityCheck>) -> Self {
        let mut out = IdentityCheck { name: name.into(), nonzero_order: None, witness: None };
        for c in checks {
            if let Some(o) = c.nonzero_order {
                if out.nonzero_order.is_none_or(|b| o < b) {
                    out.nonzero_order = Some(o);
                    out.witness = c.witness.map(|w| format!("{}: {}", c.name, w));
                }
            }
        }
        out
    }
}

/// Valuation of a one-variable series.
pub fn series_order<T: Coeff>(s: &Series<T>) -> Option<usize> {
    s.valuation()
}

/// Lowest total degree of a nonzero coefficient of a two-variable series.
pub fn series2_order<T: Coeff>(s: &Series2<T>) -> Option<usize> {
    let (kh, khp) = s.orders();
    let mut best: Option<usize> = None;
    for i in 0..kh {
        for j in 0..khp {
            if !s.coeff(i, j).is_zero_elem() && best.is_none_or(|b| i + j < b) {
                best = Some(i + j);
            }
        }
    }
    best
}
