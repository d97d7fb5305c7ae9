//! Colourings of the rank-one global crystal with values in `Q[[h]]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use exactalg::series::quantum_number_poly;
use exactalg::series::quantum_number_series_d;
use exactalg::{ri, Poly2, Rat, RingElem, Series};

use crate::edge::{check_edge, Sign};
use crate::error::CrystalError;

/// A pointwise rule `(sign, n, k, order) -> value`.
pub type PointFn = Arc<dyn Fn(Sign, i64, i64, usize) -> Series<Rat> + Send + Sync>;

/// A colouring `psi^{+-}(n, k)` of the crystal.
#[derive(Clone)]
pub enum Colouring {
    /// `psi(n, k) = k` for both signs.
    Classical,
    /// `psi(n, k) = [k]_{q^d}` with `q = exp(h)`.
    Quantum { d: i64 },
    /// Two elements of `Q[u, v][[h]]`, evaluated at `(u, v) = (n, k)`.
    PolySeries { minus: Series<Poly2<Rat>>, plus: Series<Poly2<Rat>> },
    /// An opaque rule, with a label used in reports.
    Pointwise { label: String, f: PointFn },
    /// A finite table; edges outside it have no value.
    Table(BTreeMap<(Sign, i64, i64), Series<Rat>>),
    /// The isogeny transform with scaling `xi` and shift `d`.
    Isogeny { base: Box<Colouring>, xi: i64, d: i64 },
    /// The Cartan dual, exchanging the two signs.
    Swapped(Box<Colouring>),
    /// `psi^- = 1` and `psi^+(n, k) = [base](n, n - k + 1)`, congruent to
    /// `base`.
    Normalized(Box<Colouring>),
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl Colouring {
    pub fn quantum() -> Colouring {
        Colouring::Quantum { d: 1 }
    }

    /// Both signs given by the same element of `Q[v][[h]]`.
    pub fn symmetric_poly(p: Series<Poly2<Rat>>) -> Colouring {
        Colouring::PolySeries { minus: p.clone(), plus: p }
    }

    pub fn pointwise(label: &str, f: impl Fn(Sign, i64, i64, usize) -> Series<Rat> + Send + Sync + 'static) -> Colouring {
        Colouring::Pointwise { label: label.to_string(), f: Arc::new(f) }
    }

    /// Canonical one-line description.
    pub fn describe(&self) -> String {
        match self {
            Colouring::Classical => "classical".into(),
            Colouring::Quantum { d } => format!("quantum(d={})", d),
            Colouring::PolySeries { minus, plus } => format!("poly(minus = {}; plus = {})", minus, plus),
            Colouring::Pointwise { label, .. } => format!("pointwise({})", label),
            Colouring::Table(t) => format!("table({} entries)", t.len()),
            Colouring::Isogeny { base, xi, d } => format!("isogeny(xi={}, d={}; {})", xi, d, base.describe()),
            Colouring::Swapped(b) => format!("dual({})", b.describe()),
            Colouring::Normalized(b) => format!("normalized({})", b.describe()),
        }
    }

    /// Value `psi^{sign}(n, k)` modulo `h^order`.
    pub fn eval(&self, sign: Sign, n: i64, k: i64, order: usize) -> Result<Series<Rat>, CrystalError> {
        check_edge(n, k)?;
        self.eval_unchecked(sign, n, k, order)
    }

    fn eval_unchecked(&self, sign: Sign, n: i64, k: i64, order: usize) -> Result<Series<Rat>, CrystalError> {
        Ok(match self {
            Colouring::Classical => Series::from_int(order, k),
            Colouring::Quantum { d } => quantum_number_series_d(k, *d, order),
            Colouring::PolySeries { minus, plus } => {
                let p = if sign == Sign::Minus { minus } else { plus };
                if p.order() < order {
                    return Err(CrystalError::Truncation { have: p.order(), want: order });
                }
                p.truncate(order).eval_at(&ri(n), &ri(k))
            }
            Colouring::Pointwise { f, .. } => f(sign, n, k, order).truncate(order),
            Colouring::Table(t) => {
                let s = t.get(&(sign, n, k)).ok_or(CrystalError::MissingValue { sign, n, k })?;
                if s.order() < order {
                    return Err(CrystalError::Truncation { have: s.order(), want: order });
                }
                s.truncate(order)
            }
            Colouring::Isogeny { base, xi, d } => {
                check_isogeny(*xi, *d)?;
                let mut acc = Series::one(order);
                for kp in 1..=*xi {
                    acc = acc.mul_ref(&base.eval(sign, xi * n + 2 * d, xi * (k - 1) + kp + d, order)?);
                }
                acc
            }
            Colouring::Swapped(b) => b.eval(sign.flip(), n, k, order)?,
            Colouring::Normalized(b) => match sign {
                Sign::Minus => Series::one(order),
                Sign::Plus => b.congruence(n, n - k + 1, order)?,
            },
        })
    }

    /// Congruence class value `[psi](n, k) = psi^-(n, k) psi^+(n, n - k + 1)`.
    pub fn congruence(&self, n: i64, k: i64, order: usize) -> Result<Series<Rat>, CrystalError> {
        check_edge(n, k)?;
        Ok(self.eval(Sign::Minus, n, k, order)?.mul_ref(&self.eval(Sign::Plus, n, n - k + 1, order)?))
    }

    /// `[psi](n, k)! = prod_{k'=1}^{k} [psi](n, k')`, with value 1 at `k = 0`.
    pub fn factorial_product(&self, n: i64, k: i64, order: usize) -> Result<Series<Rat>, CrystalError> {
        if k > n || k < 0 {
            return Err(CrystalError::FactorialRange { n, k });
        }
        let mut acc = Series::one(order);
        for kp in 1..=k {
            acc = acc.mul_ref(&self.congruence(n, kp, order)?);
        }
        Ok(acc)
    }

    /// Representative of `psi^{sign}` in `Q[u, v][[h]]`, when the variant has
    /// a closed form.
    pub fn closed_form(&self, sign: Sign, order: usize) -> Result<Option<Series<Poly2<Rat>>>, CrystalError> {
        Ok(match self {
            Colouring::Classical => Some(Series::constant(order, Poly2::v())),
            Colouring::Quantum { d } => Some(quantum_number_poly(*d, order).map(|p| p.in_v())),
            Colouring::PolySeries { minus, plus } => {
                let p = if sign == Sign::Minus { minus } else { plus };
                if p.order() < order {
                    return Err(CrystalError::Truncation { have: p.order(), want: order });
                }
                Some(p.truncate(order))
            }
            Colouring::Pointwise { .. } | Colouring::Table(_) => None,
            Colouring::Isogeny { base, xi, d } => {
                check_isogeny(*xi, *d)?;
                let Some(b) = base.closed_form(sign, order)? else { return Ok(None) };
                let fu = Poly2::affine(*xi, 0, 2 * d);
                let mut acc = Series::one(order);
                for kp in 1..=*xi {
                    let fv = Poly2::affine(0, *xi, kp + d - xi);
                    acc = acc.mul_ref(&b.map(|c| c.compose(&fu, &fv)));
                }
                Some(acc)
            }
            Colouring::Swapped(b) => b.closed_form(sign.flip(), order)?,
            Colouring::Normalized(b) => match sign {
                Sign::Minus => Some(Series::one(order)),
                Sign::Plus => b
                    .congruence_closed_form(order)?
                    .map(|c| c.map(|p| p.compose(&Poly2::u(), &Poly2::affine(1, -1, 1)))),
            },
        })
    }

    /// `[psi](u, v) = psi^-(u, v) psi^+(u, u - v + 1)` in `Q[u, v][[h]]`.
    pub fn congruence_closed_form(&self, order: usize) -> Result<Option<Series<Poly2<Rat>>>, CrystalError> {
        let (Some(m), Some(p)) = (self.closed_form(Sign::Minus, order)?, self.closed_form(Sign::Plus, order)?) else {
            return Ok(None);
        };
        let flip = Poly2::affine(1, -1, 1);
        Ok(Some(m.mul_ref(&p.map(|c| c.compose(&Poly2::u(), &flip)))))
    }

    /// The Cartan dual colouring `psi*`.
    pub fn cartan_dual(&self) -> Colouring {
        match self {
            Colouring::Swapped(b) => (**b).clone(),
            other => Colouring::Swapped(Box::new(other.clone())),
        }
    }

    /// Checks that every value with `n <= max_n` has an invertible constant
    /// term.
    pub fn check_admissible(&self, max_n: i64, order: usize) -> Result<(), CrystalError> {
        for e in crate::edge::edges_up_to(max_n) {
            let v = self.eval(e.sign, e.n, e.k, order)?;
            if v.coeff(0).is_zero_elem() {
                return Err(CrystalError::NotAdmissible { sign: e.sign, n: e.n, k: e.k });
            }
        }
        Ok(())
    }
}

fn check_isogeny(xi: i64, d: i64) -> Result<(), CrystalError> {
    if xi < 1 {
        return Err(CrystalError::BadScaling(xi));
    }
    if d < 0 || d >= xi {
        return Err(CrystalError::ShiftOutOfRange { d, xi });
    }
    Ok(())
}

/// The colouring `{}^xi psi(d)` with
/// `[{}^xi psi(d)]^{+-}(n, k) = prod_{k'=1}^{xi} psi^{+-}(xi n + 2d, xi (k - 1) + k' + d)`.
pub fn isogeny_colouring(psi: &Colouring, xi: i64, d: i64) -> Result<Colouring, CrystalError> {
    check_isogeny(xi, d)?;
    if xi == 1 && d == 0 {
        return Ok(psi.clone());
    }
    Ok(Colouring::Isogeny { base: Box::new(psi.clone()), xi, d })
}

/// An assignment of a colouring to each Dynkin index.
pub type IColouring = Vec<Colouring>;
