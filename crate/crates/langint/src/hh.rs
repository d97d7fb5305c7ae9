//! Doubly deformed Verma and finite modules over `Q[[h, h']]`.

use crystal::Colouring;
use exactalg::{quantum_number_series, Rat, RingElem, Series, Series2, SparseMat};
use repmod::{build_l, sl2_datum, Gen, WeightModule};

use crate::check::{series2_order, series_order, IdentityCheck};
use crate::error::LangError;
use crate::qnum::{gen_quantum_number, sinh_ratio};

/// Which module to build. A Verma module is cut off after `m_depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    Verma { depth: usize },
    Finite,
}

impl ModuleKind {
    /// Verma module with `n + 2g + 4` rows below the highest weight
    /// (`n` read as 0 when negative).
    pub fn verma(n: i64, g: u32) -> Self {
        ModuleKind::Verma { depth: n.max(0) as usize + 2 * g as usize + 4 }
    }

    /// Index of the last basis vector.
    pub fn last(&self, n: i64) -> Result<usize, LangError> {
        match self {
            ModuleKind::Verma { depth } => Ok(*depth),
            ModuleKind::Finite if n < 0 => Err(LangError::NegativeHighestWeight(n)),
            ModuleKind::Finite => Ok(n as usize),
        }
    }

    /// Columns on which `X^+ X^-` is not affected by the cut-off.
    pub fn untruncated(&self, j: usize, steps: usize) -> bool {
        match self {
            ModuleKind::Verma { depth } => j + steps <= *depth,
            ModuleKind::Finite => true,
        }
    }
}

/// `M^{h,h'}(n, g)` or `L^{h,h'}(n, g)` in the basis `m_0, m_1, ...` with
/// `X^- m_j = m_{j+1}` and `X^+ m_j = [j] [n - j + 1] m_{j-1}`, both
/// factors generalised quantum numbers.
#[derive(Debug, Clone)]
pub struct HHModule {
    pub kind: ModuleKind,
    pub n: i64,
    pub g: u32,
    pub orders: (usize, usize),
    /// Value of the Casimir element, `(n + 1)^2`.
    pub casimir: i64,
    pub module: WeightModule<Series2<Rat>>,
}

pub(crate) fn basis(n: i64, last: usize) -> (Vec<String>, Vec<Vec<i64>>) {
    let labels = (0..=last).map(|j| format!("m{}", j)).collect();
    let weights = (0..=last as i64).map(|j| vec![n - 2 * j]).collect();
    (labels, weights)
}

pub fn build_hh_module(kind: ModuleKind, n: i64, g: u32, kh: usize, khp: usize) -> Result<HHModule, LangError> {
    if g == 0 {
        return Err(LangError::ZeroG);
    }
    let last = kind.last(n)?;
    let (labels, weights) = basis(n, last);
    let one = Series2::one(kh, khp);
    let mut m = WeightModule::new(sl2_datum(), labels, weights, one.clone())?;
    let mut lower = m.zero_op();
    let mut raise = m.zero_op();
    for j in 1..=last {
        let ji = j as i64;
        lower.set(j, j - 1, one.clone());
        let c = gen_quantum_number(ji, g, kh, khp)?.mul_ref(&gen_quantum_number(n - ji + 1, g, kh, khp)?);
        raise.set(j - 1, j, c);
    }
    m.set_action(Gen::Lower(0), lower)?;
    m.set_action(Gen::Raise(0), raise)?;
    Ok(HHModule { kind, n, g, orders: (kh, khp), casimir: (n + 1) * (n + 1), module: m })
}

impl HHModule {
    pub fn x_plus(&self) -> SparseMat<Series2<Rat>> {
        self.module.op(Gen::Raise(0))
    }

    pub fn x_minus(&self) -> SparseMat<Series2<Rat>> {
        self.module.op(Gen::Lower(0))
    }

    /// `H` on `m_j`, that is `n - 2j`.
    pub fn weight(&self, j: usize) -> i64 {
        self.module.weights()[j][0]
    }

    /// The module over `Q[[h]]` obtained by setting `h' = 0`.
    pub fn hp_zero_slice(&self) -> Result<WeightModule<Series<Rat>>, LangError> {
        let kh = self.orders.0;
        let datum = self.module.datum().clone();
        let mut out = WeightModule::new(datum, self.module.labels().to_vec(), self.module.weights().to_vec(), Series::one(kh))?;
        for g in [Gen::Raise(0), Gen::Lower(0)] {
            out.set_action(g, self.module.op(g).map(|s| s.at_hp_zero()))?;
        }
        Ok(out)
    }
}

/// `[X^+, X^-] = [H]_Q` modulo `h'`, on every column unaffected by the
/// Verma cut-off. The reported order is the `h`-order.
pub fn commutator_check(m: &HHModule) -> Result<IdentityCheck, LangError> {
    let slice = m.hp_zero_slice()?;
    let kh = m.orders.0;
    let comm = slice.op(Gen::Raise(0)).commutator(&slice.op(Gen::Lower(0)));
    let want = slice.weight_op(|w| quantum_number_series(w[0], kh));
    let kind = m.kind;
    Ok(IdentityCheck::from_residual("commutator mod h'", &comm.sub(&want), slice.labels(), |j| kind.untruncated(j, 1), series_order))
}

/// For `g = 1`: `[X^+, X^-] = [H]_{QT}` exactly, with `QT = exp(h + h')`.
/// The reported order is the total degree in `(h, h')`.
pub fn single_parameter_check(m: &HHModule) -> Result<IdentityCheck, LangError> {
    let (kh, khp) = m.orders;
    let x = Series2::h(kh, khp).add_ref(&Series2::hp(kh, khp));
    let mut want = m.module.zero_op();
    for j in 0..m.module.dim() {
        let w = m.weight(j);
        let v = if w == 0 { Series2::zero(kh, khp) } else { Series2::compose_into(&sinh_ratio(w, kh + khp), &x)? };
        want.set(j, j, v);
    }
    let comm = m.x_plus().commutator(&m.x_minus());
    let kind = m.kind;
    Ok(IdentityCheck::from_residual("commutator [H]_{QT}", &comm.sub(&want), m.module.labels(), |j| kind.untruncated(j, 1), series2_order))
}

/// The `h' = 0` slice against `L_h(n)` built from the normalised quantum
/// colouring, whose `X^-` acts by 1 and `X^+` by `[j]_q [n - j + 1]_q`.
/// For Verma modules only the first `n + 1` rows are compared.
pub fn slice_check(m: &HHModule) -> Result<IdentityCheck, LangError> {
    if m.n < 0 {
        return Err(LangError::NegativeHighestWeight(m.n));
    }
    let kh = m.orders.0;
    let slice = m.hp_zero_slice()?;
    let psi = Colouring::Normalized(Box::new(Colouring::quantum()));
    let l = build_l(m.n as usize, &psi, kh)?;
    let top = m.n as usize;
    let mut residual = slice.zero_op();
    for g in [Gen::Raise(0), Gen::Lower(0)] {
        let (a, b) = (slice.op(g), l.op(g));
        for r in 0..=top {
            for c in 0..=top {
                let x = a.get(r, c).cloned().unwrap_or_else(|| Series::zero(kh));
                let y = b.get(r, c).cloned().unwrap_or_else(|| Series::zero(kh));
                residual.set(r, c, residual.get(r, c).cloned().unwrap_or_else(|| Series::zero(kh)).add_ref(&x.sub_ref(&y)));
            }
        }
    }
    Ok(IdentityCheck::from_residual("h' = 0 slice", &residual, slice.labels(), |c| c <= top, series_order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_n1() {
        let m = build_hh_module(ModuleKind::Finite, 1, 2, 4, 3).unwrap();
        assert_eq!(m.x_plus().get(0, 1), Some(&Series2::one(4, 3)));
        assert_eq!(m.casimir, 4);
    }

    #[test]
    fn finite_needs_nonnegative_weight() {
        assert!(matches!(build_hh_module(ModuleKind::Finite, -1, 2, 3, 3), Err(LangError::NegativeHighestWeight(-1))));
    }

    #[test]
    fn g1_is_single_parameter() {
        for n in [0, 2, 3] {
            for kind in [ModuleKind::Finite, ModuleKind::verma(n, 1)] {
                let m = build_hh_module(kind, n, 1, 4, 4).unwrap();
                assert!(single_parameter_check(&m).unwrap().passed());
            }
        }
    }

    #[test]
    fn commutator_and_slice() {
        for (g, n) in [(1, 2), (2, 4), (3, 0), (2, 5)] {
            let m = build_hh_module(ModuleKind::Finite, n, g, 5, 3).unwrap();
            assert!(commutator_check(&m).unwrap().passed());
            assert!(slice_check(&m).unwrap().passed());
            let v = build_hh_module(ModuleKind::verma(n, g), n, g, 4, 2).unwrap();
            assert!(commutator_check(&v).unwrap().passed());
            assert!(slice_check(&v).unwrap().passed());
        }
    }

    #[test]
    fn verma_has_the_finite_quotient() {
        let v = build_hh_module(ModuleKind::verma(3, 2), 3, 2, 3, 3).unwrap();
        assert!(v.x_plus().get(3, 4).is_none_or(|e| e.is_zero_elem()));
    }
}
