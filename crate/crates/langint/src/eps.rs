//! Specialisation of the doubly deformed modules at `Q = eps`.

use exactalg::{Coeff, Cyclo, RingElem, Series, SparseMat};
use repmod::{sl2_datum, Gen, WeightModule};

use crate::error::LangError;
use crate::hh::{basis, ModuleKind};
use crate::interp::{deformed_at_eps, eps_pow};
use crate::qnum::{eps_quantum_number, lattice_quantum_number};

/// `M^{eps,h'}(n, g)` or `L^{eps,h'}(n, g)` over `Q(eps)[[h']]`, together
/// with the values of `Q^H` on each basis vector and of
/// `Q^{sqrt C} + Q^{-sqrt C}`.
#[derive(Debug, Clone)]
pub struct EpsModule {
    pub kind: ModuleKind,
    pub n: i64,
    pub g: u32,
    pub order: usize,
    pub module: WeightModule<Series<Cyclo>>,
    pub q_h: Vec<Cyclo>,
    pub q_sqrt_c: Cyclo,
}

impl EpsModule {
    pub fn x_plus(&self) -> SparseMat<Series<Cyclo>> {
        self.module.op(Gen::Raise(0))
    }

    pub fn x_minus(&self) -> SparseMat<Series<Cyclo>> {
        self.module.op(Gen::Lower(0))
    }

    pub fn weight(&self, j: usize) -> i64 {
        self.module.weights()[j][0]
    }
}

/// `[a]_{eps T}` when `{a}` is 1 at `Q = eps`, else `[a]_eps`.
pub fn eps_factor(a: i64, g: u32, order: usize) -> Result<Series<Cyclo>, LangError> {
    eps_quantum_number(a, g, order, deformed_at_eps(a, g))
}

fn assemble(
    kind: ModuleKind,
    n: i64,
    g: u32,
    order: usize,
    coeff: impl Fn(i64) -> Result<Series<Cyclo>, LangError>,
) -> Result<EpsModule, LangError> {
    if g == 0 {
        return Err(LangError::ZeroG);
    }
    if n % g as i64 != 0 {
        return Err(LangError::NotDivisible { n, g });
    }
    let last = kind.last(n)?;
    let (labels, weights) = basis(n, last);
    let one = Series::constant(order, Cyclo::rational(2 * g, exactalg::ri(1)));
    let mut m = WeightModule::new(sl2_datum(), labels, weights, one.clone())?;
    let mut lower = m.zero_op();
    let mut raise = m.zero_op();
    for j in 1..=last {
        lower.set(j, j - 1, one.clone());
        raise.set(j - 1, j, coeff(j as i64)?);
    }
    m.set_action(Gen::Lower(0), lower)?;
    m.set_action(Gen::Raise(0), raise)?;
    let sign = if (n / g as i64) % 2 == 0 { 1 } else { -1 };
    let q_h = (0..=last as i64).map(|j| eps_pow(g, -2 * j).scale(&exactalg::ri(sign))).collect();
    let q_sqrt_c = eps_pow(g, 1).add_ref(&eps_pow(g, -1)).scale(&exactalg::ri(sign));
    Ok(EpsModule { kind, n, g, order, module: m, q_h, q_sqrt_c })
}

/// The module at `Q = eps` from the case split on `j mod g`:
/// `X^+ m_j = [j]_? [n - j + 1]_? m_{j-1}` where a factor is `T`-deformed
/// exactly when `g` divides its argument.
pub fn specialize_eps(kind: ModuleKind, n: i64, g: u32, order: usize) -> Result<EpsModule, LangError> {
    assemble(kind, n, g, order, |j| Ok(eps_factor(j, g, order)?.mul_ref(&eps_factor(n - j + 1, g, order)?)))
}

/// The same module obtained by writing each coefficient in `Q[Q^{+-1}][[h']]`
/// and then setting `Q = eps`.
pub fn specialize_generic(kind: ModuleKind, n: i64, g: u32, order: usize) -> Result<EpsModule, LangError> {
    assemble(kind, n, g, order, |j| {
        let c = lattice_quantum_number(j, g, order)?.mul(&lattice_quantum_number(n - j + 1, g, order)?);
        Ok(c.at_eps(g))
    })
}
