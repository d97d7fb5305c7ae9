//! The full identity suite for one pair `(g, n)`.

use exactalg::{Coeff, Cyclo, RingElem};

use crate::check::IdentityCheck;
use crate::divided::divided_power_route;
use crate::dual::{dual_generators, dual_relation_check, lem_fond_checks, reprinter_decomposition, signed_lem_fond_check};
use crate::eps::{specialize_eps, specialize_generic};
use crate::error::LangError;
use crate::hh::{build_hh_module, commutator_check, single_parameter_check, slice_check, ModuleKind};
use crate::interp::brace_at_eps;

/// Checks making up the verdict, and further computed facts reported
/// alongside them.
#[derive(Debug, Clone)]
pub struct LiqSuite {
    pub g: u32,
    pub n: i64,
    pub checks: Vec<IdentityCheck>,
    pub informational: Vec<IdentityCheck>,
}

impl LiqSuite {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// `P(eps^l)` is 1 when `g | l` and 0 otherwise, for `0 <= l < 2g`.
pub fn interpolation_values_check(g: u32) -> IdentityCheck {
    let bad = (0..2 * g as i64).find(|&l| {
        let want = if l % g as i64 == 0 { Cyclo::one() } else { Cyclo::zero() };
        brace_at_eps(l, g) != want
    });
    IdentityCheck::verdict("P(eps^l) = [g | l]", bad.is_none(), || format!("l = {}", bad.unwrap_or(0)))
}

/// Runs every check for `L^{h,h'}(n, g)` (and the Verma module) modulo
/// `h^kh h'^khp`. Needs `n >= 0` and `g | n`.
pub fn liq_suite(g: u32, n: i64, kh: usize, khp: usize) -> Result<LiqSuite, LangError> {
    let mut checks = vec![interpolation_values_check(g)];
    let mut informational = Vec::new();
    for kind in [ModuleKind::Finite, ModuleKind::verma(n, g)] {
        let tag = match kind {
            ModuleKind::Finite => "L",
            ModuleKind::Verma { .. } => "M",
        };
        let m = build_hh_module(kind, n, g, kh, khp)?;
        let mut local = vec![slice_check(&m)?, commutator_check(&m)?];
        if g == 1 {
            local.push(single_parameter_check(&m)?);
        }
        let em = specialize_eps(kind, n, g, khp)?;
        let generic = specialize_generic(kind, n, g, khp)?;
        local.push(IdentityCheck::verdict("case split = lattice at Q = eps", em.x_plus() == generic.x_plus(), || "X+".into()));
        let (sub, all) = lem_fond_checks(&em);
        local.push(sub);
        informational.push(rename(all, tag));
        informational.push(rename(signed_lem_fond_check(&em), tag));
        let d = dual_generators(&em)?;
        local.push(IdentityCheck::verdict("LX+ kills m0", d.x_plus.column(0).iter().all(|(_, a)| a.is_zero_elem()), || "m0".into()));
        local.extend(dual_relation_check(&d, kind));
        checks.extend(local.into_iter().map(|c| rename(c, tag)));
    }
    let r = reprinter_decomposition(n, g, khp)?;
    checks.push(IdentityCheck::verdict("reprinter decomposition", r.passed(), || format!("{:?}", r)));
    if n <= 8 {
        checks.push(divided_power_route(n as usize, kh)?);
    }
    Ok(LiqSuite { g, n, checks, informational })
}

fn rename(mut c: IdentityCheck, tag: &str) -> IdentityCheck {
    c.name = format!("{}: {}", tag, c.name);
    c
}
