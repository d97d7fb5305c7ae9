//! Decision procedures for the four h-admissibility axioms, on the
//! congruence class of a colouring.

use std::fmt;

use exactalg::{Poly1, Poly2, Rat, RingElem};

use crate::colouring::Colouring;
use crate::error::CrystalError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Deformation,
    Regularity,
    Quotient,
    Verma,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Deformation => "deformation",
            Axiom::Regularity => "regularity",
            Axiom::Quotient => "quotient",
            Axiom::Verma => "verma",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// The identity fails at this h-order; `witness` is the nonzero
    /// difference.
    Fail { order: usize, witness: String },
    /// The colouring has no closed form, so the axiom cannot be decided.
    Undecidable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub status: Status,
}

impl AxiomVerdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Checks the axioms modulo `h^order`, in the order deformation, regularity,
/// quotient, Verma.
///
/// * Deformation: `[psi]_0(u, v) = v (u - v + 1)`.
/// * Regularity: `[psi]` has a representative in `Q[u, v][[h]]`.
/// * Quotient: `[psi]_m(u, u + 1) = 0` for every `m`.
/// * Verma: `[psi]_m(-u - 2, v) = [psi]_m(u, u + v + 1)` for every `m`.
pub fn check_h_admissible(psi: &Colouring, order: usize) -> Result<Vec<AxiomVerdict>, CrystalError> {
    let axioms = [Axiom::Deformation, Axiom::Regularity, Axiom::Quotient, Axiom::Verma];
    let Some(c) = psi.congruence_closed_form(order)? else {
        return Ok(axioms.iter().map(|&axiom| AxiomVerdict { axiom, status: Status::Undecidable }).collect());
    };
    let u = Poly2::<Rat>::u();
    let v = Poly2::<Rat>::v();
    let mut out = Vec::with_capacity(4);

    let want0 = v.mul_ref(&Poly2::affine(1, -1, 1));
    let diff0 = c.coeff(0).sub_ref(&want0);
    out.push(AxiomVerdict {
        axiom: Axiom::Deformation,
        status: if diff0.is_zero() { Status::Pass } else { Status::Fail { order: 0, witness: diff0.to_string() } },
    });
    out.push(AxiomVerdict { axiom: Axiom::Regularity, status: Status::Pass });

    let line = Poly1::linear(exactalg::ri(1), exactalg::ri(1));
    let quotient = (0..order)
        .map(|m| (m, c.coeff(m).on_line(&line)))
        .find(|(_, p)| !p.is_zero())
        .map_or(Status::Pass, |(m, p)| Status::Fail { order: m, witness: p.to_string() });
    out.push(AxiomVerdict { axiom: Axiom::Quotient, status: quotient });

    let refl = Poly2::affine(-1, 0, -2);
    let shifted = Poly2::affine(1, 1, 1);
    let verma = (0..order)
        .map(|m| {
            let p = c.coeff(m);
            (m, p.compose(&refl, &v).sub_ref(&p.compose(&u, &shifted)))
        })
        .find(|(_, p)| !p.is_zero())
        .map_or(Status::Pass, |(m, p)| Status::Fail { order: m, witness: p.to_string() });
    out.push(AxiomVerdict { axiom: Axiom::Verma, status: verma });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::Series;

    fn all_pass(v: &[AxiomVerdict]) -> bool {
        v.iter().all(|x| x.passed())
    }

    #[test]
    fn classical_and_quantum_pass() {
        assert!(all_pass(&check_h_admissible(&Colouring::Classical, 6).unwrap()));
        assert!(all_pass(&check_h_admissible(&Colouring::quantum(), 6).unwrap()));
        assert!(all_pass(&check_h_admissible(&Colouring::Quantum { d: 3 }, 6).unwrap()));
    }

    #[test]
    fn perturbed_colouring_fails_verma_at_order_one() {
        let p = Series::new(3, vec![Poly2::v(), Poly2::constant(exactalg::ri(1))]);
        let v = check_h_admissible(&Colouring::symmetric_poly(p), 3).unwrap();
        assert!(v[0].passed());
        assert_eq!(v[3].status, Status::Fail { order: 1, witness: "-2 - 2*u".into() });
    }

    #[test]
    fn pointwise_is_undecidable() {
        let p = Colouring::pointwise("k", |_, _, k, o| Series::from_int(o, k));
        let v = check_h_admissible(&p, 3).unwrap();
        assert!(v.iter().all(|x| x.status == Status::Undecidable));
    }
}
