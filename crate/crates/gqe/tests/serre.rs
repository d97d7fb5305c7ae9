use crystal::{Colouring, Sign};
use exactalg::{RingElem, Series};
use gqe::*;
use repmod::{a2_defining, Gen, WeightModule};
use rootdata::{finite_type, RootDatum};

fn solbar(psi: Colouring, order: usize) -> GqeSolution {
    match solve(&GqeEquation::new(psi, Colouring::Classical, 0, order)).unwrap() {
        SolveOutcome::Solved(s) => s,
        SolveOutcome::NoSolution(w) => panic!("{}", w),
    }
}

#[test]
fn serre_residual_vanishes_on_the_defining_a2_module() {
    for psi in [Colouring::Classical, Colouring::quantum()] {
        let sb = solbar(psi, 6);
        let m = a2_defining(Series::one(6)).unwrap();
        for (i, j) in [(0, 1), (1, 0)] {
            for sign in [Sign::Plus, Sign::Minus] {
                let r = gqe_serre_residual(&m, i, j, &sb, sign).unwrap();
                assert!(r.passed(), "{:?} at ({}, {})", r, i, j);
            }
        }
    }
}

/// A string `v0 -> v1 -> v2 -> v3` with `X_2^+ v0 = v1` and
/// `X_1^+ v1 = v2`, `X_1^+ v2 = v3`, which violates the Serre relation.
fn broken_string() -> WeightModule<Series<exactalg::Rat>> {
    let datum = RootDatum::simply_connected(finite_type("A", 2).unwrap()).unwrap();
    let labels = (0..4).map(|k| format!("v{}", k)).collect();
    let weights = vec![vec![0, 0], vec![-1, 2], vec![1, 1], vec![3, 0]];
    let one = Series::one(4);
    let mut m = WeightModule::new(datum, labels, weights, one.clone()).unwrap();
    let mut xj = m.zero_op();
    xj.set(1, 0, one.clone());
    let mut xi = m.zero_op();
    xi.set(2, 1, one.clone());
    xi.set(3, 2, one);
    m.set_action(Gen::Raise(1), xj).unwrap();
    m.set_action(Gen::Raise(0), xi).unwrap();
    m
}

#[test]
fn serre_residual_detects_a_violation() {
    let m = broken_string();
    let r = gqe_serre_residual(&m, 0, 1, &solbar(Colouring::Classical, 4), Sign::Plus).unwrap();
    assert_eq!(r.nonzero_order, Some(0));
    assert_eq!(r.witness.as_deref(), Some("v0"));
}

#[test]
fn zero_module_has_zero_residual() {
    let datum = RootDatum::simply_connected(finite_type("A", 2).unwrap()).unwrap();
    let m = WeightModule::new(datum, vec![], vec![], Series::one(3)).unwrap();
    let r = gqe_serre_residual(&m, 0, 1, &solbar(Colouring::quantum(), 3), Sign::Plus).unwrap();
    assert!(r.passed());
    assert!(deformed_commutator_operator(&solbar(Colouring::quantum(), 3), &m, 0).unwrap().entries().next().is_none());
}

#[test]
fn equal_indices_are_rejected() {
    let m = a2_defining(Series::one(3)).unwrap();
    let sb = solbar(Colouring::Classical, 3);
    assert!(matches!(gqe_serre_residual(&m, 0, 0, &sb, Sign::Plus), Err(GqeError::Index { .. })));
    assert!(matches!(gqe_serre_residual(&m, 0, 2, &sb, Sign::Plus), Err(GqeError::Index { .. })));
}

#[test]
fn quantum_trivialised_generator_in_the_standard_frame() {
    // In the frame psi = [k]_q the coefficient is p (n - p + 1) / [p]_q.
    let order = 4;
    let sb = solbar(Colouring::quantum(), order);
    let m = repmod::build_l(3, &Colouring::quantum(), order).unwrap();
    let x = trivialised_generator(&sb, &m, 0, Sign::Plus).unwrap();
    let q2 = exactalg::quantum_number_series(2, order);
    let want = Series::from_int(order, 4).div(&q2).unwrap();
    assert_eq!(x.get(1, 2), Some(&want));
    assert!(x.get(0, 0).is_none_or(|e| e.is_zero_elem()));
}
