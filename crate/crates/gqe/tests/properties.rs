use crystal::{check_h_admissible, Colouring, Sign, Status};
use exactalg::{ri, rq, Poly1, Poly2, Rat, RingElem, Series};
use gqe::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use repmod::{build_l, Gen};

fn cfg() -> Config {
    Config { cases: 500, rng_seed: RngSeed::Fixed(0x5eed_0005), ..Config::default() }
}

fn solved(eq: &GqeEquation) -> GqeSolution {
    match solve(eq).unwrap() {
        SolveOutcome::Solved(s) => s,
        SolveOutcome::NoSolution(w) => panic!("{}", w),
    }
}

fn admissible() -> impl Strategy<Value = Colouring> {
    prop_oneof![
        Just(Colouring::Classical),
        Just(Colouring::quantum()),
        Just(Colouring::Quantum { d: 2 }),
        Just(Colouring::Quantum { d: 3 }),
    ]
}

/// `psi` with `psi^-(n, k)` multiplied by `g(n, k) = 1 + c h + c' h^2` and
/// `psi^+(n, n - k + 1)` divided by it. The congruence class is unchanged.
fn gauged(psi: Colouring, seed: u64) -> Colouring {
    let g = move |n: i64, k: i64, order: usize| {
        let x = seed.wrapping_mul(6364136223846793005).wrapping_add((n * 31 + k) as u64);
        let c1 = ((x >> 7) % 7) as i64 - 3;
        let c2 = ((x >> 17) % 5) as i64 - 2;
        Series::new(order, vec![ri(1), rq(c1, 2), ri(c2)])
    };
    Colouring::pointwise(&format!("gauge {}", seed), move |sign, n, k, order| {
        let base = psi.eval(sign, n, k, order).unwrap();
        match sign {
            Sign::Minus => base.mul_ref(&g(n, k, order)),
            Sign::Plus => base.div(&g(n, n - k + 1, order)).unwrap(),
        }
    })
}

fn product(a: Colouring, b: Colouring) -> Colouring {
    Colouring::pointwise("product", move |sign, n, k, order| {
        a.eval(sign, n, k, order).unwrap().mul_ref(&b.eval(sign, n, k, order).unwrap())
    })
}

/// `psi(u, v) = v (1 + h (a + b u + c v))`, used for both signs.
fn perturbed(a: i64, b: i64, c: i64) -> Colouring {
    let h1 = Poly2::from_terms([((0, 1), ri(a)), ((1, 1), ri(b)), ((0, 2), ri(c))]);
    Colouring::symmetric_poly(Series::new(6, vec![Poly2::v(), h1]))
}

fn s_cl() -> Vec<Poly1<Rat>> {
    vec![Poly1::x(), Poly1::constant(ri(1))]
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn uniqueness_under_resampling(
        psi in admissible(),
        degree in -1i64..=0,
        order in 1usize..=5,
        d0 in 2usize..=8,
        validation in 1usize..=6,
        ncheck in 10i64..=20,
    ) {
        let base = GqeEquation::new(psi.clone(), psi.clone(), degree, order);
        let reference = solved(&base);
        let params = SolverParams { d0, dmax: 64, validation, tail: 4 };
        let again = solved(&base.clone().with_params(params).with_ncheck(ncheck));
        prop_assert_eq!(again, reference);
    }

    #[test]
    fn congruence_invariance(psi in admissible(), seed in any::<u64>(), degree in -1i64..=0, order in 1usize..=4) {
        let plain = solved(&GqeEquation::new(psi.clone(), Colouring::Classical, degree, order));
        let g = gauged(psi.clone(), seed);
        prop_assert_eq!(&solved(&GqeEquation::new(g.clone(), Colouring::Classical, degree, order)), &plain);
        let normalized = Colouring::Normalized(Box::new(psi.clone()));
        prop_assert_eq!(&solved(&GqeEquation::new(normalized, Colouring::Classical, degree, order)), &plain);
        let diag = solved(&GqeEquation::new(psi.clone(), psi.clone(), degree, order));
        prop_assert_eq!(solved(&GqeEquation::new(g, gauged(psi, seed ^ 1), degree, order)), diag);
    }

    #[test]
    fn shift_lemma(psi1 in admissible(), psi2 in admissible(), order in 1usize..=4) {
        let m = solved(&GqeEquation::new(psi1.clone(), psi2.clone(), -1, order));
        let prod = product(psi1.clone(), psi2);
        let eq0 = GqeEquation::new(psi1, prod, 0, order);
        prop_assert_eq!(verify_solution(&eq0, &m.shifted(1)).unwrap(), None);
        prop_assert_eq!(solved(&eq0), m.shifted(1));
    }

    #[test]
    fn existence_matches_admissibility(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, order in 2usize..=4) {
        let psi = perturbed(a, b, c);
        let verdicts = check_h_admissible(&psi, order).unwrap();
        prop_assert!(verdicts.iter().all(|v| v.status != Status::Undecidable));
        let admissible = verdicts.iter().all(|v| v.passed());
        let params = SolverParams { dmax: 16, ..SolverParams::default() };
        let outcome = solve(&GqeEquation::new(psi.clone(), psi, -1, order).with_params(params));
        match outcome {
            Ok(SolveOutcome::Solved(_)) => prop_assert!(admissible),
            Ok(SolveOutcome::NoSolution(_)) | Err(GqeError::DegreeExhausted { .. }) => prop_assert!(!admissible),
            Err(e) => prop_assert!(false, "solver error {}", e),
        }
    }

    #[test]
    fn h_zero_part_is_classical(psi in admissible(), order in 1usize..=6) {
        let s = solved(&GqeEquation::new(psi.clone(), psi, -1, order));
        prop_assert_eq!(s.at_h_zero(), s_cl());
    }

    #[test]
    fn deformed_commutator_is_x_plus_x_minus(psi in admissible(), n in 0usize..=10, order in 1usize..=4) {
        let s = solved(&GqeEquation::new(psi.clone(), psi.clone(), -1, order));
        let m = build_l(n, &psi, order).unwrap();
        let ef = m.op(Gen::Raise(0)).mul(&m.op(Gen::Lower(0)));
        prop_assert_eq!(deformed_commutator_operator(&s, &m, 0).unwrap(), ef);
    }

    #[test]
    fn trivialised_generator_is_classical(psi in admissible(), n in 0usize..=8, order in 1usize..=4) {
        let frame = classical_frame(&psi);
        let sbar = solved(&GqeEquation::new(frame.clone(), Colouring::Classical, 0, order));
        let m = build_l(n, &frame, order).unwrap();
        let x = trivialised_generator(&sbar, &m, 0, Sign::Plus).unwrap();
        let classical = build_l(n, &Colouring::Classical, order).unwrap();
        prop_assert_eq!(x, classical.op(Gen::Raise(0)));
    }
}

#[test]
fn quantum_classical_frame_is_congruent() {
    let q = Colouring::quantum();
    let f = classical_frame(&q);
    for n in 1..=8 {
        for k in 1..=n {
            assert_eq!(f.congruence(n, k, 5).unwrap(), q.congruence(n, k, 5).unwrap());
            assert_eq!(f.eval(Sign::Minus, n, k, 5).unwrap(), Series::from_int(5, k));
        }
    }
}

#[test]
fn non_admissible_perturbations_exist() {
    let bad = perturbed(0, 1, 0);
    assert!(!check_h_admissible(&bad, 3).unwrap().iter().all(|v| v.passed()));
    // The forced values of M_1 are rational, not polynomial, in n.
    assert!(matches!(solve(&GqeEquation::new(bad.clone(), bad, -1, 3)), Err(GqeError::DegreeExhausted { p: 1, .. })));
}
