use std::collections::BTreeMap;

use crystal::*;
use exactalg::{ri, rq, Poly1, Rat, RatFn, Series};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn cfg() -> Config {
    Config { cases: 500, rng_seed: RngSeed::Fixed(0x5eed_0003), ..Config::default() }
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=4, any::<bool>()).prop_map(|(p, q, neg)| rq(if neg { -p } else { p }, q))
}

/// A random nowhere-zero table on edges with `n <= max_n`.
fn table(max_n: i64) -> impl Strategy<Value = Colouring> {
    let count = edges_up_to(max_n).count();
    prop::collection::vec(nonzero_rat(), count).prop_map(move |vals| {
        let map: BTreeMap<_, _> =
            edges_up_to(max_n).zip(vals).map(|(e, r)| ((e.sign, e.n, e.k), Series::constant(1, r))).collect();
        Colouring::Table(map)
    })
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn double_dual_preserves_congruence(psi in table(5)) {
        let dd = psi.cartan_dual().cartan_dual();
        for n in 1..=5 {
            for k in 1..=n {
                prop_assert_eq!(dd.congruence(n, k, 1).unwrap(), psi.congruence(n, k, 1).unwrap());
            }
        }
    }

    #[test]
    fn trivial_isogeny_is_identity(psi in table(4)) {
        let same = isogeny_colouring(&psi, 1, 0).unwrap();
        for e in edges_up_to(4) {
            prop_assert_eq!(same.eval(e.sign, e.n, e.k, 1).unwrap(), psi.eval(e.sign, e.n, e.k, 1).unwrap());
        }
    }

    #[test]
    fn expansion_reconstructs_and_is_admissible(psi in table(3)) {
        let e = h_admissible_expansion(&psi, 3).unwrap();
        for edge in edges_up_to(3) {
            prop_assert_eq!(e.at_h_one(edge.sign, edge.n, edge.k), field_value(&psi, edge.sign, edge.n, edge.k).unwrap());
        }
        let verdicts = check_h_admissible(&e.colouring(), 4).unwrap();
        prop_assert!(verdicts.iter().all(|v| v.passed()), "{:?}", verdicts);
    }

    #[test]
    fn interpolation_endpoints(psi in table(12), xi in 1i64..=3, flipped in any::<bool>()) {
        let iu = interpolation_colouring(&psi, &Colouring::Classical, xi, flipped, 12).unwrap();
        let (at_psi, at_prime) = if flipped { (ri(0), ri(1)) } else { (ri(1), ri(0)) };
        let a = iu.specialize(&at_psi);
        let b = iu.specialize(&at_prime);
        for e in edges_up_to(12) {
            prop_assert_eq!(a.eval(e.sign, e.n, e.k, 1).unwrap(), psi.eval(e.sign, e.n, e.k, 1).unwrap());
            let want = if e.k % xi == 0 { e.k / xi } else { 1 };
            prop_assert_eq!(b.eval(e.sign, e.n, e.k, 1).unwrap(), Series::from_int(1, want));
        }
    }

    #[test]
    fn constant_specialisation_is_constant(c in nonzero_rat(), beta in nonzero_rat()) {
        let f = RatFn::constant(c.clone());
        prop_assert_eq!(specialize_value(&f, &beta).unwrap(), c);
        let g = RatFn::new(Poly1::constant(ri(1)), Poly1::linear(ri(1), -beta.clone()));
        prop_assert!(specialize_value(&g, &beta).is_err());
    }
}

#[test]
fn admissible_closed_forms_vanish_on_the_quotient_line() {
    let perturbed = parse_poly_series("v + h^2*v*(v - u - 1)*(v + u + 1)", 6).unwrap();
    let antisym = Colouring::symmetric_poly(perturbed);
    for psi in [Colouring::Classical, Colouring::quantum(), Colouring::Quantum { d: 2 }, antisym] {
        let verdicts = check_h_admissible(&psi, 6).unwrap();
        let quotient = verdicts.iter().find(|v| v.axiom == Axiom::Quotient).unwrap();
        if !quotient.passed() {
            continue;
        }
        let c = psi.congruence_closed_form(6).unwrap().unwrap();
        for n in 0..15 {
            assert!(c.eval_at(&ri(n), &ri(n + 1)).is_zero(), "{} at n = {}", psi.describe(), n);
        }
    }
}
