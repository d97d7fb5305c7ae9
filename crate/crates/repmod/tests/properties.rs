use std::collections::BTreeMap;

use crystal::{edges_up_to, Colouring, Sign};
use exactalg::{rq, Rat, Series};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use repmod::*;
use rootdata::{finite_type, langlands_isogeny, Isogeny, RootDatum};

fn cfg() -> Config {
    Config { cases: 500, rng_seed: RngSeed::Fixed(0x5eed_0004), ..Config::default() }
}

fn colouring() -> impl Strategy<Value = Colouring> {
    let table = prop::collection::vec((1i64..=9, 1i64..=4), edges_up_to(12).count()).prop_map(|vals| {
        let map: BTreeMap<_, _> = edges_up_to(12)
            .zip(vals)
            .map(|(e, (p, q))| ((e.sign, e.n, e.k), Series::constant(3, rq(p, q))))
            .collect();
        Colouring::Table(map)
    });
    prop_oneof![Just(Colouring::Classical), Just(Colouring::quantum()), Just(Colouring::Quantum { d: 2 }), table]
}

fn dominant_b2_or_c2() -> impl Strategy<Value = (bool, Vec<i64>)> {
    (any::<bool>(), 0i64..=2, 0i64..=2).prop_map(|(t, a, b)| (t, vec![a, b]))
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn restriction_character_is_pullback(n in 0usize..=12, g in 1i64..=3, psi in colouring()) {
        let m = build_l(n, &psi, 3).unwrap();
        let xi = Isogeny::rank_one(g).unwrap();
        let r = isogeny_restrict(&m, &xi).unwrap();
        prop_assert_eq!(r.character(), m.character().pullback(&xi));
        prop_assert!(verify_slf_relations(&r).passed());
    }

    #[test]
    fn restriction_along_langlands_isogeny((transposed, dual_lambda) in dominant_b2_or_c2()) {
        let b2 = finite_type("B", 2).unwrap();
        let c = if transposed { b2.transpose() } else { b2 };
        let xi = langlands_isogeny(&c).unwrap();
        let lambda = xi.apply(&dual_lambda);
        let chi = freudenthal_char(xi.target(), &lambda).unwrap();
        let m = WeightModule::from_character(xi.target().clone(), &chi, exactalg::ri(1)).unwrap();
        let r = isogeny_restrict(&m, &xi).unwrap();
        prop_assert_eq!(r.character(), chi.pullback(&xi));
    }

    #[test]
    fn casimir_factors_are_congruence_values(n in 0usize..=12, psi in colouring()) {
        let m = build_l(n, &psi, 3).unwrap();
        let ef = m.op(Gen::Raise(0)).mul(&m.op(Gen::Lower(0)));
        let fe = m.op(Gen::Lower(0)).mul(&m.op(Gen::Raise(0)));
        let ni = n as i64;
        for ((r, c), _) in ef.entries().chain(fe.entries()) {
            prop_assert_eq!(r, c);
        }
        let zero = Series::<Rat>::zero(3);
        for p in 0..=n {
            let pi = p as i64;
            let want_ef = if p < n { psi.congruence(ni, pi + 1, 3).unwrap() } else { zero.clone() };
            let want_fe = if p > 0 { psi.congruence(ni, pi, 3).unwrap() } else { zero.clone() };
            prop_assert_eq!(ef.get(p, p).cloned().unwrap_or_else(|| zero.clone()), want_ef);
            prop_assert_eq!(fe.get(p, p).cloned().unwrap_or_else(|| zero.clone()), want_fe);
        }
        let lower0 = m.op(Gen::Lower(0));
        if n > 0 {
            prop_assert_eq!(lower0.get(1, 0).cloned().unwrap_or_else(|| zero.clone()), psi.eval(Sign::Minus, ni, 1, 3).unwrap());
        }
    }

    #[test]
    fn direct_sums_add_characters(a in 0usize..=8, b in 0usize..=8) {
        let x = build_l(a, &Colouring::quantum(), 2).unwrap();
        let y = build_l(b, &Colouring::Classical, 2).unwrap();
        prop_assert_eq!(x.direct_sum(&y).unwrap().character(), x.character().add(&y.character()));
    }
}

#[test]
fn a2_restriction_along_identity() {
    let m = a2_defining(exactalg::ri(1)).unwrap();
    let xi = Isogeny::identity(RootDatum::simply_connected(finite_type("A", 2).unwrap()).unwrap());
    let r = isogeny_restrict(&m, &xi).unwrap();
    assert_eq!(r.character(), m.character());
    assert_eq!(r.op(Gen::Raise(1)), m.op(Gen::Raise(1)));
}
