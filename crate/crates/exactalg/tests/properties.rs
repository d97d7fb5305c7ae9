use exactalg::series::quantum_number_series;
use exactalg::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn cfg() -> Config {
    Config { cases: 500, rng_seed: RngSeed::Fixed(0x5eed_0001), ..Config::default() }
}

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| rq(p, q))
}

fn series(k: usize) -> impl Strategy<Value = Series<Rat>> {
    prop::collection::vec(rat(), k).prop_map(move |c| Series::new(k, c))
}

fn unit_series(k: usize) -> impl Strategy<Value = Series<Rat>> {
    (series(k), 1i64..=5).prop_map(move |(s, c)| {
        let mut v = s.coeffs().to_vec();
        v[0] = ri(c);
        Series::new(k, v)
    })
}

fn cyclo(m: u32) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(-5i64..=5, 4).prop_map(move |c| Cyclo::from_coeffs(m, c.into_iter().map(ri).collect()))
}

fn series2() -> impl Strategy<Value = Series2<Rat>> {
    prop::collection::vec(rat(), 12).prop_map(|c| {
        let mut s = Series2::zero(4, 3);
        for (idx, a) in c.into_iter().enumerate() {
            s.set(idx / 3, idx % 3, a);
        }
        s
    })
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn series_ring_axioms(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn cyclotomic_ring_axioms(a in cyclo(10), b in cyclo(10), c in cyclo(10)) {
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
    }

    #[test]
    fn cyclotomic_product_matches_complex_evaluation(g in 1u32..=6, a in prop::collection::vec(-5i64..=5, 6), b in prop::collection::vec(-5i64..=5, 6)) {
        let m = 2 * g;
        let x = Cyclo::from_coeffs(m, a.into_iter().map(ri).collect());
        let y = Cyclo::from_coeffs(m, b.into_iter().map(ri).collect());
        let (xr, xi) = x.to_complex();
        let (yr, yi) = y.to_complex();
        let (pr, pi) = x.mul_ref(&y).to_complex();
        prop_assert!((pr - (xr * yr - xi * yi)).abs() < 1e-10);
        prop_assert!((pi - (xr * yi + xi * yr)).abs() < 1e-10);
    }

    #[test]
    fn division_inverts_multiplication(a in series(7), d in unit_series(7), shift in 0usize..3) {
        let d = d.shift_up(shift);
        let q = (&a * &d).div(&d).unwrap();
        prop_assert_eq!(q.order(), 7 - shift);
        prop_assert_eq!(&q, &a.truncate(7 - shift));
        let back = a.div(&d.shift_down(shift)).unwrap();
        prop_assert_eq!(&back * &d.shift_down(shift), a);
    }

    #[test]
    fn series2_ring_axioms(a in series2(), b in series2(), c in series2()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn hp_zero_slice_is_a_ring_morphism(a in series2(), b in series2()) {
        prop_assert_eq!((&a * &b).at_hp_zero(), &a.at_hp_zero() * &b.at_hp_zero());
        prop_assert_eq!((&a + &b).at_hp_zero(), &a.at_hp_zero() + &b.at_hp_zero());
    }
}

#[test]
fn quantum_numbers_are_odd() {
    for k in -20..=20 {
        let s = &quantum_number_series(k, 8) + &quantum_number_series(-k, 8);
        assert!(s.is_zero(), "k = {}", k);
    }
}

#[test]
fn mixed_orders_are_flagged() {
    let a: Series<Rat> = Series::one(4);
    let b: Series<Rat> = Series::one(6);
    let c = &a + &b;
    assert_eq!(c.order(), 4);
    assert!(c.is_mixed());
    assert!(!(&a + &a).is_mixed());
}
