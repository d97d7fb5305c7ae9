use cli::config::{parse_config, KEYS};
use cli::report::{CheckRecord, Report};
use cli::Format;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn cfg() -> Config {
    Config { cases: 500, rng_seed: RngSeed::Fixed(0x5eed_0007), ..Config::default() }
}

fn entries() -> impl Strategy<Value = Vec<(usize, String)>> {
    prop::collection::vec((0..KEYS.len() - 1, "[a-z0-9:,]{1,8}"), 0..8)
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn config_keeps_values_and_rejects_repeats(es in entries(), comment in any::<bool>()) {
        let mut text = String::new();
        for (k, v) in &es {
            if comment {
                text.push_str("# note\n\n");
            }
            text.push_str(&format!("  {} =  {}\n", KEYS[*k], v));
        }
        let mut keys: Vec<usize> = es.iter().map(|(k, _)| *k).collect();
        keys.sort();
        keys.dedup();
        let poly = es.iter().any(|(k, v)| ["psi", "psi2"].contains(&KEYS[*k]) && v.starts_with("poly:"));
        match parse_config(&text) {
            Ok(map) => {
                prop_assert_eq!(keys.len(), es.len());
                prop_assert!(!poly);
                for (k, v) in &es {
                    prop_assert_eq!(&map[KEYS[*k]], v);
                }
            }
            Err(_) => prop_assert!(keys.len() < es.len() || poly),
        }
    }

    #[test]
    fn reports_render_deterministically(names in prop::collection::vec("[a-z ]{1,12}", 0..6), fails in prop::collection::vec(any::<bool>(), 6), seed in any::<u64>()) {
        let mut r = Report::new("test", seed);
        for (n, f) in names.iter().zip(&fails) {
            r.check(CheckRecord::from_bool(n.clone(), !f, || "w".into()));
        }
        let failed = names.iter().zip(&fails).any(|(_, f)| *f);
        prop_assert_eq!(r.exit_code(), if failed { 1 } else { 0 });
        for format in [Format::Text, Format::Json, Format::Csv] {
            prop_assert_eq!(r.render(format), r.clone().render(format));
        }
        let json: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        prop_assert_eq!(json["seed"].as_u64(), Some(seed));
        prop_assert_eq!(json["schema"].as_str(), Some("gqe-report/1"));
    }
}
