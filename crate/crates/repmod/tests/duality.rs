use exactalg::ri;
use repmod::*;
use rootdata::{finite_type, langlands_isogeny, RootDatum};

fn sc(series: &str, n: usize) -> RootDatum {
    RootDatum::simply_connected(finite_type(series, n).unwrap()).unwrap()
}

/// Tabulated dimension formulas, with `a` the label on the short simple root
/// and `b` the label on the long one where the two differ.
fn table_dimension(series: &str, l: &[i64]) -> i64 {
    match series {
        "A1" => l[0] + 1,
        "A2" => (l[0] + 1) * (l[1] + 1) * (l[0] + l[1] + 2) / 2,
        "B2" => {
            let (b, a) = (l[0], l[1]);
            (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
        }
        "G2" => {
            let (b, a) = (l[0], l[1]);
            (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5) / 120
        }
        _ => unreachable!(),
    }
}

fn dominant_up_to(rank: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|v| (0..=height).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.retain(|v| v.iter().sum::<i64>() <= height);
    out
}

#[test]
fn freudenthal_is_symmetric_with_weyl_totals() {
    for (name, series, n) in [("A1", "A", 1), ("A2", "A", 2), ("B2", "B", 2), ("G2", "G", 2)] {
        let d = sc(series, n);
        for lambda in dominant_up_to(n, 6) {
            let chi = freudenthal_char(&d, &lambda).unwrap();
            assert_eq!(chi.dim() as i64, table_dimension(name, &lambda), "{} {:?}", name, lambda);
            assert_eq!(weyl_dimension(&d, &lambda).unwrap(), ri(chi.dim() as i64));
            for (w, m) in chi.entries() {
                for i in 0..n {
                    assert_eq!(chi.get(&d.reflect(i, w).unwrap()), *m, "{} {:?} at {:?}", name, lambda, w);
                }
            }
            assert_eq!(decompose_into_irreducibles(&chi, &d).unwrap().into_iter().collect::<Vec<_>>(), vec![(lambda, 1)]);
        }
    }
}

#[test]
fn dual_characters_contain_the_dual_irreducible() {
    let b2 = finite_type("B", 2).unwrap();
    for c in [b2.clone(), b2.transpose()] {
        let xi = langlands_isogeny(&c).unwrap();
        let mut seen = 0;
        for lambda in dominant_up_to(2, 4) {
            let Some(dual) = xi.preimage(&lambda) else { continue };
            seen += 1;
            let chi = freudenthal_char(xi.target(), &lambda).unwrap();
            let parts = decompose_into_irreducibles(&langlands_dual_char(&chi, &xi), xi.source()).unwrap();
            assert!(parts.values().all(|&c| c >= 0), "{:?}", parts);
            assert!(parts.get(&dual).copied().unwrap_or(0) >= 1, "{:?} missing in {:?}", dual, parts);
        }
        assert!(seen >= 6);
    }
}

#[test]
fn character_csv_export() {
    let a2 = sc("A", 2);
    let chi = freudenthal_char(&a2, &[1, 0]).unwrap();
    assert_eq!(chi.to_csv(&a2), "w1,w2,mult\n0,-1,1\n-1,1,1\n1,0,1\n");
}
