//! Positive roots of finite-type Cartan matrices.

use std::collections::BTreeSet;

use crate::cartan::CartanMatrix;
use crate::error::RootError;
use crate::lattice::{pairings, RootLatticeElement};

/// Positive roots as coefficient vectors over the simple roots, sorted by
/// height and then lexicographically.
///
/// Built level by level with root strings: if `beta` is a root, `beta - p
/// alpha_i` is the bottom of its `alpha_i`-string and `p - <coroot_i, beta> >
/// 0`, then `beta + alpha_i` is a root.
pub fn positive_roots(a: &CartanMatrix) -> Result<Vec<RootLatticeElement>, RootError> {
    a.require_finite_type()?;
    let l = a.rank();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            let pb = pairings(a, beta);
            for i in 0..l {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pb[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
    }
    let mut out: Vec<_> = all.into_iter().collect();
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    Ok(out)
}
