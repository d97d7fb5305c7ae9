//! Finitely supported weight multiplicities.

use std::collections::BTreeMap;

use rootdata::{Isogeny, RootDatum, Weight};

/// A map from weights to positive multiplicities; zero entries are never
/// stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    mult: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new() -> Self {
        Character::default()
    }

    /// Counts each weight once per occurrence.
    pub fn from_weights(ws: impl IntoIterator<Item = Weight>) -> Self {
        let mut c = Character::new();
        for w in ws {
            c.add_weight(w, 1);
        }
        c
    }

    pub fn add_weight(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.mult.entry(w).or_insert(0) += m;
        }
    }

    pub fn get(&self, w: &[i64]) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.mult.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Total dimension.
    pub fn dim(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn add(&self, o: &Character) -> Character {
        let mut c = self.clone();
        for (w, m) in &o.mult {
            c.add_weight(w.clone(), *m);
        }
        c
    }

    /// `chi o xi`: the multiplicity of `mu'` on the source of `xi` is that of
    /// `xi(mu')`. Weights outside the image of `xi` are dropped.
    pub fn pullback(&self, xi: &Isogeny) -> Character {
        let mut c = Character::new();
        for (w, m) in &self.mult {
            if let Some(p) = xi.preimage(w) {
                c.add_weight(p, *m);
            }
        }
        c
    }

    /// CSV rows `w_1,...,w_r,mult`, sorted by height (the sum of the coroot
    /// pairings) and then lexicographically, after a header line.
    pub fn to_csv(&self, datum: &RootDatum) -> String {
        let r = datum.lattice_rank();
        let mut rows: Vec<(i64, &Weight, u64)> =
            self.mult.iter().map(|(w, m)| (datum.pairings(w).iter().sum(), w, *m)).collect();
        rows.sort();
        let mut out: Vec<String> = Vec::with_capacity(rows.len() + 1);
        let mut header: Vec<String> = (1..=r).map(|i| format!("w{}", i)).collect();
        header.push("mult".into());
        out.push(header.join(","));
        for (_, w, m) in rows {
            let mut cells: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            cells.push(m.to_string());
            out.push(cells.join(","));
        }
        out.join("\n") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pullback_along_rank_one_isogenies() {
        let l4 = Character::from_weights([4, 2, 0, -2, -4].map(|x| vec![x]));
        let xi2 = Isogeny::rank_one(2).unwrap();
        assert_eq!(l4.pullback(&xi2), Character::from_weights([2, 1, 0, -1, -2].map(|x| vec![x])));
        let l3 = Character::from_weights([3, 1, -1, -3].map(|x| vec![x]));
        assert!(l3.pullback(&xi2).is_empty());
    }

    #[test]
    fn csv_is_sorted_by_height() {
        let a1 = crate::module::sl2_datum();
        let c = Character::from_weights([vec![2], vec![0], vec![-2], vec![0]]);
        assert_eq!(c.to_csv(&a1), "w1,mult\n-2,1\n0,2\n2,1\n");
    }
}
