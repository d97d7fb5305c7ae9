//! Irreducible characters of finite type, Langlands dual characters and
//! decomposition into irreducibles.

use std::collections::BTreeMap;

use exactalg::{ri, Rat};
use rootdata::{positive_roots, Isogeny, RootDatum, Weight};

use crate::character::Character;
use crate::error::RepError;

/// The invariant form `(alpha_i, alpha_j) = d_i a_ij` and the data needed to
/// evaluate it on root-lattice offsets from a fixed weight.
struct Form {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl Form {
    fn new(datum: &RootDatum) -> Result<Self, RepError> {
        let c = datum.cartan();
        c.require_finite_type()?;
        Ok(Form { a: c.rows().to_vec(), d: c.require_symmetriser()?.to_vec() })
    }

    /// `(x, y)` for `x, y` given on simple-root coordinates.
    fn roots(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * yj * self.d[i] * self.a[i][j];
            }
        }
        s
    }

    /// `(lambda, x)` with `lambda` given by its coroot pairings.
    fn weight(&self, labels: &[i64], x: &[i64]) -> i64 {
        x.iter().enumerate().map(|(j, xj)| xj * self.d[j] * labels[j]).sum()
    }
}

/// Weyl dimension formula `prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(datum: &RootDatum, lambda: &[i64]) -> Result<Rat, RepError> {
    let form = Form::new(datum)?;
    let labels = datum.pairings(lambda);
    let shifted: Vec<i64> = labels.iter().map(|x| x + 1).collect();
    let ones = vec![1; labels.len()];
    let mut out = ri(1);
    for alpha in positive_roots(datum.cartan())? {
        out = out * ri(form.weight(&shifted, &alpha)) / ri(form.weight(&ones, &alpha));
    }
    Ok(out)
}

/// Weight multiplicities of the irreducible module of highest weight
/// `lambda`, by the Freudenthal recursion. The total is checked against
/// [`weyl_dimension`].
pub fn freudenthal_char(datum: &RootDatum, lambda: &[i64]) -> Result<Character, RepError> {
    let form = Form::new(datum)?;
    if !datum.is_dominant(lambda) {
        return Err(RepError::NotDominant(lambda.to_vec()));
    }
    let labels = datum.pairings(lambda);
    let l = labels.len();
    let rho_plus: Vec<i64> = labels.iter().map(|x| x + 1).collect();
    let pos = positive_roots(datum.cartan())?;
    let norms: Vec<i64> = pos.iter().map(|a| form.roots(a, a)).collect();
    let lam_alpha: Vec<i64> = pos.iter().map(|a| form.weight(&labels, a)).collect();

    // Multiplicity of lambda - beta, keyed by beta on simple-root coordinates.
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    mult.insert(vec![0; l], 1);
    let mut level = vec![vec![0; l]];
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..l {
                let mut b = beta.clone();
                b[i] += 1;
                if !next.contains(&b) {
                    next.push(b);
                }
            }
        }
        next.sort();
        let mut kept = Vec::new();
        for beta in next {
            let denom = 2 * form.weight(&rho_plus, &beta) - form.roots(&beta, &beta);
            if denom <= 0 {
                continue;
            }
            let mut num = 0;
            for (ai, alpha) in pos.iter().enumerate() {
                let beta_alpha = form.roots(&beta, alpha);
                let mut k = 1;
                loop {
                    let shifted: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(m) = mult.get(&shifted) {
                        num += m * (lam_alpha[ai] - beta_alpha + k * norms[ai]);
                    }
                    k += 1;
                }
            }
            let num = 2 * num;
            if num % denom != 0 {
                return Err(RepError::NonIntegral(datum.add_roots(lambda, &neg(&beta))));
            }
            if num / denom > 0 {
                mult.insert(beta.clone(), num / denom);
                kept.push(beta);
            }
        }
        level = kept;
    }

    let mut chi = Character::new();
    for (beta, m) in &mult {
        chi.add_weight(datum.add_roots(lambda, &neg(beta)), *m as u64);
    }
    let weyl = weyl_dimension(datum, lambda)?;
    if ri(chi.dim() as i64) != weyl {
        return Err(RepError::DimensionMismatch { freudenthal: chi.dim(), weyl: exactalg::rational::fmt_rat(&weyl) });
    }
    Ok(chi)
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// The Langlands dual character: `chi` restricted to the image of `xi` and
/// read on the source lattice.
pub fn langlands_dual_char(chi: &Character, xi: &Isogeny) -> Character {
    chi.pullback(xi)
}

/// Writes a Weyl-symmetric `chi` as an integer combination of irreducible
/// characters, peeling off a dominance-maximal weight at each step.
pub fn decompose_into_irreducibles(chi: &Character, datum: &RootDatum) -> Result<BTreeMap<Weight, i64>, RepError> {
    for (w, m) in chi.entries() {
        for i in 0..datum.cartan().rank() {
            if chi.get(&datum.reflect(i, w)?) != *m {
                return Err(RepError::NotWeylSymmetric { weight: w.clone(), index: i });
            }
        }
    }
    let mut rest: BTreeMap<Weight, i64> = chi.entries().map(|(w, m)| (w.clone(), *m as i64)).collect();
    let mut out = BTreeMap::new();
    while !rest.is_empty() {
        let top = rest
            .keys()
            .rev()
            .find(|w| !rest.keys().any(|o| o != *w && datum.le(w, o)))
            .expect("a finite support has a maximal element")
            .clone();
        let c = rest[&top];
        if c < 0 {
            return Err(RepError::NegativeCoefficient { weight: top, coeff: c });
        }
        for (w, m) in freudenthal_char(datum, &top)?.entries() {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= c * *m as i64;
            if *e == 0 {
                rest.remove(w);
            }
        }
        out.insert(top, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rootdata::finite_type;

    fn sc(series: &str, n: usize) -> RootDatum {
        RootDatum::simply_connected(finite_type(series, n).unwrap()).unwrap()
    }

    #[test]
    fn sl2_string_and_trivial() {
        let a1 = sc("A", 1);
        assert_eq!(freudenthal_char(&a1, &[2]).unwrap(), Character::from_weights([2, 0, -2].map(|x| vec![x])));
        assert_eq!(freudenthal_char(&sc("G", 2), &[0, 0]).unwrap(), Character::from_weights([vec![0, 0]]));
    }

    #[test]
    fn small_dimensions_and_zero_weights() {
        let b2 = sc("B", 2);
        assert_eq!(freudenthal_char(&b2, &[1, 0]).unwrap().dim(), 5);
        assert_eq!(freudenthal_char(&b2, &[0, 1]).unwrap().dim(), 4);
        let adj = freudenthal_char(&b2, &[0, 2]).unwrap();
        assert_eq!((adj.dim(), adj.get(&[0, 0])), (10, 2));
        let g2 = sc("G", 2);
        let dims: Vec<u64> = [[1, 0], [0, 1]].iter().map(|l| freudenthal_char(&g2, l).unwrap().dim()).collect();
        assert_eq!(dims, vec![14, 7]);
        let a2 = freudenthal_char(&sc("A", 2), &[1, 1]).unwrap();
        assert_eq!((a2.dim(), a2.get(&[0, 0])), (8, 2));
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(freudenthal_char(&sc("A", 2), &[1, -1]), Err(RepError::NotDominant(_))));
    }

    #[test]
    fn rank_one_dual_characters() {
        let a1 = sc("A", 1);
        let l = |n: i64| freudenthal_char(&a1, &[n]).unwrap();
        let xi3 = Isogeny::rank_one(3).unwrap();
        assert_eq!(langlands_dual_char(&l(6), &xi3), l(2));
        let xi2 = Isogeny::rank_one(2).unwrap();
        assert_eq!(langlands_dual_char(&l(4), &xi2), l(2).add(&l(1)));
        assert_eq!(langlands_dual_char(&l(0), &xi2), l(0));
    }

    #[test]
    fn peel_off() {
        let a1 = sc("A", 1);
        let l = |n: i64| freudenthal_char(&a1, &[n]).unwrap();
        let d = decompose_into_irreducibles(&l(2).add(&l(0)), &a1).unwrap();
        assert_eq!(d, BTreeMap::from([(vec![2], 1), (vec![0], 1)]));
        assert_eq!(decompose_into_irreducibles(&l(5), &a1).unwrap(), BTreeMap::from([(vec![5], 1)]));
        let lopsided = Character::from_weights([vec![2], vec![0]]);
        assert!(matches!(decompose_into_irreducibles(&lopsided, &a1), Err(RepError::NotWeylSymmetric { .. })));
    }
}
