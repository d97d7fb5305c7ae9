//! Combinatorics of the root lattice: sign counts, the Serre set `A`, and
//! exhaustive checks of the lower-cone and dominance lemmas.

use std::collections::BTreeSet;

use crate::cartan::CartanMatrix;
use crate::error::RootError;

/// Coefficients `(m_i)` of an element of the root lattice over the simple
/// roots.
pub type RootLatticeElement = Vec<i64>;

/// Sign selector for [`sharp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

/// Number of indices with `m_i >= 1` (`Plus`) or `m_i <= -1` (`Minus`).
pub fn sharp(mu: &[i64], sign: Sign) -> usize {
    match sign {
        Sign::Plus => mu.iter().filter(|&&m| m >= 1).count(),
        Sign::Minus => mu.iter().filter(|&&m| m <= -1).count(),
    }
}

/// `mu <= lambda` in the root-lattice order.
pub fn le(mu: &[i64], lambda: &[i64]) -> bool {
    mu.iter().zip(lambda).all(|(a, b)| a <= b)
}

/// Strict order `mu > lambda`: `mu >= lambda` and `mu != lambda`.
pub fn gt(mu: &[i64], lambda: &[i64]) -> bool {
    le(lambda, mu) && mu != lambda
}

/// Pairings `<coroot_k, mu>` of a root-lattice element, that is `a * m`.
pub fn pairings(a: &CartanMatrix, mu: &[i64]) -> Vec<i64> {
    (0..a.rank()).map(|k| (0..a.rank()).map(|s| a.entry(k, s) * mu[s]).sum()).collect()
}

pub fn is_dominant(a: &CartanMatrix, mu: &[i64]) -> bool {
    pairings(a, mu).iter().all(|&x| x >= 0)
}

fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

/// `-alpha_j + alpha_k - (1 - a_ij) alpha_i`.
fn cone_apex(a: &CartanMatrix, i: usize, j: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; a.rank()];
    v[j] -= 1;
    v[k] += 1;
    v[i] -= 1 - a.entry(i, j);
    v
}

/// `alpha_j - alpha_l + (1 - a_ij) alpha_i - (1 - a_kl) alpha_k`.
fn serre_element(a: &CartanMatrix, i: usize, j: usize, k: usize, l: usize) -> Vec<i64> {
    let mut v = unit(a.rank(), j);
    v[l] -= 1;
    v[i] += 1 - a.entry(i, j);
    v[k] -= 1 - a.entry(k, l);
    v
}

/// The set `A` over all `i != j`, `k != l`, deduplicated and sorted.
pub fn serre_set_a(a: &CartanMatrix) -> Result<BTreeSet<RootLatticeElement>, RootError> {
    let n = a.rank();
    if n < 2 {
        return Err(RootError::RankTooSmall);
    }
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for k in 0..n {
                for l in (0..n).filter(|&l| l != k) {
                    out.insert(serre_element(a, i, j, k, l));
                }
            }
        }
    }
    Ok(out)
}

/// Outcome of an exhaustive lemma check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub name: &'static str,
    /// Number of elementary membership tests performed.
    pub checked: usize,
    /// First violation found, as a readable description.
    pub counterexample: Option<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

/// Checks that `0` lies neither in `D(-alpha_j + alpha_k - (1 - a_ij) alpha_i)`
/// nor in `D^>(alpha_j - alpha_k + (1 - a_ij) alpha_i)` for all `i != j` and
/// all `k`.
pub fn check_lemma_ad0(a: &CartanMatrix) -> LemmaReport {
    let n = a.rank();
    let zero = vec![0; n];
    let mut checked = 0;
    for (i, j, k) in triples(n) {
        let apex = cone_apex(a, i, j, k);
        let neg: Vec<i64> = apex.iter().map(|x| -x).collect();
        checked += 2;
        if le(&zero, &apex) {
            return fail("lemma_ad0", checked, format!("0 <= {:?} for (i,j,k)=({},{},{})", apex, i, j, k));
        }
        if gt(&zero, &neg) {
            return fail("lemma_ad0", checked, format!("0 > {:?} for (i,j,k)=({},{},{})", neg, i, j, k));
        }
    }
    LemmaReport { name: "lemma_ad0", checked, counterexample: None }
}

fn fail(name: &'static str, checked: usize, msg: String) -> LemmaReport {
    LemmaReport { name, checked, counterexample: Some(msg) }
}

/// Checks that `A` meets neither `D(-alpha_j' + alpha_k' - (1 - a_i'j') alpha_i')`
/// nor `D^>=(alpha_j' - alpha_k' + (1 - a_i'j') alpha_i')` for all `i' != j'`
/// and all `k'`.
pub fn check_lemma_ad(a: &CartanMatrix) -> Result<LemmaReport, RootError> {
    let set = serre_set_a(a)?;
    let mut checked = 0;
    for (i, j, k) in triples(a.rank()) {
        let apex = cone_apex(a, i, j, k);
        let neg: Vec<i64> = apex.iter().map(|x| -x).collect();
        for mu in &set {
            checked += 2;
            if le(mu, &apex) {
                return Ok(fail("lemma_ad", checked, format!("{:?} <= {:?} for (i',j',k')=({},{},{})", mu, apex, i, j, k)));
            }
            if le(&neg, mu) {
                return Ok(fail("lemma_ad", checked, format!("{:?} >= {:?} for (i',j',k')=({},{},{})", mu, neg, i, j, k)));
            }
        }
    }
    Ok(LemmaReport { name: "lemma_ad", checked, counterexample: None })
}

/// Checks that `0` is the only dominant element of `A`.
pub fn check_lemma_dominant(a: &CartanMatrix) -> Result<LemmaReport, RootError> {
    let set = serre_set_a(a)?;
    let mut checked = 0;
    for mu in &set {
        checked += 1;
        if mu.iter().any(|&m| m != 0) && is_dominant(a, mu) {
            return Ok(fail("lemma_dominant", checked, format!("{:?} is dominant", mu)));
        }
    }
    if !set.iter().any(|mu| mu.iter().all(|&m| m == 0)) {
        return Ok(fail("lemma_dominant", checked, "0 is missing from A".into()));
    }
    Ok(LemmaReport { name: "lemma_dominant", checked, counterexample: None })
}
