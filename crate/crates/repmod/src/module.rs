//! Weight modules with sparse generator actions.

use std::collections::BTreeMap;
use std::fmt;

use crystal::{Colouring, Sign};
use exactalg::{Rat, SparseMat, Series};
use rootdata::{finite_type, RootDatum, Weight};

use crate::character::Character;
use crate::error::RepError;
use crate::scalar::ModuleScalar;

/// A generator acting on a weight module. Indices are zero-based; the
/// display form is one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    /// The `j`-th basis vector of the coweight lattice `Y`.
    Y(usize),
    /// `X_i^+`.
    Raise(usize),
    /// `X_i^-`.
    Lower(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Y(j) => write!(f, "Y{}", j + 1),
            Gen::Raise(i) => write!(f, "X{}+", i + 1),
            Gen::Lower(i) => write!(f, "X{}-", i + 1),
        }
    }
}

/// A finite weighted basis with generator actions over the ring of `unit`.
#[derive(Debug, Clone)]
pub struct WeightModule<T: ModuleScalar> {
    datum: RootDatum,
    labels: Vec<String>,
    weights: Vec<Weight>,
    unit: T,
    actions: BTreeMap<Gen, SparseMat<T>>,
}

impl<T: ModuleScalar> WeightModule<T> {
    /// A module with the given weighted basis, `Y` acting diagonally by the
    /// weights and all `X_i^{+-}` acting by zero.
    pub fn new(datum: RootDatum, labels: Vec<String>, weights: Vec<Weight>, unit: T) -> Result<Self, RepError> {
        if labels.len() != weights.len() {
            return Err(RepError::BasisLength { labels: labels.len(), weights: weights.len() });
        }
        let rank = datum.lattice_rank();
        if let Some(w) = weights.iter().find(|w| w.len() != rank) {
            return Err(RepError::WeightRank { weight: w.clone(), got: w.len(), rank });
        }
        let mut m = WeightModule { datum, labels, weights, unit, actions: BTreeMap::new() };
        for j in 0..rank {
            let diag = m.weights.iter().map(|w| m.unit.int(w[j])).collect();
            m.actions.insert(Gen::Y(j), SparseMat::diagonal(diag));
        }
        Ok(m)
    }

    /// Semisimple module with the weights of `chi` and zero root actions.
    pub fn from_character(datum: RootDatum, chi: &Character, unit: T) -> Result<Self, RepError> {
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        for (w, m) in chi.entries() {
            for c in 0..*m {
                labels.push(format!("{:?}#{}", w, c));
                weights.push(w.clone());
            }
        }
        WeightModule::new(datum, labels, weights, unit)
    }

    /// Replaces the action of `g`.
    pub fn set_action(&mut self, g: Gen, m: SparseMat<T>) -> Result<(), RepError> {
        let ok = match g {
            Gen::Y(j) => j < self.datum.lattice_rank(),
            Gen::Raise(i) | Gen::Lower(i) => i < self.datum.cartan().rank(),
        };
        if !ok {
            return Err(RepError::Generator(g.to_string()));
        }
        let dim = self.dim();
        if m.shape() != (dim, dim) {
            return Err(RepError::Shape { name: g.to_string(), got: m.shape(), dim });
        }
        self.actions.insert(g, m);
        Ok(())
    }

    /// Overwrites a declared weight without touching any action.
    pub fn set_weight(&mut self, index: usize, w: Weight) {
        self.weights[index] = w;
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn unit(&self) -> &T {
        &self.unit
    }

    pub fn ring(&self) -> String {
        self.unit.ring()
    }

    /// The matrix of `g`, zero when no action was set.
    pub fn op(&self, g: Gen) -> SparseMat<T> {
        self.actions.get(&g).cloned().unwrap_or_else(|| self.zero_op())
    }

    pub fn zero_op(&self) -> SparseMat<T> {
        SparseMat::zero(self.dim(), self.dim())
    }

    pub fn identity_op(&self) -> SparseMat<T> {
        SparseMat::identity(self.dim(), self.unit.int(1))
    }

    /// Diagonal operator `f(weight)` on the basis.
    pub fn weight_op(&self, f: impl Fn(&Weight) -> T) -> SparseMat<T> {
        SparseMat::diagonal(self.weights.iter().map(f).collect())
    }

    pub fn character(&self) -> Character {
        Character::from_weights(self.weights.iter().cloned())
    }

    /// Block direct sum; labels of the second summand are suffixed with `'`.
    pub fn direct_sum(&self, o: &Self) -> Result<Self, RepError> {
        if self.datum != o.datum {
            return Err(RepError::DatumMismatch);
        }
        let labels = self.labels.iter().cloned().chain(o.labels.iter().map(|l| format!("{}'", l))).collect();
        let weights = self.weights.iter().chain(&o.weights).cloned().collect();
        let mut out = WeightModule::new(self.datum.clone(), labels, weights, self.unit.clone())?;
        let shift = self.dim();
        let gens: Vec<Gen> = self.actions.keys().chain(o.actions.keys()).copied().collect();
        for g in gens {
            let mut m = out.zero_op();
            for ((r, c), a) in self.op(g).entries() {
                m.set(*r, *c, a.clone());
            }
            for ((r, c), a) in o.op(g).entries() {
                m.set(r + shift, c + shift, a.clone());
            }
            out.actions.insert(g, m);
        }
        Ok(out)
    }

    /// Submodule spanned by the basis vectors at `keep`, with `g` acting by
    /// the compressed matrices. Entries leaving the span are dropped.
    pub(crate) fn compress(&self, keep: &[usize], mats: impl Fn(Gen) -> SparseMat<T>, datum: RootDatum, weights: Vec<Weight>) -> Result<Self, RepError> {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut out = WeightModule::new(datum, labels, weights, self.unit.clone())?;
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        for i in 0..out.datum.cartan().rank() {
            for g in [Gen::Raise(i), Gen::Lower(i)] {
                let full = mats(g);
                let mut m = out.zero_op();
                for ((r, c), a) in full.entries() {
                    if let (Some(&r2), Some(&c2)) = (pos.get(r), pos.get(c)) {
                        m.set(r2, c2, a.clone());
                    }
                }
                out.actions.insert(g, m);
            }
        }
        Ok(out)
    }
}

/// Simply connected `A1`, the datum of the rank-one modules.
pub fn sl2_datum() -> RootDatum {
    RootDatum::simply_connected(finite_type("A", 1).expect("A1 exists")).expect("A1 datum")
}

/// `L(n, psi)` modulo `h^order`: basis `b_{n,0..n}` of weights `n - 2p`,
/// `X^- b_{n,p} = psi^-(n, p + 1) b_{n,p+1}` and
/// `X^+ b_{n,p} = psi^+(n, n - p + 1) b_{n,p-1}`.
pub fn build_l(n: usize, psi: &Colouring, order: usize) -> Result<WeightModule<Series<Rat>>, RepError> {
    let ni = n as i64;
    let labels = (0..=n).map(|p| format!("b{},{}", n, p)).collect();
    let weights = (0..=ni).map(|p| vec![ni - 2 * p]).collect();
    let mut m = WeightModule::new(sl2_datum(), labels, weights, Series::one(order))?;
    let mut lower = m.zero_op();
    let mut raise = m.zero_op();
    for p in 0..n {
        let pi = p as i64;
        lower.set(p + 1, p, psi.eval(Sign::Minus, ni, pi + 1, order)?);
        raise.set(p, p + 1, psi.eval(Sign::Plus, ni, ni - pi, order)?);
    }
    m.set_action(Gen::Lower(0), lower)?;
    m.set_action(Gen::Raise(0), raise)?;
    Ok(m)
}

/// The defining 3-dimensional module of `sl3`, with weights `(1,0)`,
/// `(-1,1)`, `(0,-1)` on fundamental-weight coordinates and elementary
/// matrices `E_12`, `E_23` and their transposes as `X_1^{+-}`, `X_2^{+-}`.
///
/// Since `[1]_q = 1` and `[-1]_q = -1`, the same matrices realise the
/// defining module of `U_h(sl3)`; `unit` fixes the coefficient ring.
pub fn a2_defining<T: ModuleScalar>(unit: T) -> Result<WeightModule<T>, RepError> {
    let datum = RootDatum::simply_connected(finite_type("A", 2)?)?;
    let labels = vec!["v1".into(), "v2".into(), "v3".into()];
    let weights = vec![vec![1, 0], vec![-1, 1], vec![0, -1]];
    let one = unit.int(1);
    let mut m = WeightModule::new(datum, labels, weights, unit)?;
    for (i, (r, c)) in [(0, 1), (1, 2)].into_iter().enumerate() {
        let mut e = m.zero_op();
        e.set(r, c, one.clone());
        let mut f = m.zero_op();
        f.set(c, r, one.clone());
        m.set_action(Gen::Raise(i), e)?;
        m.set_action(Gen::Lower(i), f)?;
    }
    Ok(m)
}

/// One line of a [`RelationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    /// Label of the first basis vector on which the identity fails.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the relations that no colouring deforms: `Y` acts diagonally by
/// the declared weights, the `Y` commute, and
/// `[y, X_i^{+-}] = +-<y, alpha_i> X_i^{+-}` for each basis vector `y` of `Y`.
pub fn verify_slf_relations<T: ModuleScalar>(m: &WeightModule<T>) -> RelationReport {
    let rank = m.datum.lattice_rank();
    let mut checks = Vec::new();
    let first_bad_column = |d: &SparseMat<T>| d.entries().next().map(|((_, c), _)| m.labels[*c].clone());
    for j in 0..rank {
        let want = m.weight_op(|w| m.unit.int(w[j]));
        let witness = first_bad_column(&m.op(Gen::Y(j)).sub(&want));
        checks.push(RelationCheck { name: format!("{} diagonal", Gen::Y(j)), passed: witness.is_none(), witness });
        for k in j + 1..rank {
            let witness = first_bad_column(&m.op(Gen::Y(j)).commutator(&m.op(Gen::Y(k))));
            checks.push(RelationCheck {
                name: format!("[{}, {}]", Gen::Y(j), Gen::Y(k)),
                passed: witness.is_none(),
                witness,
            });
        }
    }
    for i in 0..m.datum.cartan().rank() {
        for (g, s) in [(Gen::Raise(i), 1), (Gen::Lower(i), -1)] {
            let x = m.op(g);
            for j in 0..rank {
                let c = m.unit.int(s * m.datum.root(i)[j]);
                let d = m.op(Gen::Y(j)).commutator(&x).sub(&x.scale(&c));
                let witness = first_bad_column(&d);
                checks.push(RelationCheck { name: format!("[{}, {}]", Gen::Y(j), g), passed: witness.is_none(), witness });
            }
        }
    }
    RelationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::{ri, RingElem};

    #[test]
    fn trivial_module() {
        let m = build_l(0, &Colouring::quantum(), 3).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.op(Gen::Raise(0)).is_zero() && m.op(Gen::Lower(0)).is_zero());
    }

    #[test]
    fn classical_casimir_entry() {
        let m = build_l(2, &Colouring::Classical, 1).unwrap();
        let ef = m.op(Gen::Raise(0)).mul(&m.op(Gen::Lower(0)));
        assert_eq!(ef.get(0, 0), Some(&Series::from_int(1, 2)));
        let q = build_l(1, &Colouring::quantum(), 4).unwrap();
        let ef = q.op(Gen::Raise(0)).mul(&q.op(Gen::Lower(0)));
        assert_eq!(ef.get(0, 0), Some(&Series::one(4)));
    }

    #[test]
    fn relations_hold_and_corruption_is_caught() {
        let m = build_l(4, &Colouring::quantum(), 3).unwrap();
        assert!(verify_slf_relations(&m).passed());
        let a2 = a2_defining(ri(1)).unwrap();
        assert!(verify_slf_relations(&a2).passed());
        let q = a2_defining(Series::<Rat>::one(4)).unwrap();
        assert!(verify_slf_relations(&q).passed());

        let mut bad = m.clone();
        bad.set_weight(2, vec![1]);
        let r = verify_slf_relations(&bad);
        assert!(!r.passed());
        let fail = r.checks.iter().find(|c| !c.passed).unwrap();
        assert_eq!(fail.name, "Y1 diagonal");
        assert_eq!(fail.witness.as_deref(), Some("b4,2"));
    }

    #[test]
    fn quantum_a2_satisfies_the_quantum_commutator() {
        let m = a2_defining(Series::<Rat>::one(5)).unwrap();
        for i in 0..2 {
            let c = m.op(Gen::Raise(i)).commutator(&m.op(Gen::Lower(i)));
            let want = m.weight_op(|w| exactalg::quantum_number_series(w[i], 5));
            assert!(c.sub(&want).is_zero());
        }
    }

    #[test]
    fn direct_sum_adds_characters() {
        let a = build_l(3, &Colouring::Classical, 1).unwrap();
        let b = build_l(1, &Colouring::Classical, 1).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.character(), a.character().add(&b.character()));
        assert!(verify_slf_relations(&s).passed());
        assert!(s.op(Gen::Raise(0)).get(4, 5).is_some_and(|x| !x.is_zero_elem()));
    }
}
