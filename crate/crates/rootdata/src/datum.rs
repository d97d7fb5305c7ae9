//! Root data, dominance, the shifted Weyl action, isogenies and the Langlands
//! dual datum.

use exactalg::linsolve::solve_linear;
use exactalg::{ri, Rat};
use num_traits::ToPrimitive;

use crate::cartan::CartanMatrix;
use crate::error::RootError;

/// Integer coordinates of a weight in the lattice `X`.
pub type Weight = Vec<i64>;

/// A root datum `(X, Y, {alpha_i}, {coroot_i})`.
///
/// `X` and `Y` are both `Z^r` with the standard dot product as the perfect
/// pairing, so the datum is given by the coordinates of the simple roots in
/// `X` and of the simple coroots in `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    cartan: CartanMatrix,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn full_rank(vs: &[Vec<i64>], dim: usize) -> bool {
    let mut m: Vec<Vec<Rat>> = vs.iter().map(|v| v.iter().map(|&x| ri(x)).collect()).collect();
    let mut rank = 0;
    for c in 0..dim {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != ri(0)) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != ri(0) {
                let f = &m[r][c] / &m[rank][c];
                for j in 0..dim {
                    let t = &f * &m[rank][j];
                    m[r][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank == vs.len()
}

impl RootDatum {
    /// Builds a datum and checks the pairing and regularity conditions.
    pub fn new(cartan: CartanMatrix, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let l = cartan.rank();
        if roots.len() != l || coroots.len() != l {
            return Err(RootError::Datum(format!(
                "expected {} roots and coroots, got {} and {}",
                l,
                roots.len(),
                coroots.len()
            )));
        }
        let r = roots[0].len();
        if roots.iter().chain(&coroots).any(|v| v.len() != r) {
            return Err(RootError::Datum("roots and coroots must share one lattice rank".into()));
        }
        for i in 0..l {
            for j in 0..l {
                let p = dot(&coroots[i], &roots[j]);
                if p != cartan.entry(i, j) {
                    return Err(RootError::Datum(format!(
                        "pairing of coroot {} with root {} is {}, expected {}",
                        i,
                        j,
                        p,
                        cartan.entry(i, j)
                    )));
                }
            }
        }
        if !full_rank(&roots, r) {
            return Err(RootError::Datum("simple roots are linearly dependent".into()));
        }
        if !full_rank(&coroots, r) {
            return Err(RootError::Datum("simple coroots are linearly dependent".into()));
        }
        Ok(RootDatum { cartan, roots, coroots })
    }

    /// Simply connected datum: `X` is the weight lattice in fundamental-weight
    /// coordinates, so `alpha_j` is column `j` of the Cartan matrix.
    pub fn simply_connected(cartan: CartanMatrix) -> Result<Self, RootError> {
        let l = cartan.rank();
        let roots = (0..l).map(|j| (0..l).map(|i| cartan.entry(i, j)).collect()).collect();
        let coroots = (0..l).map(|i| (0..l).map(|k| i64::from(i == k)).collect()).collect();
        RootDatum::new(cartan, roots, coroots)
    }

    /// Adjoint datum: `X` is the root lattice.
    pub fn adjoint(cartan: CartanMatrix) -> Result<Self, RootError> {
        let l = cartan.rank();
        let roots = (0..l).map(|j| (0..l).map(|k| i64::from(j == k)).collect()).collect();
        let coroots = cartan.rows().to_vec();
        RootDatum::new(cartan, roots, coroots)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn lattice_rank(&self) -> usize {
        self.roots[0].len()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    fn check_weight(&self, l: &[i64]) -> Result<(), RootError> {
        if l.len() != self.lattice_rank() {
            return Err(RootError::Dimension { got: l.len(), expected: self.lattice_rank() });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), RootError> {
        if i >= self.cartan.rank() {
            return Err(RootError::IndexOutOfRange { index: i, rank: self.cartan.rank() });
        }
        Ok(())
    }

    /// The coroot pairings `<coroot_i, lambda>` for all `i`.
    pub fn pairings(&self, lambda: &[i64]) -> Vec<i64> {
        self.coroots.iter().map(|c| dot(c, lambda)).collect()
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        self.pairings(lambda).iter().all(|&x| x >= 0)
    }

    /// `lambda + sum_i m_i alpha_i`.
    pub fn add_roots(&self, lambda: &[i64], m: &[i64]) -> Weight {
        let mut out = lambda.to_vec();
        for (i, &mi) in m.iter().enumerate() {
            for (o, &a) in out.iter_mut().zip(&self.roots[i]) {
                *o += mi * a;
            }
        }
        out
    }

    /// Coefficients of `lambda - mu` over the simple roots, if it lies in the
    /// root lattice.
    pub fn root_coefficients(&self, diff: &[i64]) -> Option<Vec<i64>> {
        let r = self.lattice_rank();
        let l = self.cartan.rank();
        let a: Vec<Vec<Rat>> = (0..r).map(|k| (0..l).map(|i| ri(self.roots[i][k])).collect()).collect();
        let b: Vec<Rat> = diff.iter().map(|&x| ri(x)).collect();
        let x = solve_linear(&a, &b)?;
        x.iter().map(|q| if q.is_integer() { q.to_integer().to_i64() } else { None }).collect()
    }

    /// Dominance order: `mu <= lambda` iff `lambda - mu` is a nonnegative
    /// combination of simple roots.
    pub fn le(&self, mu: &[i64], lambda: &[i64]) -> bool {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        self.root_coefficients(&diff).is_some_and(|m| m.iter().all(|&x| x >= 0))
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, i: usize, lambda: &[i64]) -> Result<Weight, RootError> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        let c = dot(&self.coroots[i], lambda);
        Ok(lambda.iter().zip(&self.roots[i]).map(|(x, a)| x - c * a).collect())
    }

    /// Shifted action `s_i * lambda = s_i(lambda + rho) - rho`, which equals
    /// `lambda - (<coroot_i, lambda> + 1) alpha_i`.
    pub fn shifted_weyl_action(&self, i: usize, lambda: &[i64]) -> Result<Weight, RootError> {
        self.cartan.require_finite_type()?;
        self.check_index(i)?;
        self.check_weight(lambda)?;
        let c = dot(&self.coroots[i], lambda) + 1;
        Ok(lambda.iter().zip(&self.roots[i]).map(|(x, a)| x - c * a).collect())
    }

    /// Dual datum `(Y, X, {coroot_i}, {alpha_i})` with the transposed Cartan
    /// matrix.
    pub fn dual(&self) -> RootDatum {
        RootDatum { cartan: self.cartan.transpose(), roots: self.coroots.clone(), coroots: self.roots.clone() }
    }
}

/// An isogeny `xi: X' -> X` from `source` to `target` with scalings `xi_i`,
/// so that `xi(alpha'_i) = xi_i alpha_i` and the transpose sends `coroot_i`
/// to `xi_i coroot'_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isogeny {
    source: RootDatum,
    target: RootDatum,
    xi: Vec<i64>,
    map: Vec<Vec<i64>>,
}

impl Isogeny {
    /// Validates an isogeny given by the integer matrix of `X' -> X`
    /// (`map[row][col]` with rows indexed by `X`).
    pub fn new(source: RootDatum, target: RootDatum, xi: Vec<i64>, map: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let l = target.cartan.rank();
        let (r, rp) = (target.lattice_rank(), source.lattice_rank());
        let err = |m: String| Err(RootError::Isogeny(m));
        if source.cartan.rank() != l || xi.len() != l {
            return err("index sets of source and target differ".into());
        }
        if xi.iter().any(|&x| x <= 0) {
            return err("scalings must be positive".into());
        }
        if map.len() != r || map.iter().any(|row| row.len() != rp) {
            return err(format!("lattice map must be {}x{}", r, rp));
        }
        let apply = |v: &[i64]| -> Vec<i64> { map.iter().map(|row| dot(row, v)).collect() };
        let transpose = |v: &[i64]| -> Vec<i64> { (0..rp).map(|c| (0..r).map(|k| map[k][c] * v[k]).sum()).collect() };
        for i in 0..l {
            let img = apply(source.root(i));
            let want: Vec<i64> = target.root(i).iter().map(|a| xi[i] * a).collect();
            if img != want {
                return err(format!("xi(alpha'_{}) is not {} alpha_{}", i, xi[i], i));
            }
            let timg = transpose(target.coroot(i));
            let twant: Vec<i64> = source.coroot(i).iter().map(|a| xi[i] * a).collect();
            if timg != twant {
                return err(format!("transpose does not send coroot {} to {} times the dual coroot", i, xi[i]));
            }
        }
        let cols: Vec<Vec<i64>> = (0..rp).map(|c| (0..r).map(|k| map[k][c]).collect()).collect();
        if !full_rank(&cols, r) || !full_rank(&map, rp) {
            return err("lattice map or its transpose is not injective".into());
        }
        Ok(Isogeny { source, target, xi, map })
    }

    /// Isogeny that is diagonal on lattice coordinates.
    pub fn diagonal(source: RootDatum, target: RootDatum, xi: Vec<i64>) -> Result<Self, RootError> {
        let r = target.lattice_rank();
        let map = (0..r).map(|k| (0..r).map(|c| if k == c { xi[k] } else { 0 }).collect()).collect();
        Isogeny::new(source, target, xi, map)
    }

    pub fn identity(d: RootDatum) -> Self {
        let l = d.cartan.rank();
        let r = d.lattice_rank();
        let map = (0..r).map(|k| (0..r).map(|c| i64::from(k == c)).collect()).collect();
        Isogeny::new(d.clone(), d, vec![1; l], map).expect("identity is an isogeny")
    }

    /// Rank-one isogeny `alpha' -> g alpha` on the simply connected `A1`.
    pub fn rank_one(g: i64) -> Result<Self, RootError> {
        let a1 = RootDatum::simply_connected(crate::cartan::finite_type("A", 1)?)?;
        Isogeny::diagonal(a1.clone(), a1, vec![g])
    }

    pub fn source(&self) -> &RootDatum {
        &self.source
    }

    pub fn target(&self) -> &RootDatum {
        &self.target
    }

    pub fn xi(&self) -> &[i64] {
        &self.xi
    }

    pub fn apply(&self, lambda: &[i64]) -> Weight {
        self.map.iter().map(|row| dot(row, lambda)).collect()
    }

    /// The unique `lambda'` with `xi(lambda') = lambda`, if any.
    pub fn preimage(&self, lambda: &[i64]) -> Option<Weight> {
        let a: Vec<Vec<Rat>> = self.map.iter().map(|row| row.iter().map(|&x| ri(x)).collect()).collect();
        let b: Vec<Rat> = lambda.iter().map(|&x| ri(x)).collect();
        let x = solve_linear(&a, &b)?;
        x.iter().map(|q| if q.is_integer() { q.to_integer().to_i64() } else { None }).collect()
    }
}

/// Langlands isogeny from the simply connected datum of the transposed matrix
/// to that of `cartan`, with `xi_i = d / d_i` and `d` the lcm over all indices.
///
/// On fundamental-weight coordinates the lattice map is `c = xi * c'`
/// entrywise, so the dual-embedded sublattice is `{c : xi_i | c_i}`.
pub fn langlands_isogeny(cartan: &CartanMatrix) -> Result<Isogeny, RootError> {
    let d = cartan.require_symmetriser()?;
    let lcm = cartan.lcm_d()?;
    let xi: Vec<i64> = d.iter().map(|di| lcm / di).collect();
    let target = RootDatum::simply_connected(cartan.clone())?;
    let source = RootDatum::simply_connected(cartan.transpose())?;
    Isogeny::diagonal(source, target, xi)
}

/// Langlands dual datum, obtained by exchanging roots and coroots.
pub fn langlands_dual(d: &RootDatum) -> Result<RootDatum, RootError> {
    d.cartan.require_symmetriser()?;
    Ok(d.dual())
}
