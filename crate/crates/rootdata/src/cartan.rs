//! Generalised Cartan matrices and the finite-type catalogue.

use exactalg::{ri, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::RootError;

/// A validated generalised Cartan matrix with its symmetriser, if any.
///
/// The entry `a[i][j]` is the pairing of the `i`-th simple coroot with the
/// `j`-th simple root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    a: Vec<Vec<i64>>,
    d: Option<Vec<i64>>,
}

/// Validates the axioms of a generalised Cartan matrix and computes a
/// symmetriser when one exists.
pub fn validate_gcm(a: Vec<Vec<i64>>) -> Result<CartanMatrix, RootError> {
    let l = a.len();
    if l == 0 {
        return Err(RootError::Empty);
    }
    for (row, r) in a.iter().enumerate() {
        if r.len() != l {
            return Err(RootError::NotSquare { row, len: r.len(), rank: l });
        }
    }
    for i in 0..l {
        if a[i][i] != 2 {
            return Err(RootError::Diagonal(i, a[i][i]));
        }
        for j in 0..l {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return Err(RootError::PositiveOffDiagonal(i, j, a[i][j]));
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return Err(RootError::ZeroPattern(i, j));
            }
        }
    }
    let d = symmetriser(&a);
    Ok(CartanMatrix { a, d })
}

/// Connected components of the Dynkin diagram, each sorted, ordered by
/// smallest index.
fn components_of(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let l = a.len();
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for s in 0..l {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn lcm_i64(a: i64, b: i64) -> i64 {
    a / gcd_i64(a, b) * b
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Solves `d_i a_ij = d_j a_ji` by propagation from the smallest index of each
/// component, then clears denominators so each component is coprime.
fn symmetriser(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let l = a.len();
    let mut d: Vec<Option<Rat>> = vec![None; l];
    for comp in components_of(a) {
        d[comp[0]] = Some(Rat::one());
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("assigned before push");
            for &j in &comp {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = &di * ri(a[i][j]) / ri(a[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(old) if *old != dj => return None,
                    Some(_) => {}
                }
            }
        }
        let den = comp.iter().fold(1i64, |acc, &i| {
            let x = d[i].as_ref().expect("component assigned");
            lcm_i64(acc, x.denom().to_i64().expect("small denominator"))
        });
        let ints: Vec<i64> = comp
            .iter()
            .map(|&i| (d[i].clone().unwrap() * ri(den)).to_integer().to_i64().expect("small"))
            .collect();
        let g = ints.iter().fold(0, |acc, &x| gcd_i64(acc, x));
        for (&i, x) in comp.iter().zip(ints) {
            d[i] = Some(ri(x / g));
        }
    }
    Some(d.into_iter().map(|x| x.unwrap().to_integer().to_i64().expect("small")).collect())
}

impl CartanMatrix {
    /// Validates `a` and checks a supplied symmetriser against it.
    pub fn with_symmetriser(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self, RootError> {
        let mut cm = validate_gcm(a)?;
        if d.len() != cm.rank() {
            return Err(RootError::Dimension { got: d.len(), expected: cm.rank() });
        }
        for i in 0..cm.rank() {
            if d[i] <= 0 {
                return Err(RootError::BadSymmetriser(i, i));
            }
            for j in 0..cm.rank() {
                if d[i] * cm.a[i][j] != d[j] * cm.a[j][i] {
                    return Err(RootError::BadSymmetriser(i, j));
                }
            }
        }
        cm.d = Some(d);
        Ok(cm)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// The symmetriser, coprime on each connected component.
    pub fn symmetriser(&self) -> Option<&[i64]> {
        self.d.as_deref()
    }

    pub fn is_symmetrisable(&self) -> bool {
        self.d.is_some()
    }

    /// Symmetriser or an error for non-symmetrisable matrices.
    pub fn require_symmetriser(&self) -> Result<&[i64], RootError> {
        self.symmetriser().ok_or(RootError::NotSymmetrisable)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.a)
    }

    /// Transposed matrix, which is again a generalised Cartan matrix.
    pub fn transpose(&self) -> CartanMatrix {
        let l = self.rank();
        let t = (0..l).map(|i| (0..l).map(|j| self.a[j][i]).collect()).collect();
        validate_gcm(t).expect("transpose of a GCM is a GCM")
    }

    /// Least common multiple of the symmetriser over all indices.
    pub fn lcm_d(&self) -> Result<i64, RootError> {
        Ok(self.require_symmetriser()?.iter().fold(1, |acc, &x| lcm_i64(acc, x)))
    }

    /// Finite type: symmetrisable with `diag(d) a` positive definite.
    pub fn is_finite_type(&self) -> bool {
        let Some(d) = &self.d else { return false };
        let l = self.rank();
        let mut m: Vec<Vec<Rat>> = (0..l).map(|i| (0..l).map(|j| ri(d[i] * self.a[i][j])).collect()).collect();
        for k in 0..l {
            if !m[k][k].is_positive() {
                return false;
            }
            for i in k + 1..l {
                let f = &m[i][k] / &m[k][k];
                for j in k..l {
                    let t = &f * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }
        true
    }

    pub fn require_finite_type(&self) -> Result<(), RootError> {
        if self.is_finite_type() {
            Ok(())
        } else {
            Err(RootError::NotFiniteType)
        }
    }

    /// Inverse over the rationals, if the matrix is nonsingular.
    pub fn inverse(&self) -> Option<Vec<Vec<Rat>>> {
        let l = self.rank();
        let mut m: Vec<Vec<Rat>> = (0..l)
            .map(|i| {
                let mut row: Vec<Rat> = self.a[i].iter().map(|&x| ri(x)).collect();
                row.extend((0..l).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        for c in 0..l {
            let p = (c..l).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..l {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for j in 0..2 * l {
                        let t = &f * &m[c][j];
                        m[r][j] -= t;
                    }
                }
            }
        }
        Some(m.into_iter().map(|r| r[l..].to_vec()).collect())
    }

    /// Conjugates by a permutation: the new index `i` is the old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> CartanMatrix {
        let l = self.rank();
        let a = (0..l).map(|i| (0..l).map(|j| self.a[perm[i]][perm[j]]).collect()).collect();
        validate_gcm(a).expect("permutation preserves the axioms")
    }

    /// Block-diagonal sum of two matrices.
    pub fn direct_sum(&self, o: &CartanMatrix) -> CartanMatrix {
        let (l, m) = (self.rank(), o.rank());
        let mut a = vec![vec![0; l + m]; l + m];
        for i in 0..l {
            a[i][..l].copy_from_slice(&self.a[i]);
        }
        for i in 0..m {
            a[l + i][l..].copy_from_slice(&o.a[i]);
        }
        validate_gcm(a).expect("direct sum of GCMs is a GCM")
    }
}

/// Cartan matrix of a connected finite type, e.g. `("B", 3)`.
///
/// `B_n` has its short root last, `C_n` its long root last, and `G_2` has
/// `a[1][0] = -3`.
pub fn finite_type(series: &str, n: usize) -> Result<CartanMatrix, RootError> {
    let bad = || RootError::Datum(format!("unknown finite type {}{}", series, n));
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match (series, n) {
        ("A", n) if n >= 1 => chain(&mut a, n),
        ("B", n) if n >= 2 => {
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        ("C", n) if n >= 2 => {
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        ("D", n) if n >= 4 => {
            chain(&mut a, n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        ("G", 2) => {
            chain(&mut a, 2);
            a[1][0] = -3;
        }
        ("F", 4) => {
            chain(&mut a, 4);
            a[2][1] = -2;
        }
        ("E", n) if (6..=8).contains(&n) => {
            chain(&mut a, n - 1);
            a[2][n - 1] = -1;
            a[n - 1][2] = -1;
        }
        _ => return Err(bad()),
    }
    validate_gcm(a)
}

/// Parses names such as `A2`, `B2`, `G2`, `A1xA1` or `B2xA1`.
pub fn named(name: &str) -> Result<CartanMatrix, RootError> {
    let mut out: Option<CartanMatrix> = None;
    for part in name.split(['x', '×']) {
        let part = part.trim();
        let (s, n) = part.split_at(part.find(|c: char| c.is_ascii_digit()).ok_or_else(|| {
            RootError::Datum(format!("cannot parse Cartan type '{}'", name))
        })?);
        let n: usize = n.parse().map_err(|_| RootError::Datum(format!("cannot parse Cartan type '{}'", name)))?;
        let cm = finite_type(&s.to_ascii_uppercase(), n)?;
        out = Some(match out {
            None => cm,
            Some(prev) => prev.direct_sum(&cm),
        });
    }
    out.ok_or_else(|| RootError::Datum("empty Cartan type".into()))
}

/// Every connected finite type of rank at most `max_rank`.
pub fn connected_finite_types(max_rank: usize) -> Vec<(String, CartanMatrix)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for s in ["A", "B", "C", "D", "E", "F", "G"] {
            if s == "C" && n == 2 {
                continue;
            }
            if let Ok(cm) = finite_type(s, n) {
                out.push((format!("{}{}", s, n), cm));
            }
        }
    }
    out
}

/// Every finite-type Cartan matrix of total rank in `1..=max_rank`, products
/// included, listed up to reordering of the factors.
pub fn all_finite_types(max_rank: usize) -> Vec<(String, CartanMatrix)> {
    let atoms = connected_finite_types(max_rank);
    let mut out = Vec::new();
    fn rec(
        atoms: &[(String, CartanMatrix)],
        start: usize,
        left: usize,
        name: Vec<String>,
        cm: Option<CartanMatrix>,
        out: &mut Vec<(String, CartanMatrix)>,
    ) {
        if let Some(cm) = &cm {
            out.push((name.join("x"), cm.clone()));
        }
        for (k, (n, a)) in atoms.iter().enumerate().skip(start) {
            if a.rank() > left {
                continue;
            }
            let next = match &cm {
                None => a.clone(),
                Some(c) => c.direct_sum(a),
            };
            let mut nm = name.clone();
            nm.push(n.clone());
            rec(atoms, k, left - a.rank(), nm, Some(next), out);
        }
    }
    rec(&atoms, 0, max_rank, Vec::new(), None, &mut out);
    out
}
