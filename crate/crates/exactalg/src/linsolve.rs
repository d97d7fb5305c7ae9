//! Exact linear algebra over ℚ and polynomial interpolation.

use crate::coeff::{Coeff, RingElem};
use crate::poly::Poly1;
use crate::rational::{ri, Rat};
use num_traits::Zero;

/// Solves `a · x = b` over ℚ.
///
/// Columns are eliminated left to right; free variables are set to zero, so
/// the answer is the unique solution supported on the earliest possible
/// columns. Returns `None` when the system is inconsistent.
pub fn solve_linear(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = vec![];
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let t = &m[row][c] * &f;
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![ri(0); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// The polynomial of degree < n through the points `(xs[i], ys[i])`, built
/// from Newton divided differences.
pub fn interpolate<T: Coeff>(xs: &[Rat], ys: &[T]) -> Poly1<T> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<T> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = (&xs[i] - &xs[i - j]).recip();
            dd[i] = dd[i].sub_ref(&dd[i - 1]).scale(&den);
        }
    }
    let mut acc = Poly1::zero();
    for i in (0..n).rev() {
        acc = acc.mul_ref(&Poly1::linear(T::one(), T::from_rat(-xs[i].clone()))).add_ref(&Poly1::constant(dd[i].clone()));
    }
    acc
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_cubic() {
        let p = Poly1::new(vec![ri(1), ri(-2), ri(0), ri(3)]);
        let xs: Vec<Rat> = (0..4).map(ri).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn free_variables_vanish() {
        let a = vec![vec![ri(1), ri(1), ri(0)], vec![ri(0), ri(0), ri(1)]];
        let x = solve_linear(&a, &[ri(2), ri(3)]).unwrap();
        assert_eq!(x, vec![ri(2), ri(0), ri(3)]);
        assert!(solve_linear(&[vec![ri(0)]], &[ri(1)]).is_none());
    }
}
