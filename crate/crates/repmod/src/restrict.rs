//! Restriction of a weight module along an isogeny.

use rootdata::Isogeny;

use crate::error::RepError;
use crate::module::{Gen, WeightModule};
use crate::scalar::ModuleScalar;

/// Restriction of `m`, a module over the target of `xi`, to the source: the
/// basis vectors whose weights lie in `xi(X')`, with `(X'_i)^{+-}` acting as
/// `(X_i^{+-})^{xi_i}` and `Y'` through the preimage weights.
pub fn isogeny_restrict<T: ModuleScalar>(m: &WeightModule<T>, xi: &Isogeny) -> Result<WeightModule<T>, RepError> {
    if m.datum() != xi.target() {
        return Err(RepError::DatumMismatch);
    }
    let mut keep = Vec::new();
    let mut weights = Vec::new();
    for (i, w) in m.weights().iter().enumerate() {
        if let Some(p) = xi.preimage(w) {
            keep.push(i);
            weights.push(p);
        }
    }
    let one = m.unit().int(1);
    let powered = |g: Gen| {
        let (Gen::Raise(i) | Gen::Lower(i)) = g else { unreachable!("only root generators are compressed") };
        m.op(g).pow(xi.xi()[i] as u32, &one)
    };
    m.compress(&keep, powered, xi.source().clone(), weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::Character;
    use crate::module::{build_l, verify_slf_relations};
    use crystal::Colouring;
    use exactalg::Series;

    #[test]
    fn even_scaling_halves_even_weights() {
        let m = build_l(4, &Colouring::Classical, 1).unwrap();
        let r = isogeny_restrict(&m, &Isogeny::rank_one(2).unwrap()).unwrap();
        assert_eq!(r.character(), Character::from_weights([2, 1, 0, -1, -2].map(|x| vec![x])));
        assert!(verify_slf_relations(&r).passed());
        // (X^-)^2 b_{4,0} = 1*2 * b_{4,2}
        assert_eq!(r.op(Gen::Lower(0)).get(2, 0), Some(&Series::from_int(1, 2)));
        let six = build_l(6, &Colouring::Classical, 1).unwrap();
        let r3 = isogeny_restrict(&six, &Isogeny::rank_one(3).unwrap()).unwrap();
        assert_eq!(r3.character(), Character::from_weights([2, 0, -2].map(|x| vec![x])));
    }

    #[test]
    fn odd_weights_do_not_survive() {
        let m = build_l(3, &Colouring::Classical, 1).unwrap();
        assert_eq!(isogeny_restrict(&m, &Isogeny::rank_one(2).unwrap()).unwrap().dim(), 0);
    }

    #[test]
    fn identity_is_a_no_op() {
        let m = build_l(5, &Colouring::quantum(), 3).unwrap();
        let r = isogeny_restrict(&m, &Isogeny::rank_one(1).unwrap()).unwrap();
        assert_eq!(r.weights(), m.weights());
        assert_eq!(r.op(Gen::Raise(0)), m.op(Gen::Raise(0)));
        assert_eq!(r.op(Gen::Lower(0)), m.op(Gen::Lower(0)));
    }
}
