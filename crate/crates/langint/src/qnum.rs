//! Generalised quantum numbers `[a]_{Q T^{a}}` and their specialisations.

use exactalg::rational::factorial;
use exactalg::series::{exp_linear, sinh_linear};
use exactalg::{quantum_number_cyclotomic, ri, Coeff, Cyclo, LaurentPoly, LaurentTrunc, Rat, RingElem, Series, Series2};

use crate::error::LangError;
use crate::interp::{brace, eps_pow, rational_poly};

/// `sinh(a x) / sinh(x)` as a power series in `x`, modulo `x^order`.
pub(crate) fn sinh_ratio(a: i64, order: usize) -> Series<Rat> {
    let num = sinh_linear(&ri(a), order + 1);
    let den = sinh_linear(&ri(1), order + 1);
    num.div(&den).expect("sinh(x) has valuation one").truncate(order)
}

/// `[a]_{Q T^{a}} = sinh(a (h + h' {a})) / sinh(h + h' {a})` modulo
/// `h^kh h'^khp`.
pub fn gen_quantum_number(a: i64, g: u32, kh: usize, khp: usize) -> Result<Series2<Rat>, LangError> {
    if a == 0 {
        return Ok(Series2::zero(kh, khp));
    }
    let x = Series2::h(kh, khp).add_ref(&Series2::hp(kh, khp).mul_ref(&Series2::from_h(&brace(a, g, kh)?, khp)));
    Ok(Series2::compose_into(&sinh_ratio(a, kh + khp), &x)?)
}

/// An element of `A[[h']]`, `A = Q[Q^{+-1}]`: one Laurent polynomial in `Q`
/// per power of `h'`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSeries {
    pub coeffs: Vec<LaurentPoly<Rat>>,
}

impl LatticeSeries {
    pub fn zero(order: usize) -> Self {
        LatticeSeries { coeffs: vec![LaurentPoly::zero(); order] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        LatticeSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        LatticeSeries { coeffs: self.coeffs.iter().map(|a| a.scale(&ri(-1))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        let mut out = LatticeSeries::zero(k);
        for i in 0..k {
            for j in 0..k - i {
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
            }
        }
        out
    }

    /// `Q^e exp(e b h')`.
    fn exp_term(e: i64, b: &LaurentPoly<Rat>, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut pow = LaurentPoly::constant(ri(1));
        for m in 0..order {
            let scale: Rat = ri(e).pow(m as i32) / factorial(m as u64);
            coeffs.push(pow.mul(&LaurentPoly::monomial(e, scale)));
            pow = pow.mul(b);
        }
        LatticeSeries { coeffs }
    }

    /// Specialisation `Q = eps`, `eps` of order `2g`.
    pub fn at_eps(&self, g: u32) -> Series<Cyclo> {
        let m = 2 * g;
        let e = eps_pow(g, 1);
        let coeffs = self.coeffs.iter().map(|p| p.map(|r| Cyclo::rational(m, r.clone())).eval(&e)).collect();
        Series::new(self.order(), coeffs)
    }

    /// Specialisation `Q = exp(h)`, modulo `h^kh`.
    pub fn at_exp_h(&self, kh: usize) -> Series2<Rat> {
        let mut out = Series2::zero(kh, self.order());
        for (j, p) in self.coeffs.iter().enumerate() {
            let s = p.eval_exp(&ri(1), kh);
            for i in 0..kh {
                out.set(i, j, s.coeff(i));
            }
        }
        out
    }
}

/// `[a]_{Q T^{a}}` in `A[[h']]`, from `[a]_y = sum_k y^{a - 1 - 2k}` with
/// `y = Q T^{a}`. No division is involved.
pub fn lattice_quantum_number(a: i64, g: u32, khp: usize) -> Result<LatticeSeries, LangError> {
    if a < 0 {
        return Ok(lattice_quantum_number(-a, g, khp)?.neg());
    }
    let b = rational_poly(g)?.substitute_power(a);
    let mut acc = LatticeSeries::zero(khp);
    for k in 0..a {
        acc = acc.add(&LatticeSeries::exp_term(a - 1 - 2 * k, &b, khp));
    }
    Ok(acc)
}

/// `(eps^a e^{a h'} - eps^{-a} e^{-a h'})` as a series in `h'`.
pub(crate) fn eps_exp_difference(a: i64, g: u32, order: usize) -> Series<Cyclo> {
    let up = exp_linear(&ri(a), order).map(|r| Cyclo::from_rat(r.clone())).mul_coeff(&eps_pow(g, a));
    let down = exp_linear(&ri(-a), order).map(|r| Cyclo::from_rat(r.clone())).mul_coeff(&eps_pow(g, -a));
    up.sub_ref(&down)
}

/// `[a]_{eps T}` (when `deformed`) or `[a]_eps`, modulo `h'^order`. The
/// deformed form is divided with valuations tracked, which matters at
/// `g = 1` where `eps - eps^{-1} = 0`.
pub fn eps_quantum_number(a: i64, g: u32, order: usize, deformed: bool) -> Result<Series<Cyclo>, LangError> {
    if !deformed || a == 0 {
        return Ok(Series::constant(order, quantum_number_cyclotomic(a, g)));
    }
    let num = LaurentTrunc::from_series(eps_exp_difference(a, g, order + 1));
    let den = LaurentTrunc::from_series(eps_exp_difference(1, g, order + 1));
    Ok(num.mul(&den.inv()?).to_series(order)?)
}

/// `T^k - T^{-k} = 2 sinh(k h')` in `Q(eps)[[h']]`.
pub fn t_difference(k: i64, order: usize) -> Series<Cyclo> {
    sinh_linear(&ri(k), order).scale(&ri(2)).map(|r| Cyclo::from_rat(r.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::quantum_number_series;

    #[test]
    fn small_values() {
        assert_eq!(gen_quantum_number(1, 3, 4, 3).unwrap(), Series2::one(4, 3));
        assert!(gen_quantum_number(0, 2, 4, 3).unwrap().is_zero());
        let two = gen_quantum_number(2, 2, 3, 2).unwrap().at_hp_zero();
        assert_eq!(two, Series::new(3, vec![ri(2), ri(0), ri(1)]));
    }

    #[test]
    fn hp_zero_slice_is_the_quantum_number() {
        for g in 1..=3 {
            for a in -6..=6 {
                assert_eq!(gen_quantum_number(a, g, 5, 2).unwrap().at_hp_zero(), quantum_number_series(a, 5));
            }
        }
    }

    #[test]
    fn lattice_form_agrees_with_the_sinh_quotient() {
        for g in 1..=3 {
            for a in -4..=6 {
                let direct = gen_quantum_number(a, g, 5, 3).unwrap();
                assert_eq!(lattice_quantum_number(a, g, 3).unwrap().at_exp_h(5), direct, "a = {}, g = {}", a, g);
            }
        }
    }

    #[test]
    fn eps_numbers_at_g1_are_signed_t_numbers() {
        // [a]_{-T} = (-1)^{a+1} [a]_T
        for a in 1..=5 {
            let x = eps_quantum_number(a, 1, 4, true).unwrap();
            let want = quantum_number_series(a, 4).map(|r| Cyclo::from_rat(r.clone())).scale(&ri(if a % 2 == 1 { 1 } else { -1 }));
            assert_eq!(x, want);
        }
    }
}
