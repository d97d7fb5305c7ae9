//! Coefficient rings that module matrices may live in.

use exactalg::{ri, Coeff, Cyclo, Poly1, Rat, RingElem, Series, Series2};

/// A ring element that can produce integers of its own ring (same
/// truncation, same cyclotomic order) and render itself.
pub trait ModuleScalar: RingElem {
    /// The integer `n` in the ring of `self`.
    fn int(&self, n: i64) -> Self;
    /// A short tag naming the ring, such as `Q[[h]]/h^6`.
    fn ring(&self) -> String;
    fn render(&self) -> String;
}

impl ModuleScalar for Rat {
    fn int(&self, n: i64) -> Self {
        ri(n)
    }
    fn ring(&self) -> String {
        "Q".into()
    }
    fn render(&self) -> String {
        exactalg::rational::fmt_rat(self)
    }
}

impl ModuleScalar for Cyclo {
    fn int(&self, n: i64) -> Self {
        Cyclo::rational(self.order(), ri(n))
    }
    fn ring(&self) -> String {
        format!("Q(zeta{})", self.order())
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl ModuleScalar for Poly1<Rat> {
    fn int(&self, n: i64) -> Self {
        Poly1::constant(ri(n))
    }
    fn ring(&self) -> String {
        "Q[u]".into()
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl<T: Coeff> ModuleScalar for Series<T> {
    fn int(&self, n: i64) -> Self {
        Series::constant(self.order(), T::from_rat(ri(n)))
    }
    fn ring(&self) -> String {
        format!("series/h^{}", self.order())
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl<T: Coeff> ModuleScalar for Series2<T> {
    fn int(&self, n: i64) -> Self {
        let (kh, khp) = self.orders();
        Series2::constant(kh, khp, T::from_rat(ri(n)))
    }
    fn ring(&self) -> String {
        let (kh, khp) = self.orders();
        format!("series/(h^{}, h'^{})", kh, khp)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}
