//! Operator sugar for types implementing [`RingElem`](crate::coeff::RingElem).

/// Implements `+ - * neg` for owned and borrowed operands of a generic type
/// `$ty<T>` whose parameter satisfies `$bound`, through the `*_ref` methods.
#[macro_export]
macro_rules! impl_ring_ops {
    ($ty:ident, $bound:path) => {
        impl<T: $bound> ::std::ops::Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, o: $ty<T>) -> $ty<T> {
                $crate::coeff::RingElem::add_ref(&self, &o)
            }
        }
        impl<'a, T: $bound> ::std::ops::Add<&'a $ty<T>> for &'a $ty<T> {
            type Output = $ty<T>;
            fn add(self, o: &'a $ty<T>) -> $ty<T> {
                $crate::coeff::RingElem::add_ref(self, o)
            }
        }
        impl<T: $bound> ::std::ops::Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, o: $ty<T>) -> $ty<T> {
                $crate::coeff::RingElem::sub_ref(&self, &o)
            }
        }
        impl<'a, T: $bound> ::std::ops::Sub<&'a $ty<T>> for &'a $ty<T> {
            type Output = $ty<T>;
            fn sub(self, o: &'a $ty<T>) -> $ty<T> {
                $crate::coeff::RingElem::sub_ref(self, o)
            }
        }
        impl<T: $bound> ::std::ops::Mul for $ty<T> {
            type Output = $ty<T>;
            fn mul(self, o: $ty<T>) -> $ty<T> {
                $crate::coeff::RingElem::mul_ref(&self, &o)
            }
        }
        impl<'a, T: $bound> ::std::ops::Mul<&'a $ty<T>> for &'a $ty<T> {
            type Output = $ty<T>;
            fn mul(self, o: &'a $ty<T>) -> $ty<T> {
                $crate::coeff::RingElem::mul_ref(self, o)
            }
        }
        impl<T: $bound> ::std::ops::Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                $crate::coeff::RingElem::neg_ref(&self)
            }
        }
        impl<'a, T: $bound> ::std::ops::Neg for &'a $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                $crate::coeff::RingElem::neg_ref(self)
            }
        }
    };
}
