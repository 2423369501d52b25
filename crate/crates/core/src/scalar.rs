//! Scalar abstraction shared by normal forms, matrices and verification
//! suites. Implemented for exact rationals (sampled evaluation) and for the
//! symbolic coefficient ring.

use std::fmt::{Debug, Display};

use num_traits::{One, Zero};

use crate::ring::{Rational, RingElem};

pub trait Scalar: Clone + Debug + Display + PartialEq + Zero + One + Send + Sync + 'static {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact multiplicative inverse; `None` for zero.
    fn try_inv(&self) -> Option<Self>;
    fn from_rational(v: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()))
    }

    fn powi(&self, k: i32) -> Option<Self> {
        let base = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Some(acc)
    }

    /// Canonical text used in reports.
    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_rational(v: &Rational) -> Self {
        v.clone()
    }
}

impl Scalar for RingElem {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_rational(v: &Rational) -> Self {
        RingElem::rational(v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Symbol};

    #[test]
    fn powi_negative() {
        assert_eq!(rat(2, 3).powi(-2).unwrap(), rat(9, 4));
        assert_eq!(
            RingElem::symbol(Symbol::R).powi(-3).unwrap(),
            RingElem::monomial(Symbol::R, -3)
        );
        assert!(Rational::zero().powi(-1).is_none());
    }
}
