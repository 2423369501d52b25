//! Exact coefficient arithmetic: multivariate Laurent polynomials over the
//! rationals and reduced fractions of them.

mod elem;
pub mod gcd;
mod laurent;
mod monomial;
mod symbol;

use thiserror::Error;

pub use elem::{rational_powi, Bindings, RingElem};
pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use symbol::{Symbol, NSYMBOLS};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under the given binding")]
    DenominatorVanishes,
    #[error("Laurent exponent overflow")]
    ExponentOverflow,
    #[error("symbol `{0}` is unbound")]
    UnboundSymbol(String),
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn r() -> RingElem {
        RingElem::symbol(Symbol::R)
    }
    fn q() -> RingElem {
        RingElem::symbol(Symbol::Q)
    }
    fn one() -> RingElem {
        RingElem::one()
    }

    #[test]
    fn additive_inverse() {
        assert!((&r() + &(-r())).is_zero());
    }

    #[test]
    fn forced_factorization_reduces() {
        let num = &(&r() * &r()) - &one();
        let den = &r() - &one();
        let v = &(&num / &den) + &RingElem::zero();
        assert_eq!(v, &r() + &one());
        assert_eq!(v.to_string(), "r + 1");
    }

    #[test]
    fn laurent_addition() {
        let rinv2 = RingElem::monomial(Symbol::R, -2);
        let v = &(&rinv2 - &one()) + &one();
        assert_eq!(v, rinv2);
        assert_eq!((&rinv2 - &one()).to_string(), "r^-2 - 1");
    }

    #[test]
    fn units() {
        assert!((&r() * &RingElem::monomial(Symbol::R, -1)).is_one());
        let v = &(&r() + &RingElem::monomial(Symbol::R, -1)) * &r();
        assert_eq!(v.to_string(), "r^2 + 1");
    }

    #[test]
    fn theta_two_eigenvalue_simplifies_to_one() {
        // q/(q+q^-1) * (1 + q^-2)
        let qi = RingElem::monomial(Symbol::Q, -1);
        let frac = &q() / &(&q() + &qi);
        let v = &frac * &(&one() + &RingElem::monomial(Symbol::Q, -2));
        assert!(v.is_one());
    }

    #[test]
    fn inverses() {
        assert_eq!(r().inv().unwrap(), RingElem::monomial(Symbol::R, -1));
        let a = RingElem::symbol(Symbol::A);
        let d = &one() - &(&(&one() - &(&r() * &r())) * &a);
        let inv = d.inv().unwrap();
        assert!((&d * &inv).is_one());
        assert_eq!(inv.to_string(), "1/(r^2*a - a + 1)");
        assert_eq!(RingElem::zero().inv(), Err(RingError::DivisionByZero));
    }

    #[test]
    fn substitution_examples() {
        let mut b = Bindings::new();
        b.insert(Symbol::R, rat(1, 1));
        let v = &RingElem::monomial(Symbol::R, -2) - &one();
        assert!(v.substitute(&b).unwrap().is_zero());

        let mut b = Bindings::new();
        b.insert(Symbol::Q, rat(3, 2));
        let v = &(&q() * &q()) - &one();
        assert_eq!(v.eval(&b).unwrap(), rat(5, 4));

        let r4 = r().powi(4).unwrap();
        let v = &r4 * &(&(&q() * &q()) - &one());
        let at = v.substitute_symbol(Symbol::R, &q()).unwrap();
        let expected = &q().powi(4).unwrap() * &(&(&q() * &q()) - &one());
        assert_eq!(at, expected);
    }

    #[test]
    fn substitution_into_vanishing_denominator_fails() {
        let v = &one() / &(&r() - &one());
        let mut b = Bindings::new();
        b.insert(Symbol::R, rat(1, 1));
        assert_eq!(v.substitute(&b), Err(RingError::DenominatorVanishes));
    }

    #[test]
    fn unbound_symbols_are_reported() {
        let v = &r() + &q();
        let mut b = Bindings::new();
        b.insert(Symbol::R, rat(2, 1));
        assert!(matches!(v.eval(&b), Err(RingError::UnboundSymbol(s)) if s == "q"));
    }

    #[test]
    fn canonical_sign_of_denominator() {
        let v = &one() / &(&one() - &r());
        assert_eq!(v.denominator().to_string(), "r - 1");
        assert_eq!(v.to_string(), "-1/(r - 1)");
    }

    #[test]
    fn constraint_polynomial_strips_units() {
        let r4 = r().powi(4).unwrap();
        let v = &(&r4 * &(&r() * &r())) - &(&r4 * &(&q() * &q()));
        assert_eq!(v.constraint_polynomial().to_string(), "r^2 - q^2");
    }
}
