use std::fmt;

use super::symbol::{Symbol, NSYMBOLS};
use super::RingError;

/// Laurent monomial: one signed exponent per symbol.
///
/// The derived ordering is lexicographic over the symbol declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([i32; NSYMBOLS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NSYMBOLS])
    }

    pub fn var(sym: Symbol, exp: i32) -> Self {
        let mut e = [0; NSYMBOLS];
        e[sym.index()] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: [i32; NSYMBOLS]) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[i32; NSYMBOLS] {
        &self.0
    }

    pub fn exp(&self, sym: Symbol) -> i32 {
        self.0[sym.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, RingError> {
        let mut e = [0; NSYMBOLS];
        for (slot, (a, b)) in e.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *slot = a.checked_add(*b).ok_or(RingError::ExponentOverflow)?;
        }
        Ok(Monomial(e))
    }

    pub fn checked_div(&self, other: &Monomial) -> Result<Monomial, RingError> {
        let mut e = [0; NSYMBOLS];
        for (slot, (a, b)) in e.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *slot = a.checked_sub(*b).ok_or(RingError::ExponentOverflow)?;
        }
        Ok(Monomial(e))
    }

    pub fn inverse(&self) -> Result<Monomial, RingError> {
        Monomial::one().checked_div(self)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    pub fn with_exp(&self, sym: Symbol, exp: i32) -> Monomial {
        let mut e = self.0;
        e[sym.index()] = exp;
        Monomial(e)
    }

    /// Sum of absolute exponents; used only to order printed terms.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&e| (e as i64).abs()).sum()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (Symbol, i32)> + '_ {
        Symbol::ALL
            .iter()
            .copied()
            .zip(self.0.iter().copied())
            .filter(|(_, e)| *e != 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (sym, e) in self.symbols() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        let big = Monomial::var(Symbol::R, i32::MAX);
        assert_eq!(
            big.checked_mul(&Monomial::var(Symbol::R, 1)),
            Err(RingError::ExponentOverflow)
        );
    }

    #[test]
    fn display() {
        let m = Monomial::var(Symbol::R, -2)
            .checked_mul(&Monomial::var(Symbol::Q, 1))
            .unwrap();
        assert_eq!(m.to_string(), "r^-2*q");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn lex_order_puts_r_first() {
        let r = Monomial::var(Symbol::R, 1);
        let q5 = Monomial::var(Symbol::Q, 5);
        assert!(r > q5);
    }
}
