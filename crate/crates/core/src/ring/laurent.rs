use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::symbol::Symbol;
use super::{Rational, RingError};

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn symbol(sym: Symbol) -> Self {
        Self::term(Monomial::var(sym, 1), Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&Monomial::one()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in small.terms.iter() {
            big.add_term(*m, c.clone());
        }
        big
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn checked_mul_monomial(&self, m: &Monomial) -> Result<LaurentPoly, RingError> {
        let mut terms = BTreeMap::new();
        for (k, v) in self.terms.iter() {
            terms.insert(k.checked_mul(m)?, v.clone());
        }
        Ok(LaurentPoly { terms })
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(c));
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(c));
        }
        let mut out = LaurentPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(m1.checked_mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(other)
            .expect("Laurent exponent overflow")
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimal exponent over all terms (one for the zero polynomial).
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(*first, |acc, m| acc.meet(m)),
        }
    }

    /// Splits `self = m * p` where `p` has no monomial factor and all
    /// exponents of `p` are non-negative.
    pub fn split_monomial(&self) -> Result<(Monomial, LaurentPoly), RingError> {
        let m = self.min_monomial();
        if m.is_one() {
            return Ok((m, self.clone()));
        }
        Ok((m, self.checked_mul_monomial(&m.inverse()?)?))
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(sym) != 0)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        Symbol::ALL
            .iter()
            .copied()
            .filter(|s| self.contains(*s))
            .collect()
    }

    pub fn degree_in(&self, sym: Symbol) -> i32 {
        self.terms.keys().map(|m| m.exp(sym)).max().unwrap_or(0)
    }

    /// View as a univariate polynomial in `sym` with coefficients free of `sym`.
    pub fn coeffs_in(&self, sym: Symbol) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let e = m.exp(sym);
            out.entry(e)
                .or_default()
                .add_term(m.with_exp(sym, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(sym: Symbol, coeffs: &BTreeMap<i32, LaurentPoly>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, p) in coeffs.iter() {
            for (m, c) in p.terms.iter() {
                out.add_term(m.with_exp(sym, *e), c.clone());
            }
        }
        out
    }

    /// Exact division in the Laurent ring; `None` when `divisor` does not
    /// divide `self`.
    ///
    /// Both operands are shifted to genuine polynomials first. For a single
    /// divisor the lex division algorithm leaves a zero remainder exactly
    /// when the division is exact.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (m1, p1) = self.split_monomial().ok()?;
        let (m2, p2) = divisor.split_monomial().ok()?;
        let (dm, dc) = p2.leading().map(|(m, c)| (*m, c.clone()))?;
        let mut rem = p1;
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = rm.checked_div(&dm).ok()?;
            if qm.exponents().iter().any(|&e| e < 0) {
                return None;
            }
            let qc = rc / &dc;
            let step = p2.checked_mul_monomial(&qm).ok()?.scale(&qc);
            rem = rem.sub(&step);
            quot.add_term(qm, qc);
        }
        quot.checked_mul_monomial(&m1.checked_div(&m2).ok()?).ok()
    }

    /// `self = content * primitive` with `primitive` integral, coefficient gcd 1
    /// and positive lex-leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, LaurentPoly) {
        if self.is_zero() {
            return (Rational::zero(), LaurentPoly::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = (c * Rational::from_integer(den_lcm.clone())).to_integer();
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let prim = self.scale(&content.recip());
        (content, prim)
    }

    /// Evaluates the bound symbols; unbound symbols remain.
    pub fn substitute(
        &self,
        binding: &dyn Fn(Symbol) -> Option<Rational>,
    ) -> Result<LaurentPoly, RingError> {
        let mut out = LaurentPoly::zero();
        for (m, c) in self.terms.iter() {
            let mut coeff = c.clone();
            let mut rest = *m;
            for (sym, e) in m.symbols() {
                if let Some(v) = binding(sym) {
                    coeff *= rational_pow(&v, e)?;
                    rest = rest.with_exp(sym, 0);
                }
            }
            out.add_term(rest, coeff);
        }
        Ok(out)
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Number of terms; printed in a canonical order.
    pub(crate) fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.weight().cmp(&a.weight()).then_with(|| b.cmp(a)));
        v
    }
}

pub(crate) fn rational_pow(v: &Rational, e: i32) -> Result<Rational, RingError> {
    if e < 0 && v.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let base = if e < 0 { v.recip() } else { v.clone() };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    Ok(acc)
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_term(m: &Monomial, c: &Rational) -> String {
    if m.is_one() {
        return fmt_rational(c);
    }
    if c.is_one() {
        m.to_string()
    } else if (-c).is_one() {
        format!("-{m}")
    } else {
        format!("{}*{m}", fmt_rational(c))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let t = fmt_term(m, c);
            if i == 0 {
                f.write_str(&t)?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> LaurentPoly {
        LaurentPoly::symbol(Symbol::R)
    }
    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn print_order() {
        let p = r().pow(2).add(&LaurentPoly::one());
        assert_eq!(p.to_string(), "r^2 + 1");
        let rinv2 = LaurentPoly::term(Monomial::var(Symbol::R, -2), rat(1, 1));
        assert_eq!(rinv2.sub(&LaurentPoly::one()).to_string(), "r^-2 - 1");
        let m = LaurentPoly::term(Monomial::var(Symbol::Q, -1), rat(-1, 2));
        assert_eq!(m.to_string(), "-1/2*q^-1");
    }

    #[test]
    fn exact_division() {
        let num = r().pow(2).sub(&LaurentPoly::one());
        let den = r().sub(&LaurentPoly::one());
        assert_eq!(num.exact_div(&den).unwrap().to_string(), "r + 1");
        assert!(num.exact_div(&r().add(&LaurentPoly::constant(rat(2, 1)))).is_none());
    }

    #[test]
    fn primitive_integer_normalizes_sign() {
        let p = r().scale(&rat(-2, 3)).add(&LaurentPoly::constant(rat(4, 3)));
        let (c, prim) = p.primitive_integer();
        assert_eq!(c, rat(-2, 3));
        assert_eq!(prim.to_string(), "r - 2");
    }

    #[test]
    fn substitution_partial() {
        let q = LaurentPoly::symbol(Symbol::Q);
        let p = r().mul(&q).add(&q);
        let out = p
            .substitute(&|s| (s == Symbol::Q).then(|| rat(3, 2)))
            .unwrap();
        assert_eq!(out.to_string(), "3/2*r + 3/2");
    }
}
