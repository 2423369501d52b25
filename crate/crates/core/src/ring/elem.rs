use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::laurent::{rational_pow, LaurentPoly};
use super::monomial::Monomial;
use super::symbol::Symbol;
use super::{Rational, RingError};

/// Bindings of symbols to exact rational values.
pub type Bindings = BTreeMap<Symbol, Rational>;

/// Exact coefficient: a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is `1` or a non-monomial polynomial with
/// non-negative exponents, no monomial factor, integer coefficients of gcd 1
/// and positive lex-leading coefficient; numerator and denominator are
/// coprime. Structural equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RingElem {
    pub fn from_poly(p: LaurentPoly) -> Self {
        RingElem {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn symbol(sym: Symbol) -> Self {
        Self::from_poly(LaurentPoly::symbol(sym))
    }

    /// `sym^exp`.
    pub fn monomial(sym: Symbol, exp: i32) -> Self {
        Self::from_poly(LaurentPoly::term(Monomial::var(sym, exp), Rational::one()))
    }

    pub fn rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Rational::from_integer(v.into()))
    }

    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        Self::normalized(num, den, true)
    }

    /// Canonical form of `num/den`; `reduce = false` asserts the two are
    /// already coprime up to monomials.
    fn normalized(num: LaurentPoly, den: LaurentPoly, reduce: bool) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(LaurentPoly::zero()));
        }
        let (m, d) = den.split_monomial()?;
        let mut num = num.checked_mul_monomial(&m.inverse()?)?;
        let (c, mut d) = d.primitive_integer();
        num = num.scale(&c.recip());
        if d.is_one() {
            return Ok(Self::from_poly(num));
        }
        let g = if reduce { gcd(&num, &d) } else { LaurentPoly::one() };
        if !g.is_one() {
            num = num.exact_div(&g).ok_or(RingError::DivisionByZero)?;
            d = d.exact_div(&g).ok_or(RingError::DivisionByZero)?;
            let (m2, d2) = d.split_monomial()?;
            num = num.checked_mul_monomial(&m2.inverse()?)?;
            let (c2, d2) = d2.primitive_integer();
            num = num.scale(&c2.recip());
            d = d2;
        }
        Ok(RingElem { num, den: d })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if !self.is_polynomial() {
            return None;
        }
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        self.num.as_constant().cloned()
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.num
            .symbols()
            .into_iter()
            .chain(self.den.symbols())
            .collect()
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.num.contains(sym) || self.den.contains(sym)
    }

    pub fn checked_add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        if self.num.is_zero() {
            return Ok(other.clone());
        }
        if other.num.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return Ok(Self::from_poly(num));
            }
            return Self::from_fraction(num, self.den.clone());
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self
                .num
                .checked_mul(&other.den)?
                .add(&other.num.checked_mul(&self.den)?);
            return Self::normalized(num, self.den.checked_mul(&other.den)?, false);
        }
        let b = self.den.exact_div(&g).ok_or(RingError::DivisionByZero)?;
        let d = other.den.exact_div(&g).ok_or(RingError::DivisionByZero)?;
        let mut num = self.num.checked_mul(&d)?.add(&other.num.checked_mul(&b)?);
        let mut den = b.checked_mul(&d)?.checked_mul(&g)?;
        let h = gcd(&num, &g);
        if !h.is_one() {
            num = num.exact_div(&h).ok_or(RingError::DivisionByZero)?;
            den = den.exact_div(&h).ok_or(RingError::DivisionByZero)?;
        }
        Self::normalized(num, den, false)
    }

    pub fn checked_mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        if self.num.is_zero() || other.num.is_zero() {
            return Ok(Self::zero());
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(self.num.checked_mul(&other.num)?));
        }
        // Cross-cancel so the product needs no further gcd.
        let cancel = |n: &LaurentPoly, d: &LaurentPoly| -> Result<(LaurentPoly, LaurentPoly), RingError> {
            if d.is_one() {
                return Ok((n.clone(), d.clone()));
            }
            let g = gcd(n, d);
            if g.is_one() {
                return Ok((n.clone(), d.clone()));
            }
            Ok((
                n.exact_div(&g).ok_or(RingError::DivisionByZero)?,
                d.exact_div(&g).ok_or(RingError::DivisionByZero)?,
            ))
        };
        let (n1, d2) = cancel(&self.num, &other.den)?;
        let (n2, d1) = cancel(&other.num, &self.den)?;
        Self::normalized(n1.checked_mul(&n2)?, d1.checked_mul(&d2)?, false)
    }

    pub fn inv(&self) -> Result<RingElem, RingError> {
        if self.num.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if let Some((m, c)) = self.num.as_monomial() {
            if self.den.is_one() {
                return Ok(Self::from_poly(LaurentPoly::term(m.inverse()?, c.recip())));
            }
        }
        Self::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i32) -> Result<RingElem, RingError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RingElem::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }

    /// Exact evaluation of the bound symbols; unbound symbols remain.
    pub fn substitute(&self, bindings: &Bindings) -> Result<RingElem, RingError> {
        let f = |s: Symbol| bindings.get(&s).cloned();
        let num = self.num.substitute(&f)?;
        let den = self.den.substitute(&f)?;
        if den.is_zero() {
            return Err(RingError::DenominatorVanishes);
        }
        Self::from_fraction(num, den)
    }

    /// Evaluates with every occurring symbol bound.
    pub fn eval(&self, bindings: &Bindings) -> Result<Rational, RingError> {
        let v = self.substitute(bindings)?;
        if let Some(sym) = v.symbols().into_iter().next() {
            return Err(RingError::UnboundSymbol(sym.name().to_string()));
        }
        Ok(v.as_rational().unwrap_or_else(Rational::zero))
    }

    /// Replaces `sym` by an arbitrary ring element.
    pub fn substitute_symbol(&self, sym: Symbol, value: &RingElem) -> Result<RingElem, RingError> {
        if !self.contains(sym) {
            return Ok(self.clone());
        }
        let num = poly_at(&self.num, sym, value)?;
        let den = poly_at(&self.den, sym, value)?;
        if den.is_zero() {
            return Err(RingError::DenominatorVanishes);
        }
        num.checked_div(&den)
    }

    /// Polynomial constraint encoded by `self = 0`: the numerator with its
    /// rational content and monomial factor removed.
    pub fn constraint_polynomial(&self) -> LaurentPoly {
        let (_, p) = self.num.primitive_integer();
        p.split_monomial()
            .map(|(_, q)| q)
            .expect("Laurent exponent overflow")
    }

    fn fmt_part(p: &LaurentPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if p.len() > 1 {
            write!(f, "({p})")
        } else {
            write!(f, "{p}")
        }
    }

    /// Text suitable as a left factor in a product, parenthesized when it
    /// has more than one term.
    pub fn as_factor(&self) -> String {
        if self.is_polynomial() && self.num.len() <= 1 {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

fn poly_at(p: &LaurentPoly, sym: Symbol, value: &RingElem) -> Result<RingElem, RingError> {
    let mut out = RingElem::zero();
    let mut cache: BTreeMap<i32, RingElem> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exp(sym);
        let pw = match cache.get(&e) {
            Some(v) => v.clone(),
            None => {
                let v = value.powi(e)?;
                cache.insert(e, v.clone());
                v
            }
        };
        let rest = RingElem::from_poly(LaurentPoly::term(m.with_exp(sym, 0), c.clone()));
        out = out.checked_add(&rest.checked_mul(&pw)?)?;
    }
    Ok(out)
}

/// Exact power of a rational; re-exported for evaluation helpers.
pub fn rational_powi(v: &Rational, e: i32) -> Result<Rational, RingError> {
    rational_pow(v, e)
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        Self::fmt_part(&self.num, f)?;
        f.write_str("/")?;
        Self::fmt_part(&self.den, f)
    }
}

impl Zero for RingElem {
    fn zero() -> Self {
        RingElem::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RingElem {
    fn one() -> Self {
        RingElem::from_poly(LaurentPoly::one())
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

impl Add<&RingElem> for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        self.checked_add(rhs).expect("ring arithmetic failed")
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        &self + &rhs
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl Sub<&RingElem> for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        &self - &rhs
    }
}

impl Mul<&RingElem> for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.checked_mul(rhs).expect("ring arithmetic failed")
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        &self * &rhs
    }
}

impl Div<&RingElem> for &RingElem {
    type Output = RingElem;
    fn div(self, rhs: &RingElem) -> RingElem {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for RingElem {
    type Output = RingElem;
    fn div(self, rhs: RingElem) -> RingElem {
        &self / &rhs
    }
}

impl From<i64> for RingElem {
    fn from(v: i64) -> Self {
        RingElem::int(v)
    }
}

impl From<Rational> for RingElem {
    fn from(v: Rational) -> Self {
        RingElem::rational(v)
    }
}

impl From<Symbol> for RingElem {
    fn from(s: Symbol) -> Self {
        RingElem::symbol(s)
    }
}
