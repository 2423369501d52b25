use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{AlgebraContext, Params};
use crate::forge::{GeneratorSet, SetKind};
use crate::rep::RepMatrix;
use crate::ring::{RingElem, RingError, Symbol};
use crate::scalar::Scalar;

use super::CastellaniError;

/// Operators that map candidates are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    I,
    A,
    B,
    AB,
    T12,
    T21,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::I, Basis::A, Basis::B, Basis::AB, Basis::T12, Basis::T21];

    /// Image under the index exchange `1 ↔ 2`.
    pub fn swapped(self) -> Basis {
        match self {
            Basis::A => Basis::B,
            Basis::B => Basis::A,
            Basis::T12 => Basis::T21,
            Basis::T21 => Basis::T12,
            other => other,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::I => "I",
            Basis::A => "A",
            Basis::B => "B",
            Basis::AB => "AB",
            Basis::T12 => "T12",
            Basis::T21 => "T21",
        })
    }
}

/// Linear combination over [`Basis`] with symbolic coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Combo(BTreeMap<Basis, RingElem>);

impl Combo {
    pub fn zero() -> Self {
        Combo(BTreeMap::new())
    }

    pub fn of(terms: &[(Basis, RingElem)]) -> Self {
        let mut c = Combo::zero();
        for (b, v) in terms {
            c.add(*b, v.clone());
        }
        c
    }

    pub fn add(&mut self, b: Basis, v: RingElem) {
        let cur = self.0.remove(&b).unwrap_or_else(RingElem::zero);
        let sum = &cur + &v;
        if !sum.is_zero() {
            self.0.insert(b, sum);
        }
    }

    pub fn coeff(&self, b: Basis) -> RingElem {
        self.0.get(&b).cloned().unwrap_or_else(RingElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &RingElem)> {
        self.0.iter()
    }

    pub fn map_coeffs(&self, f: impl Fn(&RingElem) -> Result<RingElem, RingError>) -> Result<Combo, RingError> {
        let mut out = Combo::zero();
        for (b, v) in &self.0 {
            out.add(*b, f(v)?);
        }
        Ok(out)
    }

    pub fn map_basis(&self, f: impl Fn(Basis) -> Basis) -> Combo {
        let mut out = Combo::zero();
        for (b, v) in &self.0 {
            out.add(f(*b), v.clone());
        }
        out
    }

    pub fn realize<S: Scalar>(
        &self,
        rec: &Recombination<S>,
        coeff: &impl Fn(&RingElem) -> Result<S, RingError>,
    ) -> Result<RepMatrix<S>, RingError> {
        let mut m = RepMatrix::zeros(4);
        for (b, v) in &self.0 {
            m = m.add(&rec.basis(*b).scale(&coeff(v)?));
        }
        Ok(m)
    }
}

impl fmt::Display for Combo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(b, v)| format!("{}*{b}", v.as_factor()))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The recombined diagonal generators on the two-dimensional space, with the
/// deformation parameter of our algebra written `q`.
#[derive(Clone, Debug)]
pub struct Recombination<S> {
    pub a: RepMatrix<S>,
    pub b: RepMatrix<S>,
    pub ab: RepMatrix<S>,
    pub t12: RepMatrix<S>,
    pub t21: RepMatrix<S>,
    pub d1: RepMatrix<S>,
    pub d2: RepMatrix<S>,
    pub dilatation: RepMatrix<S>,
    pub cartan: RepMatrix<S>,
}

impl<S: Scalar> Recombination<S> {
    pub fn new(q: S) -> Result<Self, CastellaniError> {
        let ctx = AlgebraContext::one_param(2)?;
        let params = Params::new(ctx, q.clone(), q.clone())?;
        let gs = GeneratorSet::build(params, SetKind::Igl)?;
        let qi = q.try_inv().ok_or(CastellaniError::Singular("q = 0".into()))?;
        let norm = q
            .add_ref(&qi)
            .try_inv()
            .ok_or(CastellaniError::Singular("q + 1/q = 0".into()))?;
        let d = gs.dilatation().clone();
        let h = gs.h(1).clone();
        let a = d.scale(&q).add(&h.scale(&qi)).scale(&q.mul_ref(&norm));
        let b = d.sub(&h).scale(&norm);
        let ab = a.mul(&b);
        Ok(Recombination {
            ab,
            a,
            b,
            t12: gs.t(1, 2).clone(),
            t21: gs.t(2, 1).clone(),
            d1: gs.del(1).clone(),
            d2: gs.del(2).clone(),
            dilatation: d,
            cartan: h,
        })
    }

    pub fn basis(&self, b: Basis) -> RepMatrix<S> {
        match b {
            Basis::I => RepMatrix::identity(4),
            Basis::A => self.a.clone(),
            Basis::B => self.b.clone(),
            Basis::AB => self.ab.clone(),
            Basis::T12 => self.t12.clone(),
            Basis::T21 => self.t21.clone(),
        }
    }
}

impl Recombination<RingElem> {
    pub fn symbolic() -> Self {
        Self::new(RingElem::symbol(Symbol::Q)).expect("q is a unit")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> RepMatrix<RingElem> {
        RepMatrix::diagonal(v.iter().map(|&x| RingElem::int(x)).collect())
    }

    #[test]
    fn recombined_diagonals() {
        let rec = Recombination::symbolic();
        assert_eq!(rec.a, ints(&[0, 0, 1, 1]));
        let qm2 = RingElem::monomial(Symbol::Q, -2);
        let b = RepMatrix::diagonal(vec![RingElem::int(0), RingElem::int(1), RingElem::int(0), qm2]);
        assert_eq!(rec.b, b);
        assert!(rec.a.commutator(&rec.b).is_zero());
    }

    #[test]
    fn combo_arithmetic() {
        let mut c = Combo::of(&[(Basis::A, RingElem::int(2))]);
        c.add(Basis::A, RingElem::int(-2));
        assert_eq!(c, Combo::zero());
        let d = Combo::of(&[(Basis::T12, RingElem::int(1)), (Basis::A, RingElem::int(3))]);
        assert_eq!(d.map_basis(Basis::swapped).coeff(Basis::B), RingElem::int(3));
        assert_eq!(d.to_string(), "3*A + 1*T12");
    }
}
