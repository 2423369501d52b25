use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{multiply, Letter, NormalElement, Params};
use crate::rep::RepMatrix;
use crate::scalar::Scalar;

use super::generators::{GeneratorSet, NormalForms};
use super::ForgeError;

/// Reference to an operator inside a relation record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpRef {
    I,
    /// `T^a_g`
    T(usize, usize),
    H(usize),
    D,
    Theta(usize),
    Del(usize),
    /// Dressed letter of block `a`: `Theta(a)`/`Theta(a+1)`/`Del(a)`/`Del(a+1)`.
    Dressed(usize, Letter),
    /// Projector onto the vacuum state.
    Vacuum,
}

/// A relation `Σ coeff · product = 0`.
#[derive(Clone, Debug)]
pub struct Relation<S> {
    pub id: String,
    pub terms: Vec<(S, Vec<OpRef>)>,
}

impl<S: Scalar> Relation<S> {
    pub fn new(id: impl Into<String>) -> Self {
        Relation {
            id: id.into(),
            terms: Vec::new(),
        }
    }

    pub fn term(mut self, c: S, ops: &[OpRef]) -> Self {
        self.terms.push((c, ops.to_vec()));
        self
    }

    /// `[a, b]_h − rhs = 0` where `rhs = Σ c · ops`.
    pub fn h_comm(id: impl Into<String>, a: &[OpRef], b: &[OpRef], h: S, rhs: Vec<(S, Vec<OpRef>)>) -> Self {
        let mut ab = a.to_vec();
        ab.extend_from_slice(b);
        let mut ba = b.to_vec();
        ba.extend_from_slice(a);
        let mut rel = Relation::new(id).term(S::one(), &ab).term(h.neg_ref(), &ba);
        for (c, ops) in rhs {
            rel.terms.push((c.neg_ref(), ops));
        }
        rel
    }

    pub fn residue<R: Realm<S>>(&self, realm: &R) -> Result<R::Elem, ForgeError> {
        let mut acc = realm.zero();
        for (c, ops) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let mut prod = realm.identity();
            for op in ops {
                prod = realm.mul(&prod, &realm.resolve(op)?);
            }
            acc = realm.axpy(&acc, c, &prod);
        }
        Ok(acc)
    }

    pub fn check<R: Realm<S>>(&self, realm: &R) -> Result<RelationReport, ForgeError> {
        let res = self.residue(realm)?;
        let witnesses = realm.witnesses(&res);
        Ok(RelationReport {
            relation: self.id.clone(),
            params: realm.describe(),
            pass: witnesses.is_empty(),
            residue_nonzero_entries: witnesses,
            sampled_points: None,
            failing_points: None,
        })
    }
}

/// Where relation residues are evaluated.
pub trait Realm<S: Scalar> {
    type Elem: Clone;
    fn resolve(&self, op: &OpRef) -> Result<Self::Elem, ForgeError>;
    fn zero(&self) -> Self::Elem;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `acc + c·x`
    fn axpy(&self, acc: &Self::Elem, c: &S, x: &Self::Elem) -> Self::Elem;
    /// Nonzero parts of a residue; empty iff it vanishes.
    fn witnesses(&self, e: &Self::Elem) -> Vec<ResidueEntry>;
    fn describe(&self) -> BTreeMap<String, String>;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueEntry {
    pub at: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RelationReport {
    pub relation: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub residue_nonzero_entries: Vec<ResidueEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_points: Option<Vec<BTreeMap<String, String>>>,
}

impl RelationReport {
    pub fn simple(relation: impl Into<String>, params: BTreeMap<String, String>, witnesses: Vec<ResidueEntry>) -> Self {
        RelationReport {
            relation: relation.into(),
            params,
            pass: witnesses.is_empty(),
            residue_nonzero_entries: witnesses,
            sampled_points: None,
            failing_points: None,
        }
    }
}

pub fn matrix_witnesses<S: Scalar>(m: &RepMatrix<S>) -> Vec<ResidueEntry> {
    m.nonzero_entries()
        .into_iter()
        .map(|(i, j, v)| ResidueEntry {
            at: format!("({i},{j})"),
            value: v.to_text(),
        })
        .collect()
}

fn base_params<S: Scalar>(p: &Params<S>, realm: &str) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    out.insert("n".into(), p.n().to_string());
    out.insert("mode".into(), p.ctx().mode().to_string());
    out.insert("realm".into(), realm.into());
    out
}

/// Matrices on the Grassmann module.
pub struct MatrixRealm<'a, S> {
    pub gens: &'a GeneratorSet<S>,
}

impl<'a, S: Scalar> Realm<S> for MatrixRealm<'a, S> {
    type Elem = RepMatrix<S>;

    fn resolve(&self, op: &OpRef) -> Result<RepMatrix<S>, ForgeError> {
        let g = self.gens;
        let n = g.n();
        let dim = g.params().ctx().dim();
        let idx = |a: usize| {
            if (1..=n).contains(&a) {
                Ok(a)
            } else {
                Err(ForgeError::Unsupported(format!("index {a} outside 1..={n}")))
            }
        };
        Ok(match *op {
            OpRef::I => RepMatrix::identity(dim),
            OpRef::T(a, b) => {
                if idx(a)? == idx(b)? {
                    return Err(ForgeError::Unsupported(format!("T{a}{b}")));
                }
                g.t(a, b).clone()
            }
            OpRef::H(a) => {
                if !(1..n).contains(&a) {
                    return Err(ForgeError::Unsupported(format!("H{a}")));
                }
                g.h(a).clone()
            }
            OpRef::D => g.dilatation().clone(),
            OpRef::Theta(a) => g.theta(idx(a)?).clone(),
            OpRef::Del(a) => g.del(idx(a)?).clone(),
            OpRef::Dressed(a, l) => {
                if !(1..n).contains(&a) {
                    return Err(ForgeError::Unsupported(format!("dressed block {a}")));
                }
                let q = g.dressed(a);
                match l {
                    Letter::Theta(i) if i == a => q.theta_a.clone(),
                    Letter::Theta(i) if i == a + 1 => q.theta_b.clone(),
                    Letter::Del(i) if i == a => q.del_a.clone(),
                    Letter::Del(i) if i == a + 1 => q.del_b.clone(),
                    other => {
                        return Err(ForgeError::Unsupported(format!("dressed {other} in block {a}")))
                    }
                }
            }
            OpRef::Vacuum => {
                let mut m = RepMatrix::zeros(dim);
                m.set(0, 0, S::one());
                m
            }
        })
    }

    fn zero(&self) -> RepMatrix<S> {
        RepMatrix::zeros(self.gens.params().ctx().dim())
    }

    fn identity(&self) -> RepMatrix<S> {
        RepMatrix::identity(self.gens.params().ctx().dim())
    }

    fn mul(&self, a: &RepMatrix<S>, b: &RepMatrix<S>) -> RepMatrix<S> {
        a.mul(b)
    }

    fn axpy(&self, acc: &RepMatrix<S>, c: &S, x: &RepMatrix<S>) -> RepMatrix<S> {
        acc.add(&x.scale(c))
    }

    fn witnesses(&self, e: &RepMatrix<S>) -> Vec<ResidueEntry> {
        matrix_witnesses(e)
    }

    fn describe(&self) -> BTreeMap<String, String> {
        base_params(self.gens.params(), "matrix")
    }
}

/// Normal-ordered polynomials (`n = 2` only).
pub struct NormalRealm<'a, S> {
    pub params: &'a Params<S>,
    pub forms: NormalForms<S>,
}

impl<'a, S: Scalar> NormalRealm<'a, S> {
    pub fn new(params: &'a Params<S>) -> Result<Self, ForgeError> {
        Ok(NormalRealm {
            params,
            forms: NormalForms::new(params)?,
        })
    }
}

impl<'a, S: Scalar> Realm<S> for NormalRealm<'a, S> {
    type Elem = NormalElement<S>;

    fn resolve(&self, op: &OpRef) -> Result<NormalElement<S>, ForgeError> {
        let f = &self.forms;
        Ok(match *op {
            OpRef::I => NormalElement::one(),
            OpRef::T(1, 2) => f.t12.clone(),
            OpRef::T(2, 1) => f.t21.clone(),
            OpRef::H(1) => f.h1.clone(),
            OpRef::D => f.d.clone(),
            OpRef::Theta(a @ (1 | 2)) => NormalElement::theta(a),
            OpRef::Del(a @ (1 | 2)) => NormalElement::del(a),
            other => {
                return Err(ForgeError::Unsupported(format!(
                    "{other:?} has no polynomial realization"
                )))
            }
        })
    }

    fn zero(&self) -> NormalElement<S> {
        NormalElement::zero()
    }

    fn identity(&self) -> NormalElement<S> {
        NormalElement::one()
    }

    fn mul(&self, a: &NormalElement<S>, b: &NormalElement<S>) -> NormalElement<S> {
        multiply(a, b, self.params)
    }

    fn axpy(&self, acc: &NormalElement<S>, c: &S, x: &NormalElement<S>) -> NormalElement<S> {
        acc.add(&x.scale(c))
    }

    fn witnesses(&self, e: &NormalElement<S>) -> Vec<ResidueEntry> {
        e.terms()
            .map(|(m, c)| ResidueEntry {
                at: m.to_string(),
                value: c.to_text(),
            })
            .collect()
    }

    fn describe(&self) -> BTreeMap<String, String> {
        base_params(self.params, "normal-form")
    }
}
