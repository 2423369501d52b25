use std::collections::BTreeMap;

use crate::algebra::{AlgebraContext, Letter, Mode, Params};
use crate::rep::RepMatrix;
use crate::ring::{Rational, RingElem, Symbol};
use crate::scalar::Scalar;

use super::generators::{GeneratorSet, SetKind};
use super::relation::{matrix_witnesses, MatrixRealm, RelationReport, ResidueEntry};
use super::suites::{centrality, su2_block};
use super::ForgeError;

fn params_map(n: usize, mode: Mode, extra: &[(&str, &str)]) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    out.insert("n".into(), n.to_string());
    out.insert("mode".into(), mode.to_string());
    for (k, v) in extra {
        out.insert((*k).into(), (*v).into());
    }
    out
}

fn q_witnesses(m: &RepMatrix<RingElem>) -> Vec<ResidueEntry> {
    m.nonzero_entries()
        .into_iter()
        .filter(|(_, _, v)| v.contains(Symbol::Q))
        .map(|(i, j, v)| ResidueEntry {
            at: format!("({i},{j})"),
            value: v.to_string(),
        })
        .collect()
}

/// In two-parameter mode `H_1`, `D` and every residue of the `su(2)` block
/// and centrality suites must be free of `q`.
pub fn q_independence(gs: &GeneratorSet<RingElem>) -> Result<Vec<RelationReport>, ForgeError> {
    let p = gs.params();
    let ps = || params_map(p.n(), p.ctx().mode(), &[("check", "q-absent")]);
    let mut out = Vec::new();
    for a in 1..gs.n() {
        out.push(RelationReport::simple(format!("q-free.H{a}"), ps(), q_witnesses(gs.h(a))));
    }
    out.push(RelationReport::simple("q-free.D", ps(), q_witnesses(gs.dilatation())));
    let realm = MatrixRealm { gens: gs };
    let mut rels = Vec::new();
    for a in 1..gs.n() {
        rels.extend(su2_block(p, a));
    }
    rels.extend(centrality(p));
    for rel in rels {
        let res = rel.residue(&realm)?;
        out.push(RelationReport::simple(format!("q-free.{}", rel.id), ps(), q_witnesses(&res)));
    }
    Ok(out)
}

/// Independent classical fermion operators: creation `c†_a` with the
/// Jordan-Wigner sign of the occupied lower modes.
pub struct ClassicalFermions {
    n: usize,
}

impl ClassicalFermions {
    pub fn new(n: usize) -> Self {
        ClassicalFermions { n }
    }

    fn sign(state: usize, a: usize) -> Rational {
        let mut s = 1i64;
        for b in 0..a - 1 {
            if state >> b & 1 == 1 {
                s = -s;
            }
        }
        Rational::from_integer(s.into())
    }

    pub fn create(&self, a: usize) -> RepMatrix<Rational> {
        let dim = 1 << self.n;
        let mut m = RepMatrix::zeros(dim);
        for s in 0..dim {
            if s >> (a - 1) & 1 == 0 {
                m.set(s | 1 << (a - 1), s, Self::sign(s, a));
            }
        }
        m
    }

    pub fn annihilate(&self, a: usize) -> RepMatrix<Rational> {
        let dim = 1 << self.n;
        let mut m = RepMatrix::zeros(dim);
        for s in 0..dim {
            if s >> (a - 1) & 1 == 1 {
                m.set(s & !(1 << (a - 1)), s, Self::sign(s, a));
            }
        }
        m
    }

    pub fn number(&self, a: usize) -> RepMatrix<Rational> {
        let dim = 1 << self.n;
        RepMatrix::diagonal(
            (0..dim)
                .map(|s| Rational::from_integer(((s >> (a - 1) & 1) as i64).into()))
                .collect(),
        )
    }

    /// `E_{ag} = c†_a c_g`
    pub fn unit(&self, a: usize, g: usize) -> RepMatrix<Rational> {
        self.create(a).mul(&self.annihilate(g))
    }
}

/// Generator set with every parameter set to 1.
pub fn classical_set(n: usize) -> Result<GeneratorSet<Rational>, ForgeError> {
    let one = Rational::from_integer(1.into());
    let ctx = AlgebraContext::one_param(n)?;
    GeneratorSet::build(Params::new(ctx, one.clone(), one)?, SetKind::Igl)
}

/// At `r = q = 1` every generator equals its classical counterpart.
pub fn classical_limit(n: usize) -> Result<Vec<RelationReport>, ForgeError> {
    let gs = classical_set(n)?;
    let cf = ClassicalFermions::new(n);
    let ps = || params_map(n, Mode::OneParam, &[("r", "1"), ("q", "1")]);
    let mut out = Vec::new();
    let mut push = |id: String, m: RepMatrix<Rational>| {
        out.push(RelationReport::simple(id, ps(), matrix_witnesses(&m)));
    };
    for a in 1..=n {
        push(format!("classical.th{a}"), gs.theta(a).sub(&cf.create(a)));
        push(format!("classical.d{a}"), gs.del(a).sub(&cf.annihilate(a)));
        for g in (1..=n).filter(|g| *g != a) {
            push(format!("classical.T{a}{g}"), gs.t(a, g).sub(&cf.unit(a, g)));
        }
    }
    let mut total = RepMatrix::zeros(1 << n);
    for a in 1..=n {
        total = total.add(&cf.number(a));
    }
    push("classical.D".into(), gs.dilatation().sub(&total));
    for a in 1..n {
        let diff = cf.number(a + 1).sub(&cf.number(a));
        push(format!("classical.H{a}"), gs.h(a).sub(&diff));
        let comm = gs.t(a + 1, a).commutator(gs.t(a, a + 1));
        push(format!("classical.lower-raise.a{a}"), comm.sub(&diff));
    }
    Ok(out)
}

/// Finds `h` among `candidates` such that `g·L − h·L·g` lies in the span of
/// the letter matrices, returning `h` and the letter expansion of the
/// remainder. Letter matrices have pairwise disjoint supports, so the
/// expansion is read off entrywise.
pub fn extract_commutation_pattern<S: Scalar>(
    g: &RepMatrix<S>,
    letter: &RepMatrix<S>,
    candidates: &[S],
    gens: &GeneratorSet<S>,
) -> Result<(S, Vec<(Letter, S)>), ForgeError> {
    let n = gens.n();
    let letters: Vec<Letter> = (1..=n)
        .map(Letter::Theta)
        .chain((1..=n).map(Letter::Del))
        .collect();
    'cand: for h in candidates {
        let rem = g.h_commutator(letter, h);
        let mut rest = rem.clone();
        let mut expansion = Vec::new();
        for &l in &letters {
            let m = gens.letter(l);
            let Some((i, j, v)) = m.nonzero_entries().into_iter().next() else {
                continue;
            };
            let c = rem.get(i, j).mul_ref(&v.try_inv().expect("nonzero entry"));
            if !c.is_zero() {
                rest = rest.sub(&m.scale(&c));
                expansion.push((l, c));
            }
        }
        if !rest.is_zero() {
            continue 'cand;
        }
        return Ok((h.clone(), expansion));
    }
    Err(ForgeError::NoPattern)
}
