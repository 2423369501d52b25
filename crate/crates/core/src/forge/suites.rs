//! Relation suites as data. Each function returns the records for one family
//! of identities; evaluation happens through a [`Realm`].

use crate::algebra::{Letter, Mode, Params};
use crate::scalar::Scalar;

use super::relation::{OpRef, Realm, Relation, RelationReport};
use super::ForgeError;

use OpRef::{Del, Dressed, Theta, Vacuum, D, H, I, T};

struct K<'a, S> {
    p: &'a Params<S>,
}

impl<'a, S: Scalar> K<'a, S> {
    fn one(&self) -> S {
        S::one()
    }
    fn r(&self, k: i32) -> S {
        self.p.r_pow(k)
    }
    fn neg_r(&self, k: i32) -> S {
        self.p.r_pow(k).neg_ref()
    }
    fn q(&self) -> S {
        self.p.q().clone()
    }
    fn qi(&self) -> S {
        self.p.q_inv().clone()
    }
    /// `r^k · q^e` with `e ∈ {-1, 1}`
    fn rq(&self, k: i32, e: i32) -> S {
        let q = if e > 0 { self.q() } else { self.qi() };
        self.r(k).mul_ref(&q)
    }
    /// `r + r^-1`
    fn r_plus_rinv(&self) -> S {
        self.r(1).add_ref(&self.r(-1))
    }
}

fn rhs<S>(c: S, ops: &[OpRef]) -> Vec<(S, Vec<OpRef>)> {
    vec![(c, ops.to_vec())]
}

/// The deformed `su(2)` block at position `a`.
pub fn su2_block<S: Scalar>(p: &Params<S>, a: usize) -> Vec<Relation<S>> {
    let k = K { p };
    let b = a + 1;
    let mut out = vec![
        Relation::h_comm(
            format!("su2.cartan-raise.a{a}"),
            &[H(a)],
            &[T(a, b)],
            k.r(4),
            rhs(k.r(2).mul_ref(&k.r_plus_rinv()).neg_ref(), &[T(a, b)]),
        ),
        Relation::h_comm(
            format!("su2.cartan-lower.a{a}"),
            &[H(a)],
            &[T(b, a)],
            k.r(-4),
            rhs(k.r(-2).mul_ref(&k.r_plus_rinv()), &[T(b, a)]),
        ),
        Relation::h_comm(
            format!("su2.lower-raise.a{a}"),
            &[T(b, a)],
            &[T(a, b)],
            k.r(2),
            rhs(k.r(1), &[H(a)]),
        ),
    ];
    if p.n() == 2 {
        // H_1 ≡ r^-1 [T^2_1, T^1_2]_{r^2}
        out.push(
            Relation::new("su2.cartan-definition.a1")
                .term(k.r(-1), &[T(2, 1), T(1, 2)])
                .term(k.r(1).neg_ref(), &[T(1, 2), T(2, 1)])
                .term(k.one().neg_ref(), &[H(1)]),
        );
    }
    out
}

/// Action of the simple generators and `H_a` on letters, the dilatation
/// action, and the distant-index commuting statements.
pub fn action_relations<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let k = K { p };
    let n = p.n();
    let mut out = Vec::new();
    for a in 1..n {
        let b = a + 1;
        let id = |s: &str| format!("action.{s}.a{a}");
        if p.ctx().mode() == Mode::TwoParam {
            out.extend([
                Relation::h_comm(id("raise-theta1"), &[T(1, 2)], &[Theta(1)], k.rq(2, -1), vec![]),
                Relation::h_comm(id("raise-theta2"), &[T(1, 2)], &[Theta(2)], k.qi(), rhs(k.one(), &[Theta(1)])),
                Relation::h_comm(id("raise-del1"), &[T(1, 2)], &[Del(1)], k.rq(-2, 1), rhs(k.rq(-2, 1).neg_ref(), &[Del(2)])),
                Relation::h_comm(id("raise-del2"), &[T(1, 2)], &[Del(2)], k.q(), vec![]),
                Relation::h_comm(id("lower-theta1"), &[T(2, 1)], &[Theta(1)], k.q(), rhs(k.one(), &[Theta(2)])),
                Relation::h_comm(id("lower-theta2"), &[T(2, 1)], &[Theta(2)], k.rq(-2, 1), vec![]),
                Relation::h_comm(id("lower-del1"), &[T(2, 1)], &[Del(1)], k.qi(), vec![]),
                Relation::h_comm(id("lower-del2"), &[T(2, 1)], &[Del(2)], k.rq(2, -1), rhs(k.rq(2, -1).neg_ref(), &[Del(1)])),
            ]);
        } else {
            out.extend([
                Relation::h_comm(id("raise-theta-low"), &[T(a, b)], &[Theta(a)], k.r(1), vec![]),
                Relation::h_comm(id("raise-del-low"), &[T(a, b)], &[Del(a)], k.r(-1), rhs(k.neg_r(-1), &[Del(b)])),
                Relation::h_comm(id("raise-theta-high"), &[T(a, b)], &[Theta(b)], k.r(-1), rhs(k.one(), &[Theta(a)])),
                Relation::h_comm(id("raise-del-high"), &[T(a, b)], &[Del(b)], k.r(1), vec![]),
                Relation::h_comm(id("lower-theta-low"), &[T(b, a)], &[Theta(a)], k.r(1), rhs(k.one(), &[Theta(b)])),
                Relation::h_comm(id("lower-del-low"), &[T(b, a)], &[Del(a)], k.r(-1), vec![]),
                Relation::h_comm(id("lower-theta-high"), &[T(b, a)], &[Theta(b)], k.r(-1), vec![]),
                Relation::h_comm(id("lower-del-high"), &[T(b, a)], &[Del(b)], k.r(1), rhs(k.neg_r(1), &[Del(a)])),
            ]);
        }
        out.extend([
            Relation::h_comm(id("cartan-theta-low"), &[H(a)], &[Theta(a)], k.r(2), rhs(k.neg_r(1), &[Theta(a)])),
            Relation::h_comm(id("cartan-del-low"), &[H(a)], &[Del(a)], k.r(-2), rhs(k.r(-1), &[Del(a)])),
            Relation::h_comm(id("cartan-theta-high"), &[H(a)], &[Theta(b)], k.r(-2), rhs(k.r(-1), &[Theta(b)])),
            Relation::h_comm(id("cartan-del-high"), &[H(a)], &[Del(b)], k.r(2), rhs(k.neg_r(1), &[Del(b)])),
        ]);
        for g in (1..=n).filter(|g| *g != a && *g != b) {
            for (name, gen) in [("raise", T(a, b)), ("lower", T(b, a)), ("cartan", H(a))] {
                out.push(Relation::h_comm(format!("distant.{name}-theta{g}.a{a}"), &[gen], &[Theta(g)], k.one(), vec![]));
                out.push(Relation::h_comm(format!("distant.{name}-del{g}.a{a}"), &[gen], &[Del(g)], k.one(), vec![]));
            }
        }
    }
    for g in 1..=n {
        out.push(Relation::h_comm(format!("dilatation.theta{g}"), &[D], &[Theta(g)], k.r(-2), rhs(k.r(-1), &[Theta(g)])));
        out.push(Relation::h_comm(format!("dilatation.del{g}"), &[D], &[Del(g)], k.r(2), rhs(k.neg_r(1), &[Del(g)])));
    }
    out
}

/// The two identities that motivate the definition of `H_1` (`n = 2`).
pub fn h1_motivation<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let k = K { p };
    vec![
        Relation::h_comm("motivation.lower-raise-theta1", &[T(2, 1), T(1, 2)], &[Theta(1)], k.r(2), rhs(k.rq(2, -1), &[Theta(2), T(1, 2)])),
        Relation::h_comm(
            "motivation.raise-lower-theta1",
            &[T(1, 2), T(2, 1)],
            &[Theta(1)],
            k.r(2),
            vec![(k.qi(), vec![Theta(2), T(1, 2)]), (k.one(), vec![Theta(1)])],
        ),
    ]
}

/// `D` commutes with every `su(n)` generator.
pub fn centrality<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let n = p.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for g in 1..=n {
            if a != g {
                out.push(Relation::h_comm(format!("central.T{a}{g}"), &[D], &[T(a, g)], S::one(), vec![]));
            }
        }
    }
    for a in 1..n {
        out.push(Relation::h_comm(format!("central.H{a}"), &[D], &[H(a)], S::one(), vec![]));
    }
    out
}

/// Defining relations of the quantum space, with letters supplied by `at`.
/// `p` fixes the coefficients; `n` is the number of letter pairs.
fn space_relations<S: Scalar>(
    p: &Params<S>,
    n: usize,
    prefix: &str,
    at: impl Fn(Letter) -> OpRef,
) -> Vec<Relation<S>> {
    let k = K { p };
    let two = p.ctx().mode() == Mode::TwoParam;
    let th = |i| at(Letter::Theta(i));
    let de = |i| at(Letter::Del(i));
    let mut out = Vec::new();
    for a in 1..=n {
        out.push(Relation::new(format!("{prefix}.theta{a}-squared")).term(k.one(), &[th(a), th(a)]));
        out.push(Relation::new(format!("{prefix}.del{a}-squared")).term(k.one(), &[de(a), de(a)]));
        let mut diag = Relation::new(format!("{prefix}.diagonal{a}"))
            .term(k.one(), &[de(a), th(a)])
            .term(k.one(), &[th(a), de(a)])
            .term(k.one().neg_ref(), &[I]);
        for b in a + 1..=n {
            diag = diag.term(p.diagonal_shift().neg_ref(), &[th(b), de(b)]);
        }
        out.push(diag);
        for b in a + 1..=n {
            let (tc, dc) = if two { (k.q(), k.rq(2, -1)) } else { (k.r(1), k.r(1)) };
            out.push(
                Relation::new(format!("{prefix}.theta{a}-theta{b}"))
                    .term(tc, &[th(a), th(b)])
                    .term(k.one(), &[th(b), th(a)]),
            );
            out.push(
                Relation::new(format!("{prefix}.del{a}-del{b}"))
                    .term(k.one(), &[de(a), de(b)])
                    .term(dc, &[de(b), de(a)]),
            );
        }
        for b in (1..=n).filter(|b| *b != a) {
            let rel = Relation::new(format!("{prefix}.del{a}-theta{b}"));
            let rel = match (two, a > b) {
                (false, _) => rel.term(k.r(1), &[de(a), th(b)]).term(k.one(), &[th(b), de(a)]),
                (true, true) => rel.term(k.q(), &[de(a), th(b)]).term(k.one(), &[th(b), de(a)]),
                (true, false) => rel.term(k.one(), &[de(a), th(b)]).term(k.rq(-2, 1), &[th(b), de(a)]),
            };
            out.push(rel);
        }
    }
    out
}

/// Every defining relation of the quantum space on the letter matrices.
pub fn quantum_space<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    space_relations(p, p.n(), "space", |l| match l {
        Letter::Theta(i) => Theta(i),
        Letter::Del(i) => Del(i),
    })
}

/// The dressed letters of each block satisfy the two-dimensional relations.
pub fn dressed_blocks<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let mut out = Vec::new();
    for a in 1..p.n() {
        out.extend(space_relations(p, 2, &format!("dressed.a{a}"), |l| match l {
            Letter::Theta(i) => Dressed(a, Letter::Theta(a + i - 1)),
            Letter::Del(i) => Dressed(a, Letter::Del(a + i - 1)),
        }));
    }
    out
}

/// Independence of the non-simple generators from the intermediate index.
pub fn intermediate_independence<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let n = p.n();
    let r = p.r().clone();
    let mut out = Vec::new();
    for a in 1..=n {
        for g in 1..=n {
            if a.abs_diff(g) < 2 {
                continue;
            }
            let (lo, hi) = (a.min(g), a.max(g));
            for b in lo + 1..hi {
                out.push(Relation::h_comm(format!("chain.T{a}{g}-via{b}"), &[T(a, b)], &[T(b, g)], r.clone(), rhs(S::one(), &[T(a, g)])));
            }
        }
    }
    out
}

/// Translations annihilate the vacuum.
pub fn vacuum_annihilation<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    (1..=p.n())
        .map(|a| Relation::new(format!("vacuum.del{a}")).term(S::one(), &[Del(a), Vacuum]))
        .collect()
}

/// Full `gl(n)` suite.
pub fn gl_suite<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let mut out = Vec::new();
    for a in 1..p.n() {
        out.extend(su2_block(p, a));
    }
    out.extend(action_relations(p));
    if p.n() == 2 {
        out.extend(h1_motivation(p));
    }
    out.extend(centrality(p));
    out.extend(dressed_blocks(p));
    out.extend(intermediate_independence(p));
    out
}

/// `gl(n)` suite extended by the translation sector.
pub fn igl_suite<S: Scalar>(p: &Params<S>) -> Vec<Relation<S>> {
    let mut out = gl_suite(p);
    out.extend(quantum_space(p));
    out.extend(vacuum_annihilation(p));
    out
}

pub fn run<S: Scalar, R: Realm<S>>(rels: &[Relation<S>], realm: &R) -> Result<Vec<RelationReport>, ForgeError> {
    rels.iter().map(|r| r.check(realm)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::forge::{build_gl, build_igl, extract_commutation_pattern, q_independence, MatrixRealm, NormalRealm};
    use crate::ring::{RingElem, Symbol};

    fn failures(reps: &[RelationReport]) -> Vec<String> {
        reps.iter().filter(|r| !r.pass).map(|r| r.relation.clone()).collect()
    }

    #[test]
    fn gl_two_dimensional_both_realms() {
        for mode in [Mode::OneParam, Mode::TwoParam] {
            let gs = build_igl(2, mode).unwrap();
            let p = gs.params();
            let reps = run(&igl_suite(p), &MatrixRealm { gens: &gs }).unwrap();
            assert_eq!(failures(&reps), Vec::<String>::new(), "{mode}");
            let mut poly = su2_block(p, 1);
            poly.extend(action_relations(p));
            poly.extend(h1_motivation(p));
            poly.extend(centrality(p));
            let realm = NormalRealm::new(p).unwrap();
            let reps = run(&poly, &realm).unwrap();
            assert_eq!(failures(&reps), Vec::<String>::new(), "{mode}");
        }
    }

    #[test]
    fn gl_three_dimensional() {
        let gs = build_gl(3, Mode::OneParam).unwrap();
        let reps = run(&igl_suite(gs.params()), &MatrixRealm { gens: &gs }).unwrap();
        assert_eq!(failures(&reps), Vec::<String>::new());
        assert!(reps.iter().any(|r| r.relation == "distant.cartan-theta3.a1"));
    }

    #[test]
    fn q_is_absent_from_su2_sector() {
        let gs = build_gl(2, Mode::TwoParam).unwrap();
        let reps = q_independence(&gs).unwrap();
        assert_eq!(failures(&reps), Vec::<String>::new());
        assert!(gs.t(1, 2).contains(Symbol::R) || gs.t(1, 2).symbols().is_empty());
    }

    #[test]
    fn wrong_relation_is_reported() {
        let gs = build_gl(2, Mode::OneParam).unwrap();
        let bad = Relation::h_comm("bad", &[H(1)], &[Theta(1)], RingElem::int(1), vec![]);
        let rep = bad.check(&MatrixRealm { gens: &gs }).unwrap();
        assert!(!rep.pass);
        assert!(!rep.residue_nonzero_entries.is_empty());
    }

    #[test]
    fn commutation_patterns() {
        let gs = build_gl(2, Mode::TwoParam).unwrap();
        let p = gs.params();
        let k = K { p };
        let cands = vec![k.q(), k.qi(), k.rq(2, -1), k.r(2), k.r(-2)];
        let (h, rem) = extract_commutation_pattern(gs.t(1, 2), gs.theta(2), &cands, &gs).unwrap();
        assert_eq!(h, k.qi());
        assert_eq!(rem, vec![(Letter::Theta(1), RingElem::int(1))]);
        let (h, rem) = extract_commutation_pattern(gs.h(1), gs.theta(1), &cands, &gs).unwrap();
        assert_eq!(h, k.r(2));
        assert_eq!(rem, vec![(Letter::Theta(1), k.neg_r(1))]);
        let (h, rem) = extract_commutation_pattern(gs.dilatation(), gs.del(1), &cands, &gs).unwrap();
        assert_eq!(h, k.r(2));
        assert_eq!(rem, vec![(Letter::Del(1), k.neg_r(1))]);
        assert!(extract_commutation_pattern(gs.t(1, 2), gs.theta(2), &[k.q()], &gs).is_err());
    }

    #[test]
    fn sampled_parameters_also_pass() {
        let ctx = AlgebraContext::one_param(3).unwrap();
        let p = Params::new(ctx, crate::ring::rat(3, 7), crate::ring::rat(3, 7)).unwrap();
        let gs = crate::forge::GeneratorSet::build(p, crate::forge::SetKind::Igl).unwrap();
        let reps = run(&igl_suite(gs.params()), &MatrixRealm { gens: &gs }).unwrap();
        assert_eq!(failures(&reps), Vec::<String>::new());
    }
}
