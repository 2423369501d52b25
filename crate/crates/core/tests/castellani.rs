use num_traits::Zero;
use proptest::prelude::*;

use qdeform::castellani::{
    chi_residues, duality_transform, family_a_from, family_b_constraint, family_b_with, realize, solve_family_a,
    solve_family_b, symbolic_realization, verify_candidate, MapCandidate, Reading, SignConvention,
};
use qdeform::ring::{rat, Bindings, Rational, RingElem, Symbol};

fn q_of(v: (i64, i64)) -> RingElem {
    RingElem::rational(rat(v.0, v.1))
}

fn nonzero() -> impl Strategy<Value = (i64, i64)> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9)
}

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-9i64..=9, 1i64..=9)
}

/// `None` when the point is singular for the candidate.
fn chi_vanish_at(cand: &MapCandidate, q: &Rational, r: &Rational) -> Option<bool> {
    let pt: Bindings = [(Symbol::Q, q.clone()), (Symbol::R, r.clone())].into_iter().collect();
    let real = realize(cand, &|e: &RingElem| e.eval(&pt)).ok()?;
    let res = chi_residues(&real, Reading::default_for(cand)).ok()?;
    Some(res.iter().all(|(_, m)| m.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn perturbing_a_bound_parameter_breaks_family_a(
        a in small(), c in small(), which in 0usize..4, delta in nonzero(),
    ) {
        let (a, c) = (q_of(a), q_of(c));
        let cand = solve_family_a(&a, &c, SignConvention::Corrected).unwrap();
        let run = verify_candidate(&cand, None, 20, 0).unwrap();
        prop_assert!(run.pass());

        let mut p: Vec<RingElem> = ["b", "x", "y", "z"].iter().map(|k| cand.bindings[*k].clone()).collect();
        p[which] = &p[which] + &q_of(delta);
        let bad = family_a_from(&a, &p[0], &c, &p[1], &p[2], &p[3]);
        let run = verify_candidate(&bad, None, 20, 0).unwrap();
        prop_assert!(!run.pass(), "perturbing parameter {} left every residue zero", which);
    }

    #[test]
    fn solved_family_a_satisfies_the_x_equation(a in small(), c in small()) {
        let cand = solve_family_a(&q_of(a), &q_of(c), SignConvention::Corrected).unwrap();
        let real = symbolic_realization(&cand).unwrap();
        let res = chi_residues(&real, Reading::Hatted).unwrap();
        let (_, x_eq) = res.iter().find(|(id, _)| id == "chi.x-equation").unwrap();
        prop_assert!(x_eq.is_zero());
    }

    #[test]
    fn duality_transports_vanishing_points(r in nonzero()) {
        let r0 = rat(r.0, r.1);
        prop_assume!(&r0 * &r0 != rat(1, 1));
        let zero = RingElem::zero();
        let cand = family_b_with(&zero, &zero).unwrap();
        let dual = duality_transform(&cand).unwrap();
        // The solution lives on q = r.
        prop_assert_eq!(chi_vanish_at(&cand, &r0, &r0), Some(true));
        let q_inv = rat(1, 1) / &r0;
        prop_assert_eq!(chi_vanish_at(&dual, &q_inv, &r0), Some(true));
    }

    #[test]
    fn family_b_constraint_is_derived(pbeta in small()) {
        let pb = q_of(pbeta);
        let cand = solve_family_b(&pb).unwrap();
        let palpha = &cand.bindings["palpha"];
        prop_assert!(family_b_constraint(palpha, &pb).is_zero());
    }
}

#[test]
fn constraint_at_zero_parameters_is_q_squared_minus_r_squared() {
    let zero = RingElem::zero();
    let res = family_b_constraint(&zero, &zero);
    assert!(!res.is_zero());
    let poly = res.constraint_polynomial().to_string();
    assert!(poly == "r^2 - q^2" || poly == "q^2 - r^2", "{poly}");
    let cand = family_b_with(&zero, &zero).unwrap();
    assert_eq!(cand.q_link, Some(RingElem::symbol(Symbol::R)));
}
