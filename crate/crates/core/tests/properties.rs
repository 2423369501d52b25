use num_traits::{One, Zero};
use proptest::prelude::*;

use qdeform::algebra::{
    normal_form, parse, AlgebraContext, Letter, Mode, NormalElement, Params, Rewriter, Strategy as Order, Word, WordSum,
};
use qdeform::rep::{matrix_of, word_matrix};
use qdeform::ring::{rat, Bindings, Rational, RingElem, Symbol};

const SYMS: [Symbol; 3] = [Symbol::R, Symbol::Q, Symbol::A];

fn poly_terms() -> impl Strategy<Value = Vec<(i64, i32, i32, i32)>> {
    prop::collection::vec((-4i64..=4, -2i32..=2, -2i32..=2, 0i32..=1), 0..4)
}

fn poly(terms: &[(i64, i32, i32, i32)]) -> RingElem {
    let mut acc = RingElem::zero();
    for &(c, er, eq, ea) in terms {
        let m = &(&RingElem::monomial(Symbol::R, er) * &RingElem::monomial(Symbol::Q, eq))
            * &RingElem::monomial(Symbol::A, ea);
        acc = &acc + &(&RingElem::int(c) * &m);
    }
    acc
}

prop_compose! {
    fn ring_elem()(num in poly_terms(), den in poly_terms()) -> RingElem {
        let d = poly(&den);
        let d = if d.is_zero() { RingElem::one() } else { d };
        poly(&num).checked_div(&d).unwrap()
    }
}

prop_compose! {
    fn point()(vals in prop::array::uniform3((-9i64..=9, 1i64..=9))) -> Bindings {
        SYMS.iter()
            .zip(vals)
            .map(|(s, (n, d))| (*s, rat(if n == 0 { 1 } else { n }, d)))
            .collect()
    }
}

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (1..=n, any::<bool>()).prop_map(|(i, t)| if t { Letter::Theta(i) } else { Letter::Del(i) }),
        0..=max_len,
    )
}

fn ctx_and_word(max_len: usize) -> impl Strategy<Value = (AlgebraContext, Vec<Letter>)> {
    prop_oneof![
        (1usize..=4).prop_flat_map(move |n| (Just(AlgebraContext::new(n, Mode::OneParam).unwrap()), letters(n, max_len))),
        letters(2, max_len).prop_map(|w| (AlgebraContext::two_param(), w)),
    ]
}

fn nf_with(p: &Params<RingElem>, w: &[Letter], s: Order) -> (NormalElement<RingElem>, u64) {
    let mut rw = Rewriter::new(p, s);
    let out = rw.normal_form(&WordSum::word(Word(w.to_vec())));
    (out, rw.steps())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in ring_elem(), b in ring_elem(), c in ring_elem()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RingElem::zero(), a.clone());
        prop_assert_eq!(&a * &RingElem::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_independent_of_construction(a in ring_elem(), b in ring_elem(), c in ring_elem()) {
        let x = &(&(&a * &b) + &c) - &a;
        let y = &(&c - &a) + &(&b * &a);
        prop_assert_eq!(x.to_string(), y.to_string());
        prop_assert_eq!(&x, &y);
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ring_elem(), b in ring_elem(), pt in point()) {
        if let (Ok(va), Ok(vb)) = (a.eval(&pt), b.eval(&pt)) {
            prop_assert_eq!((&a + &b).eval(&pt).unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &va * &vb);
        }
    }

    #[test]
    fn coefficient_text_round_trips(a in ring_elem()) {
        let back = qdeform::algebra::parse_scalar(&a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn rewriting_is_confluent((ctx, w) in ctx_and_word(8), seed in any::<u64>()) {
        let p = Params::symbolic(ctx);
        let (left, _) = nf_with(&p, &w, Order::Leftmost);
        let (right, _) = nf_with(&p, &w, Order::Rightmost);
        let (random, _) = nf_with(&p, &w, Order::Random(seed));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &random);
    }

    #[test]
    fn rewriting_terminates_within_step_bound((ctx, w) in ctx_and_word(8), seed in any::<u64>()) {
        let p = Params::symbolic(ctx);
        let bound = ((w.len() * w.len()).max(1) as u64) << ctx.n();
        for s in [Order::Leftmost, Order::Rightmost, Order::Random(seed)] {
            let (_, steps) = nf_with(&p, &w, s);
            prop_assert!(steps <= bound, "{} steps for {:?} (bound {})", steps, w, bound);
        }
    }

    #[test]
    fn normal_form_matches_letter_product((ctx, w) in ctx_and_word(8)) {
        let p = Params::symbolic(ctx);
        let word = Word(w);
        let nf = normal_form(&WordSum::word(word.clone()), &p);
        prop_assert_eq!(matrix_of(&nf, &p).unwrap(), word_matrix(&word, &p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn normal_form_text_round_trips((ctx, w) in ctx_and_word(5), c in ring_elem()) {
        let p = Params::symbolic(ctx);
        let nf = normal_form(&WordSum::term(Word(w), c), &p);
        let back = parse(&nf.to_string(), &ctx).unwrap();
        prop_assert_eq!(back, nf);
    }

    #[test]
    fn one_param_is_two_param_at_q_equals_r(w in letters(2, 6)) {
        let one = Params::symbolic(AlgebraContext::new(2, Mode::OneParam).unwrap());
        let two = Params::symbolic(AlgebraContext::two_param());
        let a = normal_form(&WordSum::word(Word(w.clone())), &one);
        let b = normal_form(&WordSum::word(Word(w)), &two)
            .map_coeffs(|e| e.substitute_symbol(Symbol::Q, &RingElem::symbol(Symbol::R)).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sampled_normal_form_commutes_with_evaluation((ctx, w) in ctx_and_word(6), rv in (1i64..=9, 1i64..=9), qv in (1i64..=9, 1i64..=9)) {
        let r: Rational = rat(rv.0, rv.1);
        let q: Rational = rat(qv.0, qv.1);
        let sym = normal_form(&WordSum::word(Word(w.clone())), &Params::symbolic(ctx));
        let num = normal_form(&WordSum::word(Word(w)), &Params::new(ctx, r.clone(), q.clone()).unwrap());
        let pt: Bindings = [(Symbol::R, r), (Symbol::Q, q)].into_iter().collect();
        prop_assert_eq!(sym.map_coeffs(|e| e.eval(&pt).unwrap()), num);
    }
}
