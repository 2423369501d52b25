use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

use super::context::Params;
use super::normal::{NormalElement, NormalMonomial};
use super::word::{Letter, Word, WordSum};

/// Which redex of a word is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Rewriting engine for one parameter set. Counts the rules it applies.
pub struct Rewriter<'a, S> {
    params: &'a Params<S>,
    strategy: Strategy,
    rng: Option<ChaCha8Rng>,
    steps: u64,
}

fn is_redex(a: Letter, b: Letter) -> bool {
    match (a, b) {
        (Letter::Theta(x), Letter::Theta(y)) => x >= y,
        (Letter::Del(x), Letter::Del(y)) => x >= y,
        (Letter::Del(_), Letter::Theta(_)) => true,
        (Letter::Theta(_), Letter::Del(_)) => false,
    }
}

impl<'a, S: Scalar> Rewriter<'a, S> {
    pub fn new(params: &'a Params<S>, strategy: Strategy) -> Self {
        let rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Rewriter {
            params,
            strategy,
            rng,
            steps: 0,
        }
    }

    /// Number of rewrite steps applied so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn pick(&mut self, w: &[Letter]) -> Option<usize> {
        let mut redexes = (0..w.len().saturating_sub(1)).filter(|&i| is_redex(w[i], w[i + 1]));
        match self.strategy {
            Strategy::Leftmost => redexes.next(),
            Strategy::Rightmost => redexes.next_back(),
            Strategy::Random(_) => {
                let all: Vec<usize> = redexes.collect();
                if all.is_empty() {
                    return None;
                }
                let rng = self.rng.as_mut().expect("seeded");
                Some(all[rng.gen_range(0..all.len())])
            }
        }
    }

    /// Replacement for the pair `(a, b)` as a list of `(letters, factor)`.
    fn rule(&self, a: Letter, b: Letter) -> Vec<(Vec<Letter>, S)> {
        let p = self.params;
        match (a, b) {
            (Letter::Theta(x), Letter::Theta(y)) | (Letter::Del(x), Letter::Del(y)) if x == y => {
                vec![]
            }
            (Letter::Theta(x), Letter::Theta(y)) => {
                vec![(vec![Letter::Theta(y), Letter::Theta(x)], p.theta_swap())]
            }
            (Letter::Del(x), Letter::Del(y)) => {
                vec![(vec![Letter::Del(y), Letter::Del(x)], p.del_swap())]
            }
            (Letter::Del(x), Letter::Theta(y)) if x != y => {
                vec![(vec![Letter::Theta(y), Letter::Del(x)], p.cross(x, y))]
            }
            (Letter::Del(x), Letter::Theta(_)) => {
                let mut out = vec![
                    (vec![], S::one()),
                    (vec![Letter::Theta(x), Letter::Del(x)], S::one().neg_ref()),
                ];
                let shift = p.diagonal_shift();
                if !shift.is_zero() {
                    for beta in x + 1..=p.n() {
                        out.push((vec![Letter::Theta(beta), Letter::Del(beta)], shift.clone()));
                    }
                }
                out
            }
            (Letter::Theta(_), Letter::Del(_)) => unreachable!("not a redex"),
        }
    }

    /// Rewrites a linear combination of words to normal form.
    pub fn normal_form(&mut self, input: &WordSum<S>) -> NormalElement<S> {
        let mut done = NormalElement::zero();
        let mut work: BTreeMap<Vec<Letter>, S> = BTreeMap::new();
        for (w, c) in input.terms() {
            push(&mut work, w.letters().to_vec(), c.clone());
        }
        while let Some((w, c)) = work.pop_first() {
            let Some(i) = self.pick(&w) else {
                let m = NormalMonomial::from_normal_word(&Word(w)).expect("no redex means normal");
                done.add_term(m, c);
                continue;
            };
            self.steps += 1;
            for (mid, f) in self.rule(w[i], w[i + 1]) {
                let mut nw = Vec::with_capacity(w.len());
                nw.extend_from_slice(&w[..i]);
                nw.extend(mid);
                nw.extend_from_slice(&w[i + 2..]);
                push(&mut work, nw, c.mul_ref(&f));
            }
        }
        done
    }
}

fn push<S: Scalar>(work: &mut BTreeMap<Vec<Letter>, S>, w: Vec<Letter>, c: S) {
    if c.is_zero() {
        return;
    }
    match work.get_mut(&w) {
        Some(v) => {
            *v = v.add_ref(&c);
            if v.is_zero() {
                work.remove(&w);
            }
        }
        None => {
            work.insert(w, c);
        }
    }
}

/// Normal form with the leftmost strategy.
pub fn normal_form<S: Scalar>(input: &WordSum<S>, params: &Params<S>) -> NormalElement<S> {
    Rewriter::new(params, Strategy::Leftmost).normal_form(input)
}

/// Normal form of a single word.
pub fn normal_form_word<S: Scalar>(w: &Word, params: &Params<S>) -> NormalElement<S> {
    normal_form(&WordSum::word(w.clone()), params)
}

/// Product of two normal elements, reduced to normal form.
pub fn multiply<S: Scalar>(
    u: &NormalElement<S>,
    v: &NormalElement<S>,
    params: &Params<S>,
) -> NormalElement<S> {
    let mut sum = WordSum::zero();
    for (m1, c1) in u.terms() {
        for (m2, c2) in v.terms() {
            sum.add_term(m1.to_word().concat(&m2.to_word()), c1.mul_ref(c2));
        }
    }
    normal_form(&sum, params)
}

/// `[u, v]_h = uv - h vu`.
pub fn h_commutator<S: Scalar>(
    u: &NormalElement<S>,
    v: &NormalElement<S>,
    h: &S,
    params: &Params<S>,
) -> NormalElement<S> {
    multiply(u, v, params).sub(&multiply(v, u, params).scale(h))
}

/// Normal form of `x` acting on the vacuum.
pub fn vacuum_action<S: Scalar>(x: &NormalElement<S>) -> NormalElement<S> {
    x.vacuum_action()
}
