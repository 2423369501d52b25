use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

use super::word::{Letter, Word};

/// Normal-ordered monomial `θ^{i1}…θ^{ik} ∂_{j1}…∂_{jm}` with ascending
/// indices, stored as two bitmasks (bit `i-1` for index `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct NormalMonomial {
    pub theta: u32,
    pub del: u32,
}

fn indices(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
}

impl NormalMonomial {
    pub fn identity() -> Self {
        NormalMonomial { theta: 0, del: 0 }
    }

    pub fn new(theta: &[usize], del: &[usize]) -> Self {
        let mask = |v: &[usize]| v.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
        NormalMonomial {
            theta: mask(theta),
            del: mask(del),
        }
    }

    pub fn theta_indices(&self) -> Vec<usize> {
        indices(self.theta).collect()
    }

    pub fn del_indices(&self) -> Vec<usize> {
        indices(self.del).collect()
    }

    pub fn degree(&self) -> u32 {
        self.theta.count_ones() + self.del.count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.theta == 0 && self.del == 0
    }

    pub fn max_index(&self) -> usize {
        let m = self.theta | self.del;
        (32 - m.leading_zeros()) as usize
    }

    pub fn to_word(&self) -> Word {
        let mut v: Vec<Letter> = self.theta_indices().into_iter().map(Letter::Theta).collect();
        v.extend(self.del_indices().into_iter().map(Letter::Del));
        Word(v)
    }

    /// Reads a word that is already in normal order.
    pub fn from_normal_word(w: &Word) -> Option<Self> {
        let mut m = NormalMonomial::identity();
        let mut last_theta = 0;
        let mut last_del = 0;
        let mut seen_del = false;
        for l in w.letters() {
            match *l {
                Letter::Theta(i) => {
                    if seen_del || i <= last_theta {
                        return None;
                    }
                    last_theta = i;
                    m.theta |= 1 << (i - 1);
                }
                Letter::Del(i) => {
                    if i <= last_del {
                        return None;
                    }
                    seen_del = true;
                    last_del = i;
                    m.del |= 1 << (i - 1);
                }
            }
        }
        Some(m)
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.theta_indices().cmp(&other.theta_indices()))
            .then_with(|| self.del_indices().cmp(&other.del_indices()))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Finite linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct NormalElement<S> {
    terms: BTreeMap<NormalMonomial, S>,
}

impl<S: Scalar> NormalElement<S> {
    pub fn zero() -> Self {
        NormalElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::term(NormalMonomial::identity(), c)
    }

    pub fn term(m: NormalMonomial, c: S) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn theta(i: usize) -> Self {
        Self::term(NormalMonomial::new(&[i], &[]), S::one())
    }

    pub fn del(i: usize) -> Self {
        Self::term(NormalMonomial::new(&[], &[i]), S::one())
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(|m| m.max_index()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(*m, c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (m, v) in self.terms.iter() {
            out.add_term(*m, v.mul_ref(c));
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> NormalElement<T> {
        let mut out = NormalElement::zero();
        for (m, v) in self.terms.iter() {
            out.add_term(*m, f(v));
        }
        out
    }

    /// Action on the Grassmann vacuum: drop every monomial carrying a
    /// derivative.
    pub fn vacuum_action(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms.iter() {
            if m.del == 0 {
                out.add_term(*m, c.clone());
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for NormalElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let single = self.terms.len() == 1;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = term_text(m, c, single);
            if i == 0 {
                f.write_str(&text)?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {text}")?;
            }
        }
        Ok(())
    }
}

fn is_compound(text: &str) -> bool {
    // A coefficient is a single product when no top-level sum or fraction
    // bar appears after its leading sign.
    let body = text.strip_prefix('-').unwrap_or(text);
    body.contains(" + ") || body.contains(" - ") || body.contains('/') && body.contains('(')
}

fn term_text<S: Scalar>(m: &NormalMonomial, c: &S, single: bool) -> String {
    let ct = c.to_text();
    if m.is_identity() {
        if single || !is_compound(&ct) {
            return ct;
        }
        return format!("({ct})");
    }
    if c.is_one() {
        return m.to_string();
    }
    if c.neg_ref().is_one() {
        return format!("-{m}");
    }
    if is_compound(&ct) {
        format!("({ct})*{m}")
    } else {
        format!("{ct}*{m}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RingElem, Symbol};

    #[test]
    fn monomial_order_and_display() {
        let mut e: NormalElement<RingElem> = NormalElement::zero();
        let rinv2m1 = &RingElem::monomial(Symbol::R, -2) - &RingElem::int(1);
        e.add_term(NormalMonomial::new(&[2], &[2]), rinv2m1);
        e.add_term(NormalMonomial::new(&[1], &[1]), RingElem::int(-1));
        e.add_term(NormalMonomial::identity(), RingElem::int(1));
        assert_eq!(e.to_string(), "1 - th1*d1 + (r^-2 - 1)*th2*d2");
        assert_eq!(e.vacuum_action().to_string(), "1");
    }

    #[test]
    fn single_coefficient_term() {
        let c = -&RingElem::monomial(Symbol::Q, -1);
        let e = NormalElement::term(NormalMonomial::new(&[1], &[2]), c);
        assert_eq!(e.to_string(), "-q^-1*th1*d2");
    }

    #[test]
    fn vacuum_drops_derivative_terms() {
        let e: NormalElement<RingElem> =
            NormalElement::term(NormalMonomial::new(&[1, 2], &[2]), RingElem::int(1));
        assert!(e.vacuum_action().is_zero());
    }

    #[test]
    fn normal_word_detection() {
        let w = Word(vec![Letter::Theta(1), Letter::Theta(3), Letter::Del(2)]);
        assert_eq!(
            NormalMonomial::from_normal_word(&w),
            Some(NormalMonomial::new(&[1, 3], &[2]))
        );
        let bad = Word(vec![Letter::Del(1), Letter::Theta(1)]);
        assert_eq!(NormalMonomial::from_normal_word(&bad), None);
    }
}
