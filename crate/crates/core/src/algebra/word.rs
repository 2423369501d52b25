use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A single generator of the quantum space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Theta(usize),
    Del(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Theta(i) | Letter::Del(i) => i,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Theta(i) => write!(f, "th{i}"),
            Letter::Del(i) => write!(f, "d{i}"),
        }
    }
}

/// Free product of letters, not yet ordered. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Linear combination of words.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct WordSum<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> WordSum<S> {
    pub fn zero() -> Self {
        WordSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: S) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient when this is a pure scalar (only the empty word).
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (w, v) in self.terms.iter() {
            out.add_term(w.clone(), v.mul_ref(c));
        }
        out
    }

    /// Concatenation product (no reordering).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in self.terms.iter() {
            for (w2, c2) in other.terms.iter() {
                out.add_term(w1.concat(w2), c1.mul_ref(c2));
            }
        }
        out
    }
}

impl<S: Scalar> From<Word> for WordSum<S> {
    fn from(w: Word) -> Self {
        WordSum::word(w)
    }
}
