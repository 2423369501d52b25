use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::ring::{Bindings, Rational, RingElem, RingError, Symbol};
use crate::scalar::Scalar;

/// Dense square matrix acting on the Grassmann module.
///
/// Entry `(i, j)` is the coefficient of basis state `i` in the image of
/// basis state `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> RepMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        RepMatrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        RepMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.entries.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn diagonal_entries(&self) -> Vec<S> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, S)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        RepMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub_ref(b))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg_ref())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zeros(self.dim);
        }
        self.map(|v| v.mul_ref(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = out.entries[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    /// `[self, other]_h = self·other − h·other·self`.
    pub fn h_commutator(&self, other: &Self, h: &S) -> Self {
        self.mul(other).sub(&other.mul(self).scale(h))
    }

    /// Plain commutator.
    pub fn commutator(&self, other: &Self) -> Self {
        self.h_commutator(other, &S::one())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RepMatrix<T> {
        RepMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<RepMatrix<T>, E> {
        Ok(RepMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(pivot * n + j, col * n + j);
                    inv.entries.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).try_inv()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul_ref(&p));
                inv.set(col, j, inv.get(col, j).mul_ref(&p));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j).sub_ref(&f.mul_ref(a.get(col, j))));
                    inv.set(r, j, inv.get(r, j).sub_ref(&f.mul_ref(inv.get(col, j))));
                }
            }
        }
        Some(inv)
    }

    /// JSON form `{ "n", "basisOrder", "entries" }`.
    pub fn to_json(&self) -> Value {
        let n = self.dim.trailing_zeros();
        let entries: Vec<Vec<String>> = self
            .entries
            .chunks(self.dim)
            .map(|row| row.iter().map(|v| v.to_text()).collect())
            .collect();
        json!({
            "n": n,
            "basisOrder": "subset-bitmask ascending",
            "entries": entries,
        })
    }
}

impl RepMatrix<RingElem> {
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.entries.iter().flat_map(|v| v.symbols()).collect()
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.entries.iter().any(|v| v.contains(sym))
    }

    pub fn substitute(&self, bindings: &Bindings) -> Result<Self, RingError> {
        self.try_map(|v| v.substitute(bindings))
    }

    pub fn substitute_symbol(&self, sym: Symbol, value: &RingElem) -> Result<Self, RingError> {
        self.try_map(|v| v.substitute_symbol(sym, value))
    }

    /// Evaluates every entry at a fully bound point.
    pub fn eval(&self, bindings: &Bindings) -> Result<RepMatrix<Rational>, RingError> {
        self.try_map(|v| v.eval(bindings))
    }
}

impl<S: Scalar> fmt::Display for RepMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|v| v.to_text()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
