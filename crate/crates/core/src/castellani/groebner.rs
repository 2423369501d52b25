//! Buchberger's algorithm over the rationals in graded reverse
//! lexicographic order. Used to decide whether a polynomial system in the
//! momentum ansatz unknowns is consistent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::ring::{Rational, RingElem, Symbol};

use super::CastellaniError;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Mono(Vec<u32>);

impl Mono {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with rational coefficients in a fixed list of variables.
#[derive(Clone, Debug, PartialEq)]
pub struct GbPoly {
    vars: Vec<Symbol>,
    terms: BTreeMap<Mono, Rational>,
}

impl GbPoly {
    pub fn zero(vars: &[Symbol]) -> Self {
        GbPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// Numerator of `e` as a polynomial in `vars`. Every other symbol must
    /// already be bound.
    pub fn from_ring(e: &RingElem, vars: &[Symbol]) -> Result<Self, CastellaniError> {
        let mut p = GbPoly::zero(vars);
        for (m, c) in e.numerator().terms() {
            let mut exps = vec![0u32; vars.len()];
            for (sym, k) in m.symbols() {
                let Some(pos) = vars.iter().position(|v| *v == sym) else {
                    return Err(CastellaniError::Unsupported(format!("unexpected symbol {sym}")));
                };
                exps[pos] = u32::try_from(k)
                    .map_err(|_| CastellaniError::Unsupported(format!("negative power of {sym}")))?;
            }
            p.add_term(Mono(exps), c.clone());
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Mono, c: Rational) {
        let sum = match self.terms.remove(&m) {
            Some(v) => v + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.last_key_value()
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.leading() {
            let inv = c.recip();
            for v in self.terms.values_mut() {
                *v = &*v * &inv;
            }
        }
        self
    }

    /// `self - c·m·g`
    fn sub_mul(&mut self, c: &Rational, m: &Mono, g: &GbPoly) {
        for (gm, gc) in &g.terms {
            self.add_term(gm.mul(m), -(c * gc));
        }
    }

    fn reduce(&self, basis: &[GbPoly]) -> GbPoly {
        let mut rem = GbPoly::zero(&self.vars);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let divisor = basis
                .iter()
                .find(|g| g.leading().is_some_and(|(gm, _)| gm.divides(&m)));
            match divisor {
                Some(g) => {
                    let (gm, gc) = g.leading().expect("nonzero");
                    let q = m.div(gm);
                    p.sub_mul(&(&c / gc), &q, g);
                }
                None => {
                    p.terms.remove(&m);
                    rem.add_term(m, c);
                }
            }
        }
        rem
    }

    fn s_poly(&self, other: &GbPoly) -> GbPoly {
        let (fm, fc) = self.leading().expect("nonzero");
        let (gm, gc) = other.leading().expect("nonzero");
        let l = fm.lcm(gm);
        let mut s = GbPoly::zero(&self.vars);
        s.sub_mul(&-fc.recip(), &l.div(fm), self);
        s.sub_mul(&gc.recip(), &l.div(gm), other);
        s
    }
}

impl fmt::Display for GbPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (v, k) in self.vars.iter().zip(&m.0) {
                match k {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    _ => factors.push(format!("{}^{k}", v.name())),
                }
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub polys: Vec<GbPoly>,
}

impl GroebnerBasis {
    pub fn compute(input: &[GbPoly]) -> GroebnerBasis {
        let mut g: Vec<GbPoly> = Vec::new();
        for p in input {
            let h = p.reduce(&g);
            if !h.is_zero() {
                if h.is_unit() {
                    return GroebnerBasis::unit(&h.vars);
                }
                g.push(h.monic());
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..g.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        while let Some((i, j)) = pairs.pop() {
            let (fm, _) = g[i].leading().expect("nonzero");
            let (gm, _) = g[j].leading().expect("nonzero");
            if fm.coprime(gm) {
                continue;
            }
            let h = g[i].s_poly(&g[j]).reduce(&g);
            if h.is_zero() {
                continue;
            }
            if h.is_unit() {
                return GroebnerBasis::unit(&h.vars);
            }
            let k = g.len();
            g.push(h.monic());
            for i in 0..k {
                pairs.push((i, k));
            }
        }
        GroebnerBasis { polys: interreduce(g) }
    }

    fn unit(vars: &[Symbol]) -> GroebnerBasis {
        let mut one = GbPoly::zero(vars);
        one.add_term(Mono(vec![0; vars.len()]), Rational::one());
        GroebnerBasis { polys: vec![one] }
    }

    /// The ideal is the whole ring: the system has no solution.
    pub fn is_trivial(&self) -> bool {
        self.polys.iter().any(GbPoly::is_unit)
    }
}

fn interreduce(mut g: Vec<GbPoly>) -> Vec<GbPoly> {
    // Drop elements whose leading monomial is divisible by another's.
    let mut minimal: Vec<GbPoly> = Vec::new();
    g.sort_by(|a, b| a.leading().expect("nonzero").0.cmp(b.leading().expect("nonzero").0));
    for p in g {
        let lm = p.leading().expect("nonzero").0.clone();
        if !minimal
            .iter()
            .any(|q| q.leading().expect("nonzero").0.divides(&lm))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<GbPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let (lm, lc) = minimal[i].leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let mut tail = minimal[i].clone();
        tail.terms.remove(&lm);
        let mut red = tail.reduce(&others);
        red.add_term(lm, lc);
        out.push(red.monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const V: [Symbol; 2] = [Symbol::Lambda, Symbol::Nu];

    fn p(text: &str) -> GbPoly {
        let e: RingElem = text.replace('x', "lam").replace('y', "nu").parse().unwrap();
        GbPoly::from_ring(&e, &V).unwrap()
    }

    #[test]
    fn inconsistent_system_is_trivial() {
        let gb = GroebnerBasis::compute(&[p("x^2 - 1"), p("x - 2")]);
        assert!(gb.is_trivial());
        let gb = GroebnerBasis::compute(&[p("x*y - 1"), p("x"), p("y + 3")]);
        assert!(gb.is_trivial());
    }

    #[test]
    fn consistent_system_has_reduced_basis() {
        let gb = GroebnerBasis::compute(&[p("x*y - 1"), p("y - x")]);
        assert!(!gb.is_trivial());
        let texts: Vec<String> = gb.polys.iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["lam - nu".to_string(), "nu^2 - 1".to_string()]);
    }

    #[test]
    fn grevlex_order() {
        assert!(Mono(vec![1, 2]) > Mono(vec![2, 0]));
        assert!(Mono(vec![1, 1]) > Mono(vec![0, 2]));
        assert!(Mono(vec![2, 0]) > Mono(vec![1, 1]));
    }

    #[test]
    fn foreign_symbols_rejected() {
        let e: RingElem = "lam + q".parse().unwrap();
        assert!(GbPoly::from_ring(&e, &V).is_err());
    }
}
