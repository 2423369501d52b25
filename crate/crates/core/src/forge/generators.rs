use std::collections::BTreeMap;

use crate::algebra::{AlgebraContext, Letter, Mode, NormalElement, NormalMonomial, Params};
use crate::rep::{del_matrix, dressed_letters, theta_matrix, DressedQuadruple, RepMatrix};
use crate::ring::RingElem;
use crate::scalar::Scalar;

use super::ForgeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Gl,
    Igl,
}

/// Generators of the deformed `gl(n)` (and `igl(n)`) as matrices on the
/// Grassmann module, together with the letters they act on.
#[derive(Clone, Debug)]
pub struct GeneratorSet<S> {
    params: Params<S>,
    kind: SetKind,
    thetas: Vec<RepMatrix<S>>,
    dels: Vec<RepMatrix<S>>,
    dressed: Vec<DressedQuadruple<S>>,
    t: BTreeMap<(usize, usize), RepMatrix<S>>,
    h: Vec<RepMatrix<S>>,
    d: RepMatrix<S>,
}

impl<S: Scalar> GeneratorSet<S> {
    pub fn build(params: Params<S>, kind: SetKind) -> Result<Self, ForgeError> {
        let n = params.n();
        if n < 2 {
            return Err(ForgeError::Dimension(n));
        }
        let thetas = (1..=n)
            .map(|a| theta_matrix(a, &params))
            .collect::<Result<Vec<_>, _>>()?;
        let dels = (1..=n)
            .map(|a| del_matrix(a, &params))
            .collect::<Result<Vec<_>, _>>()?;
        let dressed = (1..n)
            .map(|a| dressed_letters(a, &params))
            .collect::<Result<Vec<_>, _>>()?;

        let mut t = BTreeMap::new();
        let mut h = Vec::new();
        for (i, q) in dressed.iter().enumerate() {
            let a = i + 1;
            t.insert((a, a + 1), q.theta_a.mul(&q.del_b));
            t.insert((a + 1, a), q.theta_b.mul(&q.del_a));
            let cartan = q
                .theta_b
                .mul(&q.del_b)
                .scale(params.r_inv())
                .sub(&q.theta_a.mul(&q.del_a).scale(params.r()));
            h.push(cartan);
        }
        for gap in 2..n {
            for a in 1..=n - gap {
                let g = a + gap;
                let up = t[&(a, a + 1)].h_commutator(&t[&(a + 1, g)], params.r());
                t.insert((a, g), up);
                let down = t[&(g, g - 1)].h_commutator(&t[&(g - 1, a)], params.r());
                t.insert((g, a), down);
            }
        }

        let mut d = RepMatrix::zeros(params.ctx().dim());
        for (th, de) in thetas.iter().zip(dels.iter()) {
            d = d.add(&th.mul(de));
        }
        let d = d.scale(params.r_inv());

        Ok(GeneratorSet {
            params,
            kind,
            thetas,
            dels,
            dressed,
            t,
            h,
            d,
        })
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn theta(&self, a: usize) -> &RepMatrix<S> {
        &self.thetas[a - 1]
    }

    pub fn del(&self, a: usize) -> &RepMatrix<S> {
        &self.dels[a - 1]
    }

    pub fn letter(&self, l: Letter) -> &RepMatrix<S> {
        match l {
            Letter::Theta(a) => self.theta(a),
            Letter::Del(a) => self.del(a),
        }
    }

    /// Dressed letters of the block `(a, a+1)`.
    pub fn dressed(&self, a: usize) -> &DressedQuadruple<S> {
        &self.dressed[a - 1]
    }

    /// `T^a_g` for `a ≠ g`.
    pub fn t(&self, a: usize, g: usize) -> &RepMatrix<S> {
        &self.t[&(a, g)]
    }

    pub fn h(&self, a: usize) -> &RepMatrix<S> {
        &self.h[a - 1]
    }

    pub fn dilatation(&self) -> &RepMatrix<S> {
        &self.d
    }

    /// `[T^a_b, T^b_g]_r` for an arbitrary intermediate `b`.
    pub fn t_via(&self, a: usize, b: usize, g: usize) -> RepMatrix<S> {
        self.t(a, b).h_commutator(self.t(b, g), self.params.r())
    }

    /// Generator names: `T<a><g>`, `H<a>`, `D`, `th<a>`, `d<a>`.
    pub fn names(&self) -> Vec<String> {
        let n = self.n();
        let mut out: Vec<String> = self.t.keys().map(|(a, g)| format!("T{a}{g}")).collect();
        out.extend((1..n).map(|a| format!("H{a}")));
        out.push("D".into());
        out.extend((1..=n).map(|a| format!("th{a}")));
        out.extend((1..=n).map(|a| format!("d{a}")));
        out
    }

    pub fn get(&self, name: &str) -> Result<&RepMatrix<S>, ForgeError> {
        let n = self.n();
        let unknown = || ForgeError::UnknownGenerator(name.to_string());
        let digits = |s: &str| -> Option<Vec<usize>> {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        if name == "D" {
            return Ok(&self.d);
        }
        if let Some(rest) = name.strip_prefix("th") {
            return match digits(rest).as_deref() {
                Some([a]) if (1..=n).contains(a) => Ok(self.theta(*a)),
                _ => Err(unknown()),
            };
        }
        if let Some(rest) = name.strip_prefix('d') {
            return match digits(rest).as_deref() {
                Some([a]) if (1..=n).contains(a) => Ok(self.del(*a)),
                _ => Err(unknown()),
            };
        }
        if let Some(rest) = name.strip_prefix('H') {
            return match digits(rest).as_deref() {
                Some([a]) if (1..n).contains(a) => Ok(self.h(*a)),
                _ => Err(unknown()),
            };
        }
        if let Some(rest) = name.strip_prefix('T') {
            return match digits(rest).as_deref() {
                Some([a, g]) => self.t.get(&(*a, *g)).ok_or_else(unknown),
                _ => Err(unknown()),
            };
        }
        Err(unknown())
    }
}

pub fn build_gl(n: usize, mode: Mode) -> Result<GeneratorSet<RingElem>, ForgeError> {
    let ctx = AlgebraContext::new(n, mode)?;
    GeneratorSet::build(Params::symbolic(ctx), SetKind::Gl)
}

pub fn build_igl(n: usize, mode: Mode) -> Result<GeneratorSet<RingElem>, ForgeError> {
    let ctx = AlgebraContext::new(n, mode)?;
    GeneratorSet::build(Params::symbolic(ctx), SetKind::Igl)
}

/// Polynomial realizations for `n = 2`.
#[derive(Clone, Debug)]
pub struct NormalForms<S> {
    pub t12: NormalElement<S>,
    pub t21: NormalElement<S>,
    pub h1: NormalElement<S>,
    pub d: NormalElement<S>,
}

impl<S: Scalar> NormalForms<S> {
    pub fn new(params: &Params<S>) -> Result<Self, ForgeError> {
        if params.n() != 2 {
            return Err(ForgeError::Dimension(params.n()));
        }
        let m = |t: &[usize], d: &[usize]| NormalMonomial::new(t, d);
        let t12 = NormalElement::term(m(&[1], &[2]), S::one());
        let t21 = NormalElement::term(m(&[2], &[1]), S::one());
        let mut h1 = NormalElement::zero();
        h1.add_term(m(&[2], &[2]), params.r_inv().clone());
        h1.add_term(m(&[1], &[1]), params.r().neg_ref());
        let mut d = NormalElement::zero();
        d.add_term(m(&[1], &[1]), params.r_inv().clone());
        d.add_term(m(&[2], &[2]), params.r_inv().clone());
        Ok(NormalForms { t12, t21, h1, d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::matrix_of;
    use crate::ring::Symbol;

    fn r() -> RingElem {
        RingElem::symbol(Symbol::R)
    }

    #[test]
    fn two_dimensional_matrices() {
        let gs = build_gl(2, Mode::OneParam).unwrap();
        let rinv = RingElem::monomial(Symbol::R, -1);
        let h = RepMatrix::diagonal(vec![RingElem::int(0), -r(), rinv.clone(), RingElem::int(0)]);
        assert_eq!(*gs.h(1), h);
        let top = &rinv * &(&RingElem::int(1) + &RingElem::monomial(Symbol::R, -2));
        let d = RepMatrix::diagonal(vec![RingElem::int(0), rinv.clone(), rinv, top]);
        assert_eq!(*gs.dilatation(), d);
    }

    #[test]
    fn normal_forms_agree_with_matrices() {
        for mode in [Mode::OneParam, Mode::TwoParam] {
            let gs = build_gl(2, mode).unwrap();
            let nf = NormalForms::new(gs.params()).unwrap();
            let p = gs.params();
            assert_eq!(matrix_of(&nf.t12, p).unwrap(), *gs.t(1, 2));
            assert_eq!(matrix_of(&nf.t21, p).unwrap(), *gs.t(2, 1));
            assert_eq!(matrix_of(&nf.h1, p).unwrap(), *gs.h(1));
            assert_eq!(matrix_of(&nf.d, p).unwrap(), *gs.dilatation());
        }
    }

    #[test]
    fn recursive_generator_n3() {
        let gs = build_gl(3, Mode::OneParam).unwrap();
        let direct = gs.t(1, 2).h_commutator(gs.t(2, 3), &r());
        assert_eq!(*gs.t(1, 3), direct);
        assert_eq!(gs.get("T13").unwrap(), &direct);
    }

    #[test]
    fn lookup_by_name() {
        let gs = build_gl(3, Mode::OneParam).unwrap();
        assert!(gs.get("H2").is_ok());
        assert!(gs.get("H3").is_err());
        assert!(gs.get("T11").is_err());
        assert!(gs.get("th4").is_err());
        assert!(gs.get("X").is_err());
        assert_eq!(gs.names().len(), 6 + 2 + 1 + 3 + 3);
    }

    #[test]
    fn dimension_one_rejected() {
        assert!(build_gl(1, Mode::OneParam).is_err());
    }
}
