use std::fmt;

use serde::Serialize;

use crate::rep::RepMatrix;
use crate::ring::{RingElem, RingError, Symbol};
use crate::scalar::Scalar;

use super::candidate::{MapCandidate, MomentumAnsatz};
use super::recomb::Recombination;
use super::CastellaniError;

/// Relation ids of the hatted algebra, in evaluation order.
pub const CHI_IDS: [&str; 7] = [
    "chi.plus-one",
    "chi.one-minus",
    "chi.plus-minus",
    "chi.plus-x",
    "chi.minus-x",
    "chi.one-two",
    "chi.x-equation",
];

/// Relation ids of the inhomogeneous extension, in evaluation order.
pub const IGL_IDS: [&str; 9] = [
    "igl.chi1-p1",
    "igl.chi2-p2",
    "igl.plus-p1",
    "igl.minus-p2",
    "igl.plus-p2",
    "igl.minus-p1",
    "igl.chi2-p1",
    "igl.chi1-p2",
    "igl.p1-p2",
];

/// How a candidate's combinations are fed to the hatted relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// Combinations are the hatted generators and `X` is given.
    Hatted,
    /// Combinations are unhatted; `X = (1-r²)χ₂ - r` and `χ̂ = X⁻¹χ`.
    Rescaled,
    /// Unhatted combinations used as hatted ones; only the `X`-free
    /// relations are evaluated.
    Verbatim,
}

impl Reading {
    pub fn default_for(c: &MapCandidate) -> Reading {
        if c.hatted {
            Reading::Hatted
        } else {
            Reading::Rescaled
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::Hatted => "hatted",
            Reading::Rescaled => "rescaled",
            Reading::Verbatim => "verbatim",
        })
    }
}

/// A candidate turned into 4×4 matrices.
#[derive(Clone, Debug)]
pub struct Realized<S> {
    pub rec: Recombination<S>,
    pub r: S,
    pub q: S,
    pub hatted: bool,
    pub chi_plus: RepMatrix<S>,
    pub chi_minus: RepMatrix<S>,
    pub chi1: RepMatrix<S>,
    pub chi2: RepMatrix<S>,
    pub x: Option<RepMatrix<S>>,
}

/// Realizes `cand`, converting each coefficient (after the `q` link) with
/// `conv`.
pub fn realize<S: Scalar>(
    cand: &MapCandidate,
    conv: &impl Fn(&RingElem) -> Result<S, RingError>,
) -> Result<Realized<S>, CastellaniError> {
    let q = match &cand.q_link {
        Some(l) => conv(l)?,
        None => conv(&RingElem::symbol(Symbol::Q))?,
    };
    let r = conv(&RingElem::symbol(Symbol::R))?;
    let rec = Recombination::new(q.clone())?;
    let full = |e: &RingElem| conv(&cand.coefficient(e)?);
    Ok(Realized {
        chi_plus: cand.chi_plus.realize(&rec, &full)?,
        chi_minus: cand.chi_minus.realize(&rec, &full)?,
        chi1: cand.chi1.realize(&rec, &full)?,
        chi2: cand.chi2.realize(&rec, &full)?,
        x: cand.x.as_ref().map(|x| x.realize(&rec, &full)).transpose()?,
        hatted: cand.hatted,
        rec,
        r,
        q,
    })
}

pub fn symbolic_realization(cand: &MapCandidate) -> Result<Realized<RingElem>, CastellaniError> {
    realize(cand, &|e: &RingElem| Ok(e.clone()))
}

fn r_pow<S: Scalar>(r: &S, k: i32) -> Result<S, CastellaniError> {
    r.powi(k).ok_or_else(|| CastellaniError::Singular("r = 0".into()))
}

/// Residues of the hatted relations under `reading`, as `(id, matrix)`.
pub fn chi_residues<S: Scalar>(
    real: &Realized<S>,
    reading: Reading,
) -> Result<Vec<(String, RepMatrix<S>)>, CastellaniError> {
    let r = &real.r;
    let r2 = r_pow(r, 2)?;
    let rm2 = r_pow(r, -2)?;
    let id = RepMatrix::identity(4);
    let (cp, cm, c1, c2, x) = match reading {
        Reading::Hatted => {
            if !real.hatted {
                return Err(CastellaniError::Unsupported("hatted reading of an unhatted candidate".into()));
            }
            let x = real
                .x
                .clone()
                .ok_or_else(|| CastellaniError::Unsupported("hatted candidate without X".into()))?;
            (
                real.chi_plus.clone(),
                real.chi_minus.clone(),
                real.chi1.clone(),
                real.chi2.clone(),
                Some(x),
            )
        }
        Reading::Rescaled => {
            if real.hatted {
                return Err(CastellaniError::Unsupported("rescaled reading of a hatted candidate".into()));
            }
            let x = real
                .chi2
                .scale(&S::one().sub_ref(&r2))
                .sub(&id.scale(r));
            let xi = x
                .inverse()
                .ok_or_else(|| CastellaniError::Singular("X is not invertible".into()))?;
            (
                xi.mul(&real.chi_plus),
                xi.mul(&real.chi_minus),
                xi.mul(&real.chi1),
                xi.mul(&real.chi2),
                Some(x),
            )
        }
        Reading::Verbatim => (
            real.chi_plus.clone(),
            real.chi_minus.clone(),
            real.chi1.clone(),
            real.chi2.clone(),
            None,
        ),
    };
    let mut out = vec![
        (CHI_IDS[0], cp.mul(&c1).sub(&c1.mul(&cp).scale(&rm2)).sub(&cp)),
        (CHI_IDS[1], c1.mul(&cm).sub(&cm.mul(&c1).scale(&rm2)).sub(&cm)),
        (
            CHI_IDS[2],
            cp.mul(&cm).scale(&r2).sub(&cm.mul(&cp).scale(&rm2)).sub(&c2.sub(&c1)),
        ),
    ];
    if let Some(x) = &x {
        out.push((CHI_IDS[3], cp.mul(x).sub(&x.mul(&cp).scale(&r2))));
        out.push((CHI_IDS[4], cm.mul(x).sub(&x.mul(&cm).scale(&rm2))));
    }
    out.push((CHI_IDS[5], c1.commutator(&c2)));
    if let Some(x) = &x {
        let one_minus = S::one().sub_ref(&r2);
        out.push((CHI_IDS[6], x.sub(&x.mul(&c2).scale(&one_minus)).add(&id.scale(r))));
    }
    Ok(out.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

/// Residues of the inhomogeneous relations. Hatted candidates are converted
/// with `χ = Xχ̂`.
pub fn igl_residues<S: Scalar>(
    real: &Realized<S>,
    cand: &MapCandidate,
    mom: &MomentumAnsatz,
    conv: &impl Fn(&RingElem) -> Result<S, RingError>,
) -> Result<Vec<(String, RepMatrix<S>)>, CastellaniError> {
    let (cp, cm, c1, c2) = if real.hatted {
        let x = real
            .x
            .as_ref()
            .ok_or_else(|| CastellaniError::Unsupported("hatted candidate without X".into()))?;
        (x.mul(&real.chi_plus), x.mul(&real.chi_minus), x.mul(&real.chi1), x.mul(&real.chi2))
    } else {
        (
            real.chi_plus.clone(),
            real.chi_minus.clone(),
            real.chi1.clone(),
            real.chi2.clone(),
        )
    };
    let full = |e: &RingElem| conv(&cand.coefficient(e)?);
    let del = |k: usize| if k == 1 { &real.rec.d1 } else { &real.rec.d2 };
    let p1 = mom.p1.realize(&real.rec, &full)?.mul(del(mom.p1_del));
    let p2 = mom.p2.realize(&real.rec, &full)?.mul(del(mom.p2_del));
    let s = full(&mom.s)?;
    let r = &real.r;
    let r2 = r_pow(r, 2)?;
    let rm2 = r_pow(r, -2)?;
    let r3 = r_pow(r, 3)?;
    let one = S::one();
    let r2m1 = r2.sub_ref(&one);
    let out = vec![
        c1.mul(&p1)
            .scale(&r2)
            .sub(&p1.mul(&c1))
            .sub(&p2.mul(&cm).scale(&one.sub_ref(&r2)).sub(&p1.scale(r))),
        c2.mul(&p2).scale(&r2).sub(&p2.mul(&c2)).add(&p2.scale(r)),
        cp.mul(&p1)
            .scale(&s)
            .sub(&p1.mul(&cp))
            .sub(&c2.mul(&p2).scale(&r2.mul_ref(&r2m1)).sub(&p2.scale(&r3))),
        cm.mul(&p2)
            .scale(&r2)
            .sub(&p2.mul(&cm).scale(&s))
            .sub(&c2.mul(&p1).scale(&s.mul_ref(&r2m1)).sub(&p1.scale(&s.mul_ref(r)))),
        cp.mul(&p2).scale(&s).sub(&p2.mul(&cp)),
        cm.mul(&p1).scale(&r2).sub(&p1.mul(&cm).scale(&s)),
        c2.commutator(&p1),
        c1.commutator(&p2)
            .sub(&cp.mul(&p1).scale(&one.sub_ref(&r2).mul_ref(&s).mul_ref(&rm2))),
        p1.mul(&p2).scale(&r2.sub_ref(&s)),
    ];
    Ok(IGL_IDS.iter().map(|k| k.to_string()).zip(out).collect())
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::castellani::candidate::{duality_transform, family_b_with, solve_family_a, SignConvention};
    use crate::castellani::recomb::Combo;
    use crate::ring::{rat, Bindings};

    fn nonzero(res: &[(String, RepMatrix<RingElem>)]) -> Vec<String> {
        res.iter().filter(|(_, m)| !m.is_zero()).map(|(k, _)| k.clone()).collect()
    }

    #[test]
    fn family_b_rescaled_chi_relations_vanish() {
        let zero = RingElem::zero();
        let cand = family_b_with(&zero, &zero).unwrap();
        let real = symbolic_realization(&cand).unwrap();
        let res = chi_residues(&real, Reading::Rescaled).unwrap();
        assert_eq!(res.len(), 7);
        assert!(nonzero(&res).is_empty(), "{:?}", nonzero(&res));
    }

    #[test]
    fn family_b_verbatim_is_informational_only() {
        let zero = RingElem::zero();
        let cand = family_b_with(&zero, &zero).unwrap();
        let real = symbolic_realization(&cand).unwrap();
        let res = chi_residues(&real, Reading::Verbatim).unwrap();
        assert_eq!(res.len(), 4);
        assert!(!nonzero(&res).is_empty());
    }

    #[test]
    fn family_b_igl_has_exactly_two_failures() {
        let zero = RingElem::zero();
        let cand = family_b_with(&zero, &zero).unwrap();
        let conv = |e: &RingElem| Ok(e.clone());
        let real = realize(&cand, &conv).unwrap();
        let res = igl_residues(&real, &cand, &MomentumAnsatz::family_b(), &conv).unwrap();
        assert_eq!(nonzero(&res), vec!["igl.minus-p2".to_string(), "igl.p1-p2".to_string()]);
    }

    #[test]
    fn dual_rescaled_chi_relations_vanish() {
        let zero = RingElem::zero();
        let cand = duality_transform(&family_b_with(&zero, &zero).unwrap()).unwrap();
        let real = symbolic_realization(&cand).unwrap();
        let res = chi_residues(&real, Reading::Rescaled).unwrap();
        assert!(nonzero(&res).is_empty(), "{:?}", nonzero(&res));
    }

    #[test]
    fn zero_candidate_is_degenerate_solution() {
        let r = RingElem::symbol(Symbol::R);
        let cand = MapCandidate {
            family: crate::castellani::Family::A,
            hatted: true,
            chi_plus: Combo::zero(),
            chi_minus: Combo::zero(),
            chi1: Combo::zero(),
            chi2: Combo::zero(),
            x: Some(Combo::of(&[(crate::castellani::Basis::I, -&r)])),
            q_link: None,
            bindings: Default::default(),
            constraint: None,
        };
        let real = symbolic_realization(&cand).unwrap();
        assert!(nonzero(&chi_residues(&real, Reading::Hatted).unwrap()).is_empty());
    }

    fn family_a_point(sign: SignConvention) -> Vec<String> {
        let a = RingElem::symbol(Symbol::A);
        let c = RingElem::symbol(Symbol::C);
        let cand = solve_family_a(&a, &c, sign).unwrap();
        let mut b = Bindings::new();
        b.insert(Symbol::A, rat(2, 3));
        b.insert(Symbol::C, rat(-5, 7));
        b.insert(Symbol::Q, rat(3, 4));
        b.insert(Symbol::R, rat(5, 2));
        let real = realize(&cand, &|e: &RingElem| e.eval(&b)).unwrap();
        chi_residues(&real, Reading::Hatted)
            .unwrap()
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    #[test]
    fn family_a_printed_signs_break_only_the_x_equation() {
        assert_eq!(family_a_point(SignConvention::Printed), vec!["chi.x-equation".to_string()]);
        assert!(family_a_point(SignConvention::Corrected).is_empty());
    }

    #[test]
    fn family_a_x_free_relations_symbolic() {
        let a = RingElem::symbol(Symbol::A);
        let c = RingElem::symbol(Symbol::C);
        let mut cand = solve_family_a(&a, &c, SignConvention::Corrected).unwrap();
        // X-free relations only involve r, q, a, c.
        cand.x = None;
        let real = symbolic_realization(&cand).unwrap();
        let res = chi_residues(&real, Reading::Verbatim).unwrap();
        assert!(res.iter().all(|(_, m)| m.is_zero()));
    }
}
