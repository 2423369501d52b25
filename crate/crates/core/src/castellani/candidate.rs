use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::ring::{RingElem, RingError, Symbol};

use super::recomb::{Basis, Combo};
use super::CastellaniError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    A,
    B,
    /// Image of family B under the duality.
    Dual,
    /// Image of family A under the duality.
    DualA,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::Dual => "duality",
            Family::DualA => "duality-A",
        })
    }
}

impl Family {
    fn dual(self) -> Family {
        match self {
            Family::A => Family::DualA,
            Family::DualA => Family::A,
            Family::B => Family::Dual,
            Family::Dual => Family::B,
        }
    }
}

/// Sign of `x` and `y` in the family A bindings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// `x = r/(1-(1-r^2)a)`, `y = r^3/(1-(1-r^2)a)`
    Printed,
    /// `x` and `y` negated; the X-equation then holds.
    Corrected,
}

fn r() -> RingElem {
    RingElem::symbol(Symbol::R)
}

fn rp(k: i32) -> RingElem {
    RingElem::monomial(Symbol::R, k)
}

fn qp(k: i32) -> RingElem {
    RingElem::monomial(Symbol::Q, k)
}

/// Candidate images of Castellani's generators.
///
/// Coefficients are rational functions in `r`, `q` and the map parameters.
/// When `q_link` is set, `q` is bound to that function of `r` before
/// anything is evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct MapCandidate {
    pub family: Family,
    /// Whether the combinations are the hatted generators.
    pub hatted: bool,
    pub chi_plus: Combo,
    pub chi_minus: Combo,
    pub chi1: Combo,
    pub chi2: Combo,
    pub x: Option<Combo>,
    pub q_link: Option<RingElem>,
    pub bindings: BTreeMap<String, RingElem>,
    /// Residual of a parameter constraint that had to be imposed on `q`.
    pub constraint: Option<RingElem>,
}

impl MapCandidate {
    /// Coefficient with the `q` link applied.
    pub fn coefficient(&self, e: &RingElem) -> Result<RingElem, RingError> {
        match &self.q_link {
            Some(l) => e.substitute_symbol(Symbol::Q, l),
            None => Ok(e.clone()),
        }
    }

    fn combos(&self) -> Vec<&Combo> {
        let mut v = vec![&self.chi_plus, &self.chi_minus, &self.chi1, &self.chi2];
        if let Some(x) = &self.x {
            v.push(x);
        }
        v
    }

    /// Symbols the realized candidate depends on (after the `q` link);
    /// always includes `r`.
    pub fn symbols(&self) -> Result<Vec<Symbol>, RingError> {
        let mut out = std::collections::BTreeSet::new();
        out.insert(Symbol::R);
        if self.q_link.is_none() {
            out.insert(Symbol::Q);
        }
        for c in self.combos() {
            for (_, v) in c.terms() {
                out.extend(self.coefficient(v)?.symbols());
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Same map, ignoring recorded bindings.
    pub fn same_map(&self, other: &MapCandidate) -> bool {
        self.hatted == other.hatted
            && self.chi_plus == other.chi_plus
            && self.chi_minus == other.chi_minus
            && self.chi1 == other.chi1
            && self.chi2 == other.chi2
            && self.x == other.x
            && self.q_link == other.q_link
    }

    pub fn describe(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        out.insert("family".into(), self.family.to_string());
        out.insert("chiPlus".into(), self.chi_plus.to_string());
        out.insert("chiMinus".into(), self.chi_minus.to_string());
        out.insert("chi1".into(), self.chi1.to_string());
        out.insert("chi2".into(), self.chi2.to_string());
        if let Some(x) = &self.x {
            out.insert("X".into(), x.to_string());
        }
        if let Some(l) = &self.q_link {
            out.insert("q".into(), l.to_string());
        }
        if let Some(c) = &self.constraint {
            out.insert("constraint".into(), format!("{} = 0", c.constraint_polynomial()));
        }
        for (k, v) in &self.bindings {
            out.insert(format!("binding.{k}"), v.to_string());
        }
        out
    }
}

/// Solves `f(t) = 0` for `t`, where `f` is affine in `t`.
fn solve_linear(
    f: impl Fn(&RingElem) -> Result<RingElem, RingError>,
    what: &str,
) -> Result<RingElem, CastellaniError> {
    let f0 = f(&RingElem::zero())?;
    let slope = &f(&RingElem::one())? - &f0;
    if slope.is_zero() {
        return Err(CastellaniError::Singular(format!("coefficient of {what} vanishes identically")));
    }
    Ok((-&f0).checked_div(&slope)?)
}

/// Family A with `χ̂₊ = T21`, `χ̂₋ = T12`, for given (possibly symbolic)
/// `a` and `c`.
pub fn solve_family_a(a: &RingElem, c: &RingElem, sign: SignConvention) -> Result<MapCandidate, CastellaniError> {
    let r = r();
    let r2 = rp(2);
    let one = RingElem::one();
    let den = &one - &(&(&one - &r2) * a);
    if den.is_zero() {
        return Err(CastellaniError::Singular("1 - (1 - r^2) a vanishes".into()));
    }
    let sigma = match sign {
        SignConvention::Printed => one.clone(),
        SignConvention::Corrected => -&one,
    };
    let b = (a - &one).checked_div(&r2)?;
    let x = (&sigma * &r).checked_div(&den)?;
    let y = (&sigma * &rp(3)).checked_div(&den)?;
    let one_minus_r2 = &one - &r2;
    let z = solve_linear(
        |z| {
            let lhs = (&(z - &r) - &y).checked_div(&one_minus_r2)?;
            let inner = a + &(&qp(-2) * &(&b + c));
            let rhs = &(&(z * &inner) + &(&(&x - &y) * &b)) + &(&x * c);
            Ok(&lhs - &rhs)
        },
        "z",
    )?;
    Ok(family_a_from(a, &b, c, &x, &y, &z))
}

/// Family A assembled from explicit values of all six parameters.
pub fn family_a_from(
    a: &RingElem,
    b: &RingElem,
    c: &RingElem,
    x: &RingElem,
    y: &RingElem,
    z: &RingElem,
) -> MapCandidate {
    let r = r();
    let r2 = rp(2);
    let one = RingElem::one();
    let chi2 = Combo::of(&[(Basis::A, a.clone()), (Basis::B, b.clone()), (Basis::AB, c.clone())]);
    let chi1 = Combo::of(&[
        (Basis::A, a - &r2),
        (Basis::B, b + &rp(-2)),
        (Basis::AB, &(c + &(&r2 * &qp(2))) - &rp(-2)),
    ]);
    let xc = Combo::of(&[
        (Basis::A, x + &r),
        (Basis::B, y + &r),
        (Basis::AB, &(z - &r) - y),
        (Basis::I, -&r),
    ]);
    let mut bindings = BTreeMap::new();
    for (k, v) in [("a", a), ("b", b), ("c", c), ("x", x), ("y", y), ("z", z)] {
        bindings.insert(k.to_string(), v.clone());
    }
    MapCandidate {
        family: Family::A,
        hatted: true,
        chi_plus: Combo::of(&[(Basis::T21, one.clone())]),
        chi_minus: Combo::of(&[(Basis::T12, one)]),
        chi1,
        chi2,
        x: Some(xc),
        q_link: None,
        bindings,
        constraint: None,
    }
}

/// Left side minus right side of the family B parameter equation.
pub fn family_b_constraint(palpha: &RingElem, pbeta: &RingElem) -> RingElem {
    let r = r();
    let one = RingElem::one();
    let inner = &(&r + &(pbeta * &qp(-2))) * &(&(pbeta - palpha) - &rp(3));
    let first = &(&one - &rp(2)) * &(&(&r * pbeta) + &inner);
    let second = &r * &(palpha - pbeta);
    let rhs = &rp(4) * &(&qp(2) - &one);
    &(&first + &second) - &rhs
}

fn family_b_combos(palpha: &RingElem, pbeta: &RingElem) -> (Combo, Combo, Combo, Combo) {
    (
        Combo::of(&[(Basis::T12, rp(2))]),
        Combo::of(&[(Basis::T21, rp(2))]),
        Combo::of(&[(Basis::B, rp(3)), (Basis::AB, palpha.clone())]),
        Combo::of(&[(Basis::A, r()), (Basis::AB, pbeta.clone())]),
    )
}

/// Family B with `χ₊ = r²T12`, `χ₋ = r²T21`, solving the parameter equation
/// for `pα`.
pub fn solve_family_b(pbeta: &RingElem) -> Result<MapCandidate, CastellaniError> {
    let palpha = solve_linear(|pa| Ok(family_b_constraint(pa, pbeta)), "palpha")?;
    let (cp, cm, c1, c2) = family_b_combos(&palpha, pbeta);
    let mut bindings = BTreeMap::new();
    bindings.insert("palpha".into(), palpha);
    bindings.insert("pbeta".into(), pbeta.clone());
    Ok(MapCandidate {
        family: Family::B,
        hatted: false,
        chi_plus: cp,
        chi_minus: cm,
        chi1: c1,
        chi2: c2,
        x: None,
        q_link: None,
        bindings,
        constraint: None,
    })
}

/// Family B with both map parameters fixed. When the parameter equation does
/// not hold identically, `q` is bound to the branch `q = r` or `q = -r` on
/// which it does.
pub fn family_b_with(palpha: &RingElem, pbeta: &RingElem) -> Result<MapCandidate, CastellaniError> {
    let residual = family_b_constraint(palpha, pbeta);
    let (cp, cm, c1, c2) = family_b_combos(palpha, pbeta);
    let mut bindings = BTreeMap::new();
    bindings.insert("palpha".into(), palpha.clone());
    bindings.insert("pbeta".into(), pbeta.clone());
    let (q_link, constraint) = if residual.is_zero() {
        (None, None)
    } else {
        let mut chosen = None;
        for branch in [r(), -&r()] {
            if residual.substitute_symbol(Symbol::Q, &branch)?.is_zero() {
                chosen = Some(branch);
                break;
            }
        }
        let Some(link) = chosen else {
            return Err(CastellaniError::NoBranch(residual.constraint_polynomial().to_string()));
        };
        (Some(link), Some(residual))
    };
    Ok(MapCandidate {
        family: Family::B,
        hatted: false,
        chi_plus: cp,
        chi_minus: cm,
        chi1: c1,
        chi2: c2,
        x: None,
        q_link,
        bindings,
        constraint,
    })
}

/// Exchanges the indices 1 and 2 (so `T12 ↔ T21` and `A ↔ B`) and inverts
/// `q`; the `χ` labels stay in place.
pub fn duality_transform(c: &MapCandidate) -> Result<MapCandidate, CastellaniError> {
    let qi = qp(-1);
    let tr = |combo: &Combo| -> Result<Combo, RingError> {
        combo
            .map_basis(Basis::swapped)
            .map_coeffs(|v| v.substitute_symbol(Symbol::Q, &qi))
    };
    let mut bindings = BTreeMap::new();
    for (k, v) in &c.bindings {
        bindings.insert(k.clone(), v.substitute_symbol(Symbol::Q, &qi)?);
    }
    Ok(MapCandidate {
        family: c.family.dual(),
        hatted: c.hatted,
        chi_plus: tr(&c.chi_plus)?,
        chi_minus: tr(&c.chi_minus)?,
        chi1: tr(&c.chi1)?,
        chi2: tr(&c.chi2)?,
        x: c.x.as_ref().map(tr).transpose()?,
        q_link: c.q_link.as_ref().map(|l| l.inv()).transpose()?,
        bindings,
        constraint: c
            .constraint
            .as_ref()
            .map(|v| v.substitute_symbol(Symbol::Q, &qi))
            .transpose()?,
    })
}

/// Momenta `P₁ = c₁·∂_{k₁}`, `P₂ = c₂·∂_{k₂}` with diagonal coefficient
/// combinations, together with Castellani's `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumAnsatz {
    pub p1: Combo,
    pub p1_del: usize,
    pub p2: Combo,
    pub p2_del: usize,
    pub s: RingElem,
}

impl MomentumAnsatz {
    /// `P₁ = ∂₁ + λA∂₁ + λ'B∂₁`, `P₂ = ν∂₂ + ν'AB∂₂`.
    pub fn general(lambda: RingElem, lambda_p: RingElem, nu: RingElem, nu_p: RingElem, s: RingElem) -> Self {
        MomentumAnsatz {
            p1: Combo::of(&[(Basis::I, RingElem::one()), (Basis::A, lambda), (Basis::B, lambda_p)]),
            p1_del: 1,
            p2: Combo::of(&[(Basis::I, nu), (Basis::AB, nu_p)]),
            p2_del: 2,
            s,
        }
    }

    /// `P₁ = ∂₁ + (r²−1)A∂₁`, `P₂ = r⁻¹∂₂`, `s = q⁻¹`.
    pub fn family_b() -> Self {
        Self::general(
            &rp(2) - &RingElem::one(),
            RingElem::zero(),
            rp(-1),
            RingElem::zero(),
            qp(-1),
        )
    }

    /// Every ansatz coefficient left as an unknown.
    pub fn unknowns() -> Self {
        Self::general(
            RingElem::symbol(Symbol::Lambda),
            RingElem::symbol(Symbol::LambdaPrime),
            RingElem::symbol(Symbol::Nu),
            RingElem::symbol(Symbol::NuPrime),
            RingElem::symbol(Symbol::S),
        )
    }

    /// Image under the index exchange; `P₁` and `P₂` trade places.
    pub fn dual(&self) -> Result<Self, RingError> {
        let qi = qp(-1);
        let tr = |combo: &Combo| {
            combo
                .map_basis(Basis::swapped)
                .map_coeffs(|v| v.substitute_symbol(Symbol::Q, &qi))
        };
        Ok(MomentumAnsatz {
            p1: tr(&self.p2)?,
            p1_del: 3 - self.p2_del,
            p2: tr(&self.p1)?,
            p2_del: 3 - self.p1_del,
            s: self.s.substitute_symbol(Symbol::Q, &qi)?,
        })
    }

    pub fn describe(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        out.insert("P1".into(), format!("({})*d{}", self.p1, self.p1_del));
        out.insert("P2".into(), format!("({})*d{}", self.p2, self.p2_del));
        out.insert("s".into(), self.s.to_string());
        out
    }
}
