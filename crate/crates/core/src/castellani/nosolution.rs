use std::collections::BTreeMap;

use serde::Serialize;

use crate::ring::{RingElem, Symbol};

use super::candidate::{MapCandidate, MomentumAnsatz};
use super::groebner::{GbPoly, GroebnerBasis};
use super::residues::{igl_residues, realize};
use super::sample::{point_map, sample_points, SampleSpec};
use super::CastellaniError;

/// Unknowns of the momentum ansatz, in Gröbner variable order.
pub const UNKNOWNS: [Symbol; 5] = [
    Symbol::Lambda,
    Symbol::LambdaPrime,
    Symbol::Nu,
    Symbol::NuPrime,
    Symbol::S,
];

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase", rename_all_fields = "camelCase", tag = "outcome")]
pub enum AnsatzOutcome {
    /// Adding the equations of `failing_relation` (in order) made the ideal
    /// trivial.
    NoSolution { failing_relation: String },
    /// The full system is consistent; its reduced basis is recorded.
    Solvable { basis: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NoSolutionPoint {
    pub point: BTreeMap<String, String>,
    #[serde(flatten)]
    pub outcome: AnsatzOutcome,
}

/// At sampled values of the candidate's free parameters, decides exactly
/// whether some `(λ, λ', ν, ν', s)` makes every inhomogeneous relation hold
/// with `P₁ = ∂₁ + λA∂₁ + λ'B∂₁` and `P₂ = ν∂₂ + ν'AB∂₂`.
pub fn no_solution_search(
    cand: &MapCandidate,
    trials: usize,
    seed: u64,
) -> Result<Vec<NoSolutionPoint>, CastellaniError> {
    let mom = MomentumAnsatz::unknowns();
    let symbols: Vec<Symbol> = cand
        .symbols()?
        .into_iter()
        .filter(|s| !UNKNOWNS.contains(s))
        .collect();
    let spec = SampleSpec::new(symbols, trials, seed);
    let points = sample_points(&spec, |b| {
        let conv = |e: &RingElem| e.substitute(b);
        let real = realize(cand, &conv)?;
        let res = igl_residues(&real, cand, &mom, &conv)?;
        let mut eqs: Vec<GbPoly> = Vec::new();
        for (id, m) in &res {
            for (_, _, v) in m.nonzero_entries() {
                eqs.push(GbPoly::from_ring(&v, &UNKNOWNS)?);
            }
            if GroebnerBasis::compute(&eqs).is_trivial() {
                return Ok(AnsatzOutcome::NoSolution {
                    failing_relation: id.clone(),
                });
            }
        }
        let gb = GroebnerBasis::compute(&eqs);
        Ok(AnsatzOutcome::Solvable {
            basis: gb.polys.iter().map(|p| p.to_string()).collect(),
        })
    })?;
    Ok(points
        .into_iter()
        .map(|(b, outcome)| NoSolutionPoint {
            point: point_map(&b),
            outcome,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::castellani::candidate::{family_b_with, solve_family_a, SignConvention};

    #[test]
    fn family_a_has_no_ansatz_solution() {
        for sign in [SignConvention::Printed, SignConvention::Corrected] {
            let a = RingElem::symbol(Symbol::A);
            let c = RingElem::symbol(Symbol::C);
            let cand = solve_family_a(&a, &c, sign).unwrap();
            let pts = no_solution_search(&cand, 3, 5).unwrap();
            assert_eq!(pts.len(), 3);
            for p in pts {
                assert!(matches!(p.outcome, AnsatzOutcome::NoSolution { .. }), "{p:?}");
                assert_eq!(p.point.len(), 4);
            }
        }
    }

    #[test]
    fn family_b_ansatz_is_also_inconsistent() {
        // The printed momenta leave two relations nonzero, and no other
        // member of the ansatz repairs them.
        let zero = RingElem::zero();
        let cand = family_b_with(&zero, &zero).unwrap();
        let pts = no_solution_search(&cand, 2, 1).unwrap();
        assert!(pts.iter().all(|p| matches!(p.outcome, AnsatzOutcome::NoSolution { .. })));
    }
}
