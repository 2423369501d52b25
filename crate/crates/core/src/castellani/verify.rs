use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::forge::{matrix_witnesses, RelationReport};
use crate::rep::RepMatrix;
use crate::ring::{Bindings, Rational, RingElem, Symbol};
use crate::scalar::Scalar;

use super::candidate::{Family, MapCandidate, MomentumAnsatz};
use super::residues::{chi_residues, igl_residues, realize, Reading};
use super::sample::{sample_check, SampleSpec};
use super::CastellaniError;

/// Candidates with at most this many active symbols are checked exactly;
/// larger ones at sampled rational points.
pub const SYMBOLIC_LIMIT: usize = 3;

/// Which checks of a candidate decide the outcome and which are only
/// reported.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CastellaniRun {
    pub family: String,
    pub reading: Reading,
    pub evaluation: String,
    pub candidate: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub momenta: Option<BTreeMap<String, String>>,
    pub relations: Vec<RelationReport>,
    pub informational: Vec<RelationReport>,
}

impl CastellaniRun {
    pub fn pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass)
    }
}

#[derive(Clone, Copy)]
enum Set<'a> {
    Chi(Reading),
    Igl(&'a MomentumAnsatz),
}

fn residues_at<S: Scalar>(
    cand: &MapCandidate,
    set: Set<'_>,
    conv: &impl Fn(&RingElem) -> Result<S, crate::ring::RingError>,
) -> Result<Vec<(String, RepMatrix<S>)>, CastellaniError> {
    let real = realize(cand, conv)?;
    match set {
        Set::Chi(reading) => chi_residues(&real, reading),
        Set::Igl(mom) => igl_residues(&real, cand, mom, conv),
    }
}

fn active_symbols(cand: &MapCandidate, mom: Option<&MomentumAnsatz>) -> Result<Vec<Symbol>, CastellaniError> {
    let mut syms: BTreeSet<Symbol> = cand.symbols()?.into_iter().collect();
    if let Some(m) = mom {
        for c in [&m.p1, &m.p2] {
            for (_, v) in c.terms() {
                syms.extend(cand.coefficient(v)?.symbols());
            }
        }
        syms.extend(cand.coefficient(&m.s)?.symbols());
    }
    Ok(syms.into_iter().collect())
}

struct Runner<'a> {
    cand: &'a MapCandidate,
    symbols: Vec<Symbol>,
    symbolic: bool,
    trials: usize,
    seed: u64,
    params: BTreeMap<String, String>,
}

impl Runner<'_> {
    fn run(&self, set: Set<'_>, label: &str) -> Result<Vec<RelationReport>, CastellaniError> {
        let mut params = self.params.clone();
        params.insert("set".into(), label.into());
        if self.symbolic {
            params.insert("evaluation".into(), "symbolic".into());
            let res = residues_at(self.cand, set, &|e: &RingElem| Ok(e.clone()))?;
            return Ok(res
                .into_iter()
                .map(|(id, m)| RelationReport::simple(id, params.clone(), matrix_witnesses(&m)))
                .collect());
        }
        let spec = SampleSpec::new(self.symbols.clone(), self.trials, self.seed);
        sample_check(&spec, &params, |b: &Bindings| {
            residues_at(self.cand, set, &|e: &RingElem| -> Result<Rational, _> { e.eval(b) })
        })
    }
}

/// Checks a candidate: the hatted relations under the candidate's own
/// reading, and for family B the inhomogeneous relations with `mom`. For
/// unhatted candidates the verbatim reading is reported separately, as are
/// the inhomogeneous relations of the dual families.
pub fn verify_candidate(
    cand: &MapCandidate,
    mom: Option<&MomentumAnsatz>,
    trials: usize,
    seed: u64,
) -> Result<CastellaniRun, CastellaniError> {
    let reading = Reading::default_for(cand);
    let symbols = active_symbols(cand, mom)?;
    let symbolic = symbols.len() <= SYMBOLIC_LIMIT;
    let mut params = BTreeMap::new();
    params.insert("family".into(), cand.family.to_string());
    if let Some(l) = &cand.q_link {
        params.insert("q".into(), l.to_string());
    }
    let runner = Runner {
        cand,
        symbols,
        symbolic,
        trials,
        seed,
        params,
    };
    let mut relations = runner.run(Set::Chi(reading), &format!("chi/{reading}"))?;
    let mut informational = Vec::new();
    if !cand.hatted {
        informational.extend(runner.run(Set::Chi(Reading::Verbatim), "chi/verbatim")?);
    }
    if let Some(m) = mom {
        let igl = runner.run(Set::Igl(m), "igl")?;
        match cand.family {
            Family::A | Family::B => relations.extend(igl),
            Family::Dual | Family::DualA => informational.extend(igl),
        }
    }
    Ok(CastellaniRun {
        family: cand.family.to_string(),
        reading,
        evaluation: if symbolic { "symbolic" } else { "sampled" }.into(),
        candidate: cand.describe(),
        momenta: mom.map(|m| m.describe()),
        relations,
        informational,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::castellani::candidate::{duality_transform, family_b_with, solve_family_a, SignConvention};

    #[test]
    fn family_b_run_fails_only_on_two_igl_relations() {
        let zero = RingElem::from(0);
        let cand = family_b_with(&zero, &zero).unwrap();
        let run = verify_candidate(&cand, Some(&MomentumAnsatz::family_b()), 20, 0).unwrap();
        assert_eq!(run.evaluation, "symbolic");
        let failing: Vec<&str> = run.relations.iter().filter(|r| !r.pass).map(|r| r.relation.as_str()).collect();
        assert_eq!(failing, vec!["igl.minus-p2", "igl.p1-p2"]);
        assert_eq!(run.relations.len(), 16);
    }

    #[test]
    fn family_a_symbolic_sampling_tier() {
        let a = RingElem::symbol(Symbol::A);
        let c = RingElem::symbol(Symbol::C);
        let cand = solve_family_a(&a, &c, SignConvention::Corrected).unwrap();
        let run = verify_candidate(&cand, None, 20, 1).unwrap();
        assert_eq!(run.evaluation, "sampled");
        assert!(run.pass());
        assert!(run.relations.iter().all(|r| r.sampled_points == Some(20)));
    }

    #[test]
    fn dual_run_reports_igl_as_informational() {
        let zero = RingElem::from(0);
        let cand = duality_transform(&family_b_with(&zero, &zero).unwrap()).unwrap();
        let mom = MomentumAnsatz::family_b().dual().unwrap();
        let run = verify_candidate(&cand, Some(&mom), 20, 0).unwrap();
        assert!(run.pass());
        assert_eq!(run.relations.len(), 7);
        assert!(run.informational.iter().any(|r| r.relation.starts_with("igl.")));
    }
}
