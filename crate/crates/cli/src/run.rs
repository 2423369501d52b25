use std::collections::BTreeMap;
use std::fs;

use serde_json::{json, Value};

use qdeform::algebra::{parse, parse_scalar, AlgebraError, Mode, Params};
use qdeform::castellani::{
    duality_transform, family_b_with, no_solution_search, solve_family_a, solve_family_b, verify_candidate,
    AnsatzOutcome, CastellaniError, MomentumAnsatz, SignConvention,
};
use qdeform::forge::{
    build_gl, build_igl, classical_limit, q_independence,
    suites::{gl_suite, igl_suite, run as run_suite},
    ForgeError, MatrixRealm, RelationReport,
};
use qdeform::rep::matrix_of;
use qdeform::ring::{RingElem, Symbol};

use crate::config::RunConfig;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CONFIG: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn config(message: impl ToString) -> Self {
        CliError {
            code: EXIT_CONFIG,
            message: message.to_string(),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::Parse { .. } | AlgebraError::IndexOutOfRange { .. } => EXIT_PARSE,
            _ => EXIT_CONFIG,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ForgeError> for CliError {
    fn from(e: ForgeError) -> Self {
        match e {
            ForgeError::Algebra(a) => a.into(),
            other => CliError::config(other),
        }
    }
}

impl From<CastellaniError> for CliError {
    fn from(e: CastellaniError) -> Self {
        match e {
            CastellaniError::Algebra(a) => a.into(),
            CastellaniError::Forge(f) => f.into(),
            other => CliError::config(other),
        }
    }
}

pub fn nf(expr: &str, cfg: &RunConfig) -> Result<u8, CliError> {
    let ctx = cfg.context().map_err(CliError::config)?;
    println!("{}", parse(expr, &ctx)?);
    Ok(EXIT_OK)
}

pub fn matrix(target: &str, cfg: &RunConfig) -> Result<u8, CliError> {
    let ctx = cfg.context().map_err(CliError::config)?;
    let gs = build_igl(cfg.n, cfg.mode)?;
    let m = match gs.get(target) {
        Ok(m) => m.clone(),
        Err(_) => {
            let u = parse(target, &ctx).map_err(|e| match e {
                AlgebraError::Parse { .. } => CliError {
                    code: EXIT_PARSE,
                    message: format!("`{target}` is neither a generator nor a valid expression: {e}"),
                },
                other => other.into(),
            })?;
            matrix_of(&u, &Params::symbolic(ctx))?
        }
    };
    let mut out = m.to_json();
    out["target"] = json!(target);
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(EXIT_OK)
}

pub fn verify_gl(cfg: &RunConfig, igl: bool) -> Result<u8, CliError> {
    let gs = if igl {
        build_igl(cfg.n, cfg.mode)?
    } else {
        build_gl(cfg.n, cfg.mode)?
    };
    let rels = if igl {
        igl_suite(gs.params())
    } else {
        gl_suite(gs.params())
    };
    let mut reports = run_suite(&rels, &MatrixRealm { gens: &gs })?;
    if cfg.mode == Mode::TwoParam {
        reports.extend(q_independence(&gs)?);
    }
    reports.extend(classical_limit(cfg.n)?);
    emit(if igl { "igl" } else { "gl" }, cfg, reports, Vec::new(), BTreeMap::new())
}

fn binding(text: &str, sym: Symbol) -> Result<RingElem, CliError> {
    if text == "symbolic" {
        return Ok(RingElem::symbol(sym));
    }
    Ok(parse_scalar(text)?)
}

pub fn verify_castellani(cfg: &RunConfig) -> Result<u8, CliError> {
    if cfg.n != 2 {
        return Err(CliError::config("the castellani suite needs n = 2"));
    }
    let mut extras = BTreeMap::new();
    let pbeta = binding(&cfg.pbeta, Symbol::PBeta)?;
    let palpha = cfg.palpha.as_deref().map(|p| binding(p, Symbol::PAlpha)).transpose()?;
    let run = match cfg.family.as_str() {
        "A" => {
            let sign = if cfg.signs == "corrected" {
                SignConvention::Corrected
            } else {
                SignConvention::Printed
            };
            let cand = solve_family_a(&binding(&cfg.a, Symbol::A)?, &binding(&cfg.c, Symbol::C)?, sign)?;
            let mut run = verify_candidate(&cand, None, cfg.trials, cfg.seed)?;
            let points = no_solution_search(&cand, cfg.trials, cfg.seed)?;
            let solvable: Vec<BTreeMap<String, String>> = points
                .iter()
                .filter(|p| matches!(p.outcome, AnsatzOutcome::Solvable { .. }))
                .map(|p| p.point.clone())
                .collect();
            let mut params = BTreeMap::new();
            params.insert("family".into(), "A".into());
            params.insert("set".into(), "igl/ansatz".into());
            params.insert("evaluation".into(), "sampled".into());
            params.insert("seed".into(), cfg.seed.to_string());
            params.insert("trials".into(), cfg.trials.to_string());
            let mut rep = RelationReport::simple("igl.no-ansatz-solution", params, Vec::new());
            rep.pass = solvable.is_empty();
            rep.sampled_points = Some(points.len());
            rep.failing_points = Some(solvable);
            run.relations.push(rep);
            extras.insert("ansatzSearch".to_string(), serde_json::to_value(&points).expect("json"));
            run
        }
        "B" => {
            let cand = match &palpha {
                Some(pa) => family_b_with(pa, &pbeta)?,
                None => solve_family_b(&pbeta)?,
            };
            verify_candidate(&cand, Some(&MomentumAnsatz::family_b()), cfg.trials, cfg.seed)?
        }
        _ => {
            let pa = palpha.unwrap_or_else(|| RingElem::from(0));
            let cand = duality_transform(&family_b_with(&pa, &pbeta)?)?;
            let mom = MomentumAnsatz::family_b()
                .dual()
                .map_err(CliError::config)?;
            verify_candidate(&cand, Some(&mom), cfg.trials, cfg.seed)?
        }
    };
    extras.insert("family".into(), json!(run.family));
    extras.insert("reading".into(), serde_json::to_value(run.reading).expect("json"));
    extras.insert("evaluation".into(), json!(run.evaluation));
    extras.insert("candidate".into(), json!(run.candidate));
    if let Some(m) = &run.momenta {
        extras.insert("momenta".into(), json!(m));
    }
    emit("castellani", cfg, run.relations, run.informational, extras)
}

fn sorted(mut v: Vec<RelationReport>) -> Vec<RelationReport> {
    v.sort_by(|a, b| a.relation.cmp(&b.relation));
    v
}

/// Writes the report and the summary, returning the exit code. Keys are
/// emitted in sorted order and relations by id, so equal inputs give
/// byte-identical output.
fn emit(
    suite: &str,
    cfg: &RunConfig,
    relations: Vec<RelationReport>,
    informational: Vec<RelationReport>,
    extras: BTreeMap<String, Value>,
) -> Result<u8, CliError> {
    let relations = sorted(relations);
    let total = relations.len();
    let passed = relations.iter().filter(|r| r.pass).count();
    let mut config = cfg.describe();
    if suite == "castellani" {
        config.insert("family".into(), cfg.family.clone());
        if cfg.family == "A" {
            config.insert("signs".into(), cfg.signs.clone());
            config.insert("a".into(), cfg.a.clone());
            config.insert("c".into(), cfg.c.clone());
        } else {
            config.insert("pbeta".into(), cfg.pbeta.clone());
            let palpha = match (&cfg.palpha, cfg.family.as_str()) {
                (Some(p), _) => p.clone(),
                (None, "B") => "solved".into(),
                (None, _) => "0".into(),
            };
            config.insert("palpha".into(), palpha);
        }
    }
    let mut report = json!({
        "suite": suite,
        "config": config,
        "summary": { "total": total, "passed": passed, "failed": total - passed },
        "relations": relations,
    });
    if !informational.is_empty() {
        report["informational"] = serde_json::to_value(sorted(informational)).expect("json");
    }
    if !extras.is_empty() {
        report["extras"] = json!(extras);
    }
    let text = serde_json::to_string_pretty(&report).expect("json") + "\n";
    let mut summary = String::new();
    for r in relations.iter().filter(|r| !r.pass) {
        summary.push_str(&format!("FAIL {}\n", r.relation));
    }
    summary.push_str(&format!(
        "{suite}: {passed}/{total} relations passed, {} failed\n",
        total - passed
    ));
    match &cfg.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display())))?;
            print!("{summary}");
        }
        None => {
            print!("{text}");
            eprint!("{summary}");
        }
    }
    Ok(if passed == total { EXIT_OK } else { EXIT_FAIL })
}
