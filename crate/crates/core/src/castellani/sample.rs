use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::forge::{matrix_witnesses, RelationReport, ResidueEntry};
use crate::rep::RepMatrix;
use crate::ring::{Bindings, Rational, RingError, Symbol};

use super::CastellaniError;

/// Numerators are drawn from `[-NUM_BOUND, NUM_BOUND] \ {0}`.
pub const NUM_BOUND: i64 = 20;
/// Denominators are drawn from `[1, DEN_BOUND]`.
pub const DEN_BOUND: i64 = 20;
/// Draws per trial before giving up on finding a regular point.
pub const MAX_ATTEMPTS: usize = 64;

/// Which symbols to sample and how often.
#[derive(Clone, Debug)]
pub struct SampleSpec {
    pub symbols: Vec<Symbol>,
    pub trials: usize,
    pub seed: u64,
    /// Values held fixed at every point.
    pub fixed: Bindings,
}

impl SampleSpec {
    pub fn new(symbols: Vec<Symbol>, trials: usize, seed: u64) -> Self {
        SampleSpec {
            symbols,
            trials,
            seed,
            fixed: Bindings::new(),
        }
    }
}

fn draw(rng: &mut ChaCha8Rng) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-NUM_BOUND..=NUM_BOUND);
    }
    let d = rng.gen_range(1..=DEN_BOUND);
    Rational::new(n.into(), d.into())
}

fn excluded(b: &Bindings) -> bool {
    match b.get(&Symbol::R) {
        Some(r) => {
            let r2 = r * r;
            r2 == Rational::from_integer(1.into())
        }
        None => false,
    }
}

pub fn point_map(b: &Bindings) -> BTreeMap<String, String> {
    b.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect()
}

fn is_singular(e: &CastellaniError) -> bool {
    matches!(
        e,
        CastellaniError::Singular(_)
            | CastellaniError::Ring(RingError::DenominatorVanishes)
            | CastellaniError::Ring(RingError::DivisionByZero)
    )
}

/// Draws `spec.trials` seeded random rational points and evaluates
/// `producer` at each. Points on `r² = 1` or where the producer hits a
/// singularity are redrawn, at most [`MAX_ATTEMPTS`] times per point.
pub fn sample_points<T, F>(spec: &SampleSpec, mut producer: F) -> Result<Vec<(Bindings, T)>, CastellaniError>
where
    F: FnMut(&Bindings) -> Result<T, CastellaniError>,
{
    if spec.trials == 0 {
        return Err(CastellaniError::NoTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.trials);
    for _ in 0..spec.trials {
        let mut attempts = 0;
        loop {
            if attempts == MAX_ATTEMPTS {
                return Err(CastellaniError::SamplingExhausted { attempts });
            }
            attempts += 1;
            let mut b = spec.fixed.clone();
            for s in &spec.symbols {
                b.insert(*s, draw(&mut rng));
            }
            if excluded(&b) {
                continue;
            }
            match producer(&b) {
                Ok(v) => {
                    out.push((b, v));
                    break;
                }
                Err(e) if is_singular(&e) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// Aggregates residues over sample points into one report per relation id:
/// a relation passes iff its residue vanishes at every point.
pub fn sample_check<F>(
    spec: &SampleSpec,
    params: &BTreeMap<String, String>,
    producer: F,
) -> Result<Vec<RelationReport>, CastellaniError>
where
    F: FnMut(&Bindings) -> Result<Vec<(String, RepMatrix<Rational>)>, CastellaniError>,
{
    let points = sample_points(spec, producer)?;
    let mut order: Vec<String> = Vec::new();
    let mut witnesses: BTreeMap<String, Vec<ResidueEntry>> = BTreeMap::new();
    let mut failing: BTreeMap<String, Vec<BTreeMap<String, String>>> = BTreeMap::new();
    for (point, res) in points {
        for (id, m) in res {
            if !failing.contains_key(&id) {
                order.push(id.clone());
                failing.insert(id.clone(), Vec::new());
            }
            if !m.is_zero() {
                failing.get_mut(&id).expect("inserted").push(point_map(&point));
                witnesses.entry(id).or_insert_with(|| matrix_witnesses(&m));
            }
        }
    }
    let mut ps = params.clone();
    ps.insert("evaluation".into(), "sampled".into());
    ps.insert("seed".into(), spec.seed.to_string());
    ps.insert("trials".into(), spec.trials.to_string());
    Ok(order
        .into_iter()
        .map(|id| {
            let fails = failing.remove(&id).unwrap_or_default();
            RelationReport {
                pass: fails.is_empty(),
                residue_nonzero_entries: witnesses.remove(&id).unwrap_or_default(),
                sampled_points: Some(spec.trials),
                failing_points: Some(fails),
                params: ps.clone(),
                relation: id,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn fixture(b: &Bindings) -> Result<Vec<(String, RepMatrix<Rational>)>, CastellaniError> {
        let q = &b[&Symbol::Q];
        let r = &b[&Symbol::R];
        let f = q * q - r * r;
        let m = RepMatrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(0, 1), rat(3, 1)]]);
        Ok(vec![
            ("zero".to_string(), RepMatrix::zeros(2)),
            ("fixture".to_string(), m.scale(&f)),
        ])
    }

    #[test]
    fn zero_residue_passes_and_fixture_fails() {
        let spec = SampleSpec::new(vec![Symbol::Q, Symbol::R], 20, 7);
        let reps = sample_check(&spec, &BTreeMap::new(), fixture).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps[0].pass);
        assert!(!reps[1].pass);
        assert_eq!(reps[1].sampled_points, Some(20));
        assert!(!reps[1].failing_points.as_ref().unwrap().is_empty());
    }

    #[test]
    fn fixture_passes_on_the_locus() {
        let linked = |b: &Bindings| {
            let mut b = b.clone();
            let r = b[&Symbol::R].clone();
            b.insert(Symbol::Q, -r);
            fixture(&b)
        };
        let spec = SampleSpec::new(vec![Symbol::R], 20, 3);
        let reps = sample_check(&spec, &BTreeMap::new(), linked).unwrap();
        assert!(reps.iter().all(|r| r.pass));
    }

    #[test]
    fn deterministic_for_a_seed() {
        let spec = SampleSpec::new(vec![Symbol::Q, Symbol::R], 5, 11);
        let a = sample_check(&spec, &BTreeMap::new(), fixture).unwrap();
        let b = sample_check(&spec, &BTreeMap::new(), fixture).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn singular_points_are_redrawn_and_exhaustion_reported() {
        let spec = SampleSpec::new(vec![Symbol::R], 3, 0);
        let mut calls = 0;
        let reps = sample_check(&spec, &BTreeMap::new(), |b| {
            calls += 1;
            if calls % 2 == 1 {
                return Err(CastellaniError::Singular("odd call".into()));
            }
            assert_ne!(&b[&Symbol::R] * &b[&Symbol::R], rat(1, 1));
            Ok(vec![("x".into(), RepMatrix::zeros(1))])
        })
        .unwrap();
        assert!(reps[0].pass);
        let always = |_: &Bindings| -> Result<Vec<(String, RepMatrix<Rational>)>, CastellaniError> {
            Err(CastellaniError::Singular("always".into()))
        };
        assert!(matches!(
            sample_check(&spec, &BTreeMap::new(), always),
            Err(CastellaniError::SamplingExhausted { .. })
        ));
        assert!(matches!(
            sample_check(&SampleSpec::new(vec![], 0, 0), &BTreeMap::new(), always),
            Err(CastellaniError::NoTrials)
        ));
    }
}
