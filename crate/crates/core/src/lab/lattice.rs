//! Randomized matching checks in `Z^d`, which has the matching property
//! because it is torsion-free.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::report::{CheckReport, Record};
use super::LabConfig;
use crate::error::{Error, Result};
use crate::group::{Group, LatticeGroup, LatticePoint};
use crate::matching::{brute_force_matching, find_matching, verify_matching, MatchOutcome};
use crate::subset::GroupSubset;

/// Largest `|A|` the lattice check samples.
const MAX_SIZE_CAP: usize = 10;

/// Instances up to this size are re-checked by brute force.
const BRUTE_FORCE_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeParams {
    pub dim: usize,
    pub trials: usize,
    pub max_size: usize,
    /// Coordinates are drawn from `[-coordinate_bound, coordinate_bound]`.
    pub coordinate_bound: i64,
}

impl Default for LatticeParams {
    fn default() -> Self {
        LatticeParams {
            dim: 1,
            trials: 1000,
            max_size: 8,
            coordinate_bound: 4,
        }
    }
}

fn random_points(rng: &mut ChaCha8Rng, dim: usize, bound: i64, k: usize) -> Vec<LatticePoint> {
    let mut set = BTreeSet::new();
    while set.len() < k {
        set.insert(LatticePoint(
            (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect(),
        ));
    }
    set.into_iter().collect()
}

/// Samples `trials` pairs `A`, `B` of equal size at most `max_size` from the
/// coordinate box and requires a matching for each. Draws where `B`
/// contains zero are discarded and redrawn; they are tallied under
/// `rejected_zero_in_b` but not counted as instances.
pub fn check_lattice_matching(params: &LatticeParams, cfg: &LabConfig) -> Result<CheckReport> {
    const NAME: &str = "lattice";
    let started = Instant::now();
    let z = LatticeGroup::new(params.dim)?;
    if params.max_size == 0 {
        return Err(Error::InvalidParameter(
            "max_size must be at least 1".into(),
        ));
    }
    if params.max_size > MAX_SIZE_CAP {
        return Err(Error::size_limit(
            "lattice max_size",
            params.max_size,
            MAX_SIZE_CAP,
        ));
    }
    if params.coordinate_bound < 0 {
        return Err(Error::InvalidParameter(
            "coordinate bound must be non-negative".into(),
        ));
    }
    let side = (2 * params.coordinate_bound + 1) as f64;
    if side.powi(params.dim as i32) - 1.0 < params.max_size as f64 {
        return Err(Error::InvalidParameter(format!(
            "a box of side {side} in dimension {} has too few nonzero points for sets of size {}",
            params.dim, params.max_size
        )));
    }

    let mut report = CheckReport::new(NAME, z.label());
    report.seed = Some(cfg.seed);
    let mut rng = cfg.rng(NAME, &format!("{}/{}", z.label(), params.coordinate_bound));
    let mut instances = Vec::with_capacity(params.trials);
    let mut rejected = 0u64;
    while instances.len() < params.trials {
        let k = rng.gen_range(1..=params.max_size);
        let a = random_points(&mut rng, params.dim, params.coordinate_bound, k);
        let b = random_points(&mut rng, params.dim, params.coordinate_bound, k);
        if b.iter().any(LatticePoint::is_zero) {
            rejected += 1;
            continue;
        }
        instances.push((a, b));
    }
    report.bump("rejected_zero_in_b", rejected);

    let outcomes = cfg.map(&instances, |(a, b)| {
        let a = GroupSubset::new(&z, a.iter().cloned()).expect("right dimension");
        let b = GroupSubset::new(&z, b.iter().cloned()).expect("right dimension");
        let engine = match find_matching(&a, &b) {
            Ok(MatchOutcome::Matched(m)) => match verify_matching(&a, &b, &m) {
                Ok(()) => Ok(()),
                Err(d) => Err(format!("invalid matching: {d}")),
            },
            Ok(MatchOutcome::Violator(v)) => {
                Err(format!("violator S={} N(S)={}", v.subset, v.neighborhood))
            }
            Err(e) => Err(e.to_string()),
        };
        let brute = (a.len() <= BRUTE_FORCE_SIZE)
            .then(|| brute_force_matching(&a, &b).expect("within cap").is_some());
        let failure = match (&engine, brute) {
            (Ok(()), None | Some(true)) => None,
            (Ok(()), Some(false)) => Some("brute force found no matching".to_string()),
            (Err(e), _) => Some(e.clone()),
        };
        (
            failure.map(|why| {
                Record::new("no-matching")
                    .field("A", &a)
                    .field("B", &b)
                    .field("reason", why)
            }),
            brute == Some(true),
        )
    });
    report.instances_tested = outcomes.len() as u64;
    report.bump("brute_force_confirmed", 0);
    for (failure, confirmed) in outcomes {
        if confirmed {
            report.bump("brute_force_confirmed", 1);
        }
        report.failures.extend(failure);
    }
    Ok(report.finish(started))
}
