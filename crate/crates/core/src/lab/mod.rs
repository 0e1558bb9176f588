//! Mechanical checks of the matching theorems and the sumset bounds they
//! rest on, by exhaustive enumeration on small groups and seeded sampling
//! beyond that.
//!
//! Every sweep first materializes its instance list (sequentially, from the
//! seed), then evaluates instances on a worker pool and merges results in
//! instance order. Reports are therefore identical for any `jobs` value.

mod corollary;
mod hall;
mod kemperman;
mod lattice;
mod matchings;
mod olson;
mod report;
mod suite;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use corollary::{check_corollary, sweep_corollary, MAX_LISTED_COUNTEREXAMPLES};
pub use hall::{cross_validate_hall, sweep_hall, HallAgreement, HALL_CAP};
pub use kemperman::{check_kemperman, sweep_kemperman};
pub use lattice::{check_lattice_matching, LatticeParams};
pub use matchings::{
    check_automatching, check_counterexample, check_matching_property, construct_counterexample,
    CounterexamplePair,
};
pub use olson::{check_olson, find_olson_witness, sweep_olson, OlsonWitness, Side};
pub use report::{CheckReport, Record, Status, SuiteReport, Summary};
pub use suite::{full_suite, run_check, run_checks, CheckKind};

/// Size limits for the sweeps. Exhaustive sweeps switch to seeded sampling
/// above their cap where sampling makes sense; other checks refuse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest order for which `kemperman` and `olson` enumerate all pairs.
    pub exhaustive_sumset_order: usize,
    /// Largest order `sweep_corollary` accepts.
    pub corollary_order: usize,
    /// Largest order for which `matching-property` enumerates all pairs.
    pub exhaustive_pair_order: usize,
    /// Largest order `check_automatching` accepts.
    pub automatching_order: usize,
    /// Largest order any check accepts, sampled or not. Also bounds
    /// subgroup enumeration for the Olson witness search.
    pub max_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exhaustive_sumset_order: 6,
            corollary_order: 6,
            exhaustive_pair_order: 7,
            automatching_order: 14,
            max_order: crate::group::DEFAULT_SUBGROUP_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabConfig {
    pub seed: u64,
    /// Worker threads; 1 forces the single-threaded path, 0 uses all cores.
    pub jobs: usize,
    pub caps: Caps,
    /// Random pairs drawn by sampled sweeps.
    pub samples: usize,
    /// Random instances drawn by the Hall cross-validation sweep.
    pub hall_samples: usize,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            seed: 0x5eed,
            jobs: 0,
            caps: Caps::default(),
            samples: 2000,
            hall_samples: 500,
        }
    }
}

impl LabConfig {
    pub fn with_seed(seed: u64) -> Self {
        LabConfig {
            seed,
            ..LabConfig::default()
        }
    }

    /// RNG for one check on one group. Keyed by name so a check's samples
    /// do not depend on which other checks ran before it.
    pub(crate) fn rng(&self, check: &str, group: &str) -> ChaCha8Rng {
        // FNV-1a
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in check.bytes().chain([0]).chain(group.bytes()) {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }

    pub(crate) fn map<T: Sync, R: Send>(
        &self,
        items: &[T],
        f: impl Fn(&T) -> R + Sync + Send,
    ) -> Vec<R> {
        match self.jobs {
            1 => items.iter().map(f).collect(),
            0 => items.par_iter().map(f).collect(),
            n => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map(|pool| pool.install(|| items.par_iter().map(&f).collect()))
                .unwrap_or_else(|_| items.iter().map(&f).collect()),
        }
    }
}

/// All `k`-element subsets of `items` in lexicographic order.
pub(crate) fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A uniformly random `k`-subset of `[lo, n)`, sorted.
pub(crate) fn random_subset(rng: &mut ChaCha8Rng, lo: usize, n: usize, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = index::sample(rng, n - lo, k)
        .into_iter()
        .map(|i| i + lo)
        .collect();
    v.sort_unstable();
    v
}

/// Masks of all nonempty subsets of `[0, n)`.
pub(crate) fn nonempty_masks(n: usize) -> impl Iterator<Item = u64> {
    1..(1u64 << n)
}
