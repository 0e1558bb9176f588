//! Three independent answers to "is there a matching from A to B?": the
//! engine, brute force over bijections, and Hall's condition on the
//! candidate sets `E_a`, the latter in both of its equivalent forms:
//!
//! - union: `|⋃_{s∈S} E_s| ≥ |S|` for every nonempty `S ⊆ A`;
//! - intersection: `|V_S| ≤ |A| − |S|`, where `V_S = B ∖ ⋃_{s∈S} E_s`.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use super::report::{CheckReport, Record};
use super::{random_subset, LabConfig};
use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};
use crate::matching::{brute_force_matching, find_matching};
use crate::subset::{candidate_set, stable_set, GroupSubset};

/// Largest `|A|` cross-validation accepts (it enumerates all `S ⊆ A`).
pub const HALL_CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HallAgreement {
    pub engine: bool,
    pub brute_force: bool,
    pub hall_union: bool,
    pub hall_intersection: bool,
}

impl HallAgreement {
    pub fn all_agree(&self) -> bool {
        let v = self.engine;
        self.brute_force == v && self.hall_union == v && self.hall_intersection == v
    }
}

pub fn cross_validate_hall<'g, G: Group>(
    a: &GroupSubset<'g, G>,
    b: &GroupSubset<'g, G>,
) -> Result<HallAgreement> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() > HALL_CAP {
        return Err(Error::size_limit(
            "Hall cross-validation",
            a.len(),
            HALL_CAP,
        ));
    }
    let engine = find_matching(a, b)?.is_matched();
    let brute_force = brute_force_matching(a, b)?.is_some();

    let rows: Vec<GroupSubset<'g, G>> = a
        .iter()
        .map(|x| candidate_set(a, b, x))
        .collect::<Result<_>>()?;
    let mut hall_union = true;
    let mut hall_intersection = true;
    for mask in 1u32..1 << a.len() {
        let picked = || (0..a.len()).filter(move |i| mask >> i & 1 == 1);
        let size = mask.count_ones() as usize;
        let mut union = GroupSubset::empty(a.group());
        for i in picked() {
            union = union.union(&rows[i])?;
        }
        hall_union &= union.len() >= size;
        let s = GroupSubset::new(a.group(), picked().map(|i| a.members()[i].clone()))?;
        let v = stable_set(a, b, &s)?;
        hall_intersection &= v.len() + size <= a.len();
    }
    Ok(HallAgreement {
        engine,
        brute_force,
        hall_union,
        hall_intersection,
    })
}

/// `cfg.hall_samples` random instances with `|A| = |B| ≤ 5` and `1 ∉ B`.
pub fn sweep_hall(g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    const NAME: &str = "hall";
    let started = Instant::now();
    let n = g.order();
    if n > cfg.caps.max_order {
        return Err(Error::size_limit(NAME, n, cfg.caps.max_order));
    }
    let mut report = CheckReport::new(NAME, g.label());
    report.seed = Some(cfg.seed);
    let max_k = HALL_CAP.min(n - 1);
    let mut rng = cfg.rng(NAME, &g.label());
    let instances: Vec<(Vec<usize>, Vec<usize>)> = if max_k == 0 {
        Vec::new()
    } else {
        (0..cfg.hall_samples)
            .map(|_| {
                let k = rng.gen_range(1..=max_k);
                (
                    random_subset(&mut rng, 0, n, k),
                    random_subset(&mut rng, 1, n, k),
                )
            })
            .collect()
    };
    let outcomes = cfg.map(&instances, |(a, b)| {
        let a = GroupSubset::new(g, a.iter().copied()).expect("in range");
        let b = GroupSubset::new(g, b.iter().copied()).expect("in range");
        let agreement = cross_validate_hall(&a, &b).expect("valid instance");
        let failure = (!agreement.all_agree()).then(|| {
            Record::new("hall-disagreement")
                .field("A", &a)
                .field("B", &b)
                .field("engine", agreement.engine)
                .field("brute_force", agreement.brute_force)
                .field("hall_union", agreement.hall_union)
                .field("hall_intersection", agreement.hall_intersection)
        });
        (agreement.engine, failure)
    });
    report.instances_tested = outcomes.len() as u64;
    report.bump("matchable", 0);
    report.bump("unmatchable", 0);
    for (matched, failure) in outcomes {
        report.bump(if matched { "matchable" } else { "unmatchable" }, 1);
        report.failures.extend(failure);
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dihedral, LatticeGroup, LatticePoint};
    use crate::lab::Status;

    fn set<'g>(g: &'g GroupTable, xs: &[usize]) -> GroupSubset<'g, GroupTable> {
        GroupSubset::new(g, xs.iter().copied()).unwrap()
    }

    #[test]
    fn c4_counterexample_all_false() {
        let c4 = make_cyclic(4).unwrap();
        let h = cross_validate_hall(&set(&c4, &[0, 2]), &set(&c4, &[1, 2])).unwrap();
        assert_eq!(
            h,
            HallAgreement {
                engine: false,
                brute_force: false,
                hall_union: false,
                hall_intersection: false
            }
        );
    }

    #[test]
    fn c5_all_true() {
        let c5 = make_cyclic(5).unwrap();
        let a = set(&c5, &[1, 2, 3, 4]);
        let h = cross_validate_hall(&a, &a).unwrap();
        assert!(h.engine && h.all_agree());
    }

    #[test]
    fn singleton_and_lattice() {
        let d4 = make_dihedral(4).unwrap();
        let h = cross_validate_hall(&set(&d4, &[5]), &set(&d4, &[2])).unwrap();
        assert!(h.engine && h.all_agree());

        let z = LatticeGroup::new(1).unwrap();
        let p = |x| LatticePoint(vec![x]);
        let a = GroupSubset::new(&z, [p(0), p(1), p(2)]).unwrap();
        let b = GroupSubset::new(&z, [p(1), p(2), p(-3)]).unwrap();
        assert!(cross_validate_hall(&a, &b).unwrap().all_agree());
    }

    #[test]
    fn errors() {
        let c4 = make_cyclic(4).unwrap();
        assert_eq!(
            cross_validate_hall(&set(&c4, &[1]), &set(&c4, &[0])).unwrap_err(),
            Error::IdentityInB
        );
        let c12 = make_cyclic(12).unwrap();
        let big = set(&c12, &[1, 2, 3, 4, 5, 6]);
        assert!(matches!(
            cross_validate_hall(&big, &big),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn sweep_sees_both_outcomes() {
        let c6 = make_cyclic(6).unwrap();
        let cfg = LabConfig {
            hall_samples: 200,
            ..LabConfig::default()
        };
        let r = sweep_hall(&c6, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.counter("unmatchable") > 0);
        assert!(r.counter("matchable") > 0);
    }
}
