//! Nonempty `U`, `V` with `U`, `V`, `UV` inside some `X ⊆ G ∖ {1}`.
//!
//! The bound as usually stated is `|X| ≥ |U| + |V| + 1`; it already fails in
//! `C3` (`U = V = {g}`, `X = {g, g²}`). What the Kemperman argument actually
//! gives is `|X| ≥ |U| + |V|`: with `A = U ∪ {1}`, `B = V ∪ {1}` the product
//! `AB` is `UV ∪ U ∪ V ∪ {1}`, and the identity is not in `X`. Both bounds
//! are evaluated; only the second one can fail a check.

use std::time::Instant;

use super::report::{CheckReport, Record};
use super::{nonempty_masks, LabConfig};
use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};
use crate::subset::{product_set, GroupSubset};

const NAME: &str = "corollary";

/// At most this many stated-bound counterexamples are listed per report;
/// the `stated_bound_counterexamples` counter has the full count.
pub const MAX_LISTED_COUNTEREXAMPLES: usize = 20;

struct Instance {
    record: Record,
    corrected_holds: bool,
    stated_holds: bool,
    sort_key: (usize, usize, Vec<usize>, Vec<usize>, Vec<usize>),
}

fn evaluate(
    u: &GroupSubset<'_, GroupTable>,
    v: &GroupSubset<'_, GroupTable>,
    x: &GroupSubset<'_, GroupTable>,
) -> Instance {
    let sum = u.len() + v.len();
    let record = Record::new("corollary-instance")
        .field("U", u)
        .field("V", v)
        .field("X", x)
        .field("|X|", x.len())
        .field("|U|+|V|", sum)
        .field("|U|+|V|+1", sum + 1);
    Instance {
        record,
        corrected_holds: x.len() >= sum,
        stated_holds: x.len() > sum,
        sort_key: (
            x.len(),
            sum,
            u.members().to_vec(),
            v.members().to_vec(),
            x.members().to_vec(),
        ),
    }
}

fn precondition(
    u: &GroupSubset<'_, GroupTable>,
    v: &GroupSubset<'_, GroupTable>,
    x: &GroupSubset<'_, GroupTable>,
) -> Result<(), &'static str> {
    if u.is_empty() || v.is_empty() {
        return Err("U and V must be nonempty");
    }
    if x.contains_identity() {
        return Err("X contains the identity");
    }
    let uv = product_set(u, v).expect("same group");
    if !(u.is_subset_of(x) && v.is_subset_of(x) && uv.is_subset_of(x)) {
        return Err("U, V and UV are not all contained in X");
    }
    Ok(())
}

fn tally(report: &mut CheckReport, mut instances: Vec<Instance>) {
    report.instances_tested += instances.len() as u64;
    instances.sort_by(|a, b| a.sort_key.cmp(&b.sort_key));
    for inst in instances {
        if !inst.corrected_holds {
            report.bump("corrected_bound_failures", 1);
            let mut r = inst.record.clone();
            r.kind = "corrected-bound-violation".into();
            report.failures.push(r);
        }
        if !inst.stated_holds {
            report.bump("stated_bound_counterexamples", 1);
            if report.flagged.len() < MAX_LISTED_COUNTEREXAMPLES {
                let mut r = inst.record;
                r.kind = "stated-bound-counterexample".into();
                report.flagged.push(r);
            }
        }
    }
}

/// Evaluates both bounds on one instance. An instance that does not meet
/// the hypothesis is reported as skipped with the reason attached.
pub fn check_corollary(
    g: &GroupTable,
    u: &GroupSubset<'_, GroupTable>,
    v: &GroupSubset<'_, GroupTable>,
    x: &GroupSubset<'_, GroupTable>,
) -> Result<CheckReport> {
    let started = Instant::now();
    if !std::ptr::eq(u.group(), g) || !u.same_group(v) || !u.same_group(x) {
        return Err(Error::MixedGroups);
    }
    let mut report = CheckReport::new(NAME, g.label());
    report.bump("corrected_bound_failures", 0);
    report.bump("stated_bound_counterexamples", 0);
    if let Err(reason) = precondition(u, v, x) {
        report.instances_tested = 1;
        report.bump("skipped", 1);
        report.bump("precondition_unmet", 1);
        report
            .witnesses
            .push(Record::new("precondition-unmet").field("reason", reason));
        return Ok(report.finish(started));
    }
    tally(&mut report, vec![evaluate(u, v, x)]);
    Ok(report.finish(started))
}

/// Every pair of nonempty identity-free `U`, `V`, checked against both the
/// smallest admissible `X = U ∪ V ∪ UV` and `X = G ∖ {1}`. Pairs where `UV`
/// contains the identity admit no `X` and are counted as skipped.
pub fn sweep_corollary(g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let n = g.order();
    if n > cfg.caps.corollary_order {
        return Err(Error::size_limit(NAME, n, cfg.caps.corollary_order));
    }
    let mut report = CheckReport::new(NAME, g.label());
    report.bump("corrected_bound_failures", 0);
    report.bump("stated_bound_counterexamples", 0);
    // masks over non-identity elements, shifted past bit 0
    let pairs: Vec<(u64, u64)> = nonempty_masks(n - 1)
        .flat_map(|u| nonempty_masks(n - 1).map(move |v| (u << 1, v << 1)))
        .collect();
    let results = cfg.map(&pairs, |&(um, vm)| {
        let u = GroupSubset::from_mask(g, um);
        let v = GroupSubset::from_mask(g, vm);
        let uv = product_set(&u, &v).expect("same group");
        if uv.contains_identity() {
            return None;
        }
        let minimal = u.union(&v).and_then(|s| s.union(&uv)).expect("same group");
        let everything = GroupSubset::non_identity(g);
        let mut out = vec![evaluate(&u, &v, &minimal)];
        if minimal != everything {
            out.push(evaluate(&u, &v, &everything));
        }
        Some(out)
    });
    let mut instances = Vec::new();
    for r in results {
        match r {
            Some(batch) => instances.extend(batch),
            None => {
                report.instances_tested += 1;
                report.bump("skipped", 1);
                report.bump("precondition_unmet", 1);
            }
        }
    }
    tally(&mut report, instances);
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_cyclic;
    use crate::lab::Status;

    fn set<'g>(g: &'g GroupTable, xs: &[usize]) -> GroupSubset<'g, GroupTable> {
        GroupSubset::new(g, xs.iter().copied()).unwrap()
    }

    #[test]
    fn c3_refutes_stated_bound() {
        let c3 = make_cyclic(3).unwrap();
        let u = set(&c3, &[1]);
        let r = check_corollary(&c3, &u, &u, &set(&c3, &[1, 2])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.counter("stated_bound_counterexamples"), 1);
        assert_eq!(r.counter("corrected_bound_failures"), 0);
        let flag = &r.flagged[0];
        assert_eq!(flag.get("|X|"), Some("2"));
        assert_eq!(flag.get("|U|+|V|+1"), Some("3"));
    }

    #[test]
    fn c7_meets_both_bounds() {
        let c7 = make_cyclic(7).unwrap();
        let r =
            check_corollary(&c7, &set(&c7, &[1]), &set(&c7, &[2]), &set(&c7, &[1, 2, 3])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.counter("stated_bound_counterexamples"), 0);
    }

    #[test]
    fn unmet_precondition_is_skipped() {
        let c3 = make_cyclic(3).unwrap();
        let u = set(&c3, &[1]);
        // UV = {2} is not inside X
        let r = check_corollary(&c3, &u, &u, &set(&c3, &[1])).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.counter("precondition_unmet"), 1);
        let r = check_corollary(&c3, &u, &u, &set(&c3, &[0, 1, 2])).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn c5_full_complement_is_large_enough() {
        let c5 = make_cyclic(5).unwrap();
        let x = GroupSubset::non_identity(&c5);
        for um in 1u64..16 {
            let u = GroupSubset::from_mask(&c5, um << 1);
            let r = check_corollary(&c5, &u, &u, &x).unwrap();
            assert_ne!(r.status, Status::Fail);
        }
    }

    #[test]
    fn sweeps() {
        let cfg = LabConfig::default();
        let c3 = sweep_corollary(&make_cyclic(3).unwrap(), &cfg).unwrap();
        assert_eq!(c3.status, Status::Pass);
        assert!(c3.counter("stated_bound_counterexamples") >= 1);
        let first = &c3.flagged[0];
        assert_eq!(first.get("U"), Some("{1}"));
        assert_eq!(first.get("V"), Some("{1}"));
        assert_eq!(first.get("X"), Some("{1,2}"));

        let c2 = sweep_corollary(&make_cyclic(2).unwrap(), &cfg).unwrap();
        assert_eq!(c2.status, Status::Skipped);
        assert_eq!(c2.instances_tested, 1);

        let c5 = sweep_corollary(&make_cyclic(5).unwrap(), &cfg).unwrap();
        assert_eq!(c5.counter("corrected_bound_failures"), 0);
        assert_eq!(c5.status, Status::Pass);
    }
}
