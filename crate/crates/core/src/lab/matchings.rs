//! Checks about matchings themselves: self-matchings of identity-free sets,
//! the matching-property classification, and the subgroup construction that
//! breaks the property in every group that is neither trivial nor of prime
//! order.

use std::time::Instant;

use rand::Rng;

use super::report::{CheckReport, Record};
use super::{combinations, random_subset, LabConfig};
use crate::error::{Error, Result};
use crate::group::{ElementId, Group, GroupTable};
use crate::matching::{
    brute_force_matching, find_matching, verify_matching, HallViolator, MatchOutcome,
    BRUTE_FORCE_CAP,
};
use crate::subset::GroupSubset;

/// Largest `|A|` for which the converse direction (no self-matching when
/// `1 ∈ A`) is confirmed by brute force.
const ONLY_IF_MAX_SIZE: usize = 5;

fn violator_fields(r: Record, v: &HallViolator<'_, GroupTable>) -> Record {
    r.field("S", &v.subset)
        .field("N(S)", &v.neighborhood)
        .field("deficiency", v.deficiency)
}

/// Every nonempty identity-free `A` must admit a matching to itself; for
/// `A ∋ 1` with `|A| ≤ 5`, brute force must find none.
pub fn check_automatching(g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    const NAME: &str = "automatching";
    let started = Instant::now();
    let n = g.order();
    if n > cfg.caps.automatching_order {
        return Err(Error::size_limit(NAME, n, cfg.caps.automatching_order));
    }
    let mut report = CheckReport::new(NAME, g.label());
    // bit i of the mask stands for element i + 1
    let masks: Vec<u64> = (1..1u64 << (n - 1)).collect();
    let outcomes = cfg.map(&masks, |&m| {
        let a = GroupSubset::from_mask(g, m << 1);
        match find_matching(&a, &a) {
            Ok(MatchOutcome::Matched(mt)) => match verify_matching(&a, &a, &mt) {
                Ok(()) => None,
                Err(defect) => Some(
                    Record::new("invalid-matching")
                        .field("A", &a)
                        .field("defect", defect),
                ),
            },
            Ok(MatchOutcome::Violator(v)) => Some(violator_fields(
                Record::new("no-self-matching").field("A", &a),
                &v,
            )),
            Err(e) => Some(Record::new("engine-error").field("A", &a).field("error", e)),
        }
    });
    report.instances_tested = outcomes.len() as u64;
    report.failures.extend(outcomes.into_iter().flatten());

    let with_identity: Vec<u64> = (0..1u64 << (n - 1))
        .filter(|m| (m.count_ones() as usize) < ONLY_IF_MAX_SIZE)
        .map(|m| m << 1 | 1)
        .collect();
    let converse = cfg.map(&with_identity, |&m| {
        let a = GroupSubset::from_mask(g, m);
        let brute = brute_force_matching(&a, &a).expect("within brute-force cap");
        let engine = find_matching(&a, &a);
        match (brute, engine) {
            (None, Err(Error::IdentityInB)) => None,
            (brute, engine) => Some(
                Record::new("matching-with-identity")
                    .field("A", &a)
                    .field("brute_force", brute.is_some())
                    .field("engine", format!("{:?}", engine.map(|o| o.is_matched()))),
            ),
        }
    });
    report.bump("only_if_confirmed", 0);
    for c in converse {
        match c {
            None => report.bump("only_if_confirmed", 1),
            Some(r) => report.failures.push(r),
        }
    }
    Ok(report.finish(started))
}

/// The subgroup construction: a non-identity element `a` with `⟨a⟩ ≠ G`,
/// `A = ⟨a⟩`, an element `g ∉ A`, and `B = (A ∪ {g}) ∖ {1}`.
pub struct CounterexamplePair<'g> {
    pub a: GroupSubset<'g, GroupTable>,
    pub b: GroupSubset<'g, GroupTable>,
    pub generator: ElementId,
    pub outsider: ElementId,
    /// Hall violator returned by the engine; `None` would mean the engine
    /// found a matching, contradicting the construction.
    pub violator: Option<HallViolator<'g, GroupTable>>,
    /// Brute-force verdict that no bijection works, when `|A|` is within
    /// the brute-force cap.
    pub brute_force_confirmed: Option<bool>,
}

impl CounterexamplePair<'_> {
    pub fn is_confirmed(&self) -> bool {
        self.violator.is_some() && self.brute_force_confirmed != Some(false)
    }

    fn record(&self) -> Record {
        let g = self.a.group();
        let mut r = Record::new("counterexample-pair")
            .field("generator", g.display_elem(&self.generator))
            .field("outsider", g.display_elem(&self.outsider))
            .field("A", &self.a)
            .field("B", &self.b);
        if let Some(v) = &self.violator {
            r = violator_fields(r, v);
        }
        if let Some(bf) = self.brute_force_confirmed {
            r = r.field("brute_force_confirmed", bf);
        }
        r
    }
}

pub fn construct_counterexample(g: &GroupTable) -> Result<CounterexamplePair<'_>> {
    let n = g.order();
    let generator = (1..n).find(|&x| g.element_order(x) < n).ok_or_else(|| {
        Error::NotApplicable(format!(
            "every non-identity element generates {} (order {n})",
            g.label()
        ))
    })?;
    let a = g.cyclic_subgroup(generator);
    let outsider = (0..n)
        .find(|x| !a.contains(x))
        .expect("a proper subgroup misses some element");
    let b = a.with(outsider)?.without(&0);
    let violator = match find_matching(&a, &b)? {
        MatchOutcome::Matched(_) => None,
        MatchOutcome::Violator(v) => Some(v),
    };
    let brute_force_confirmed = (a.len() <= BRUTE_FORCE_CAP)
        .then(|| brute_force_matching(&a, &b).map(|m| m.is_none()))
        .transpose()?;
    Ok(CounterexamplePair {
        a,
        b,
        generator,
        outsider,
        violator,
        brute_force_confirmed,
    })
}

/// Report form of [`construct_counterexample`]: passes when the construction
/// applies and is confirmed, skipped when the group has prime or unit order.
pub fn check_counterexample(g: &GroupTable) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("counterexample", g.label());
    match construct_counterexample(g) {
        Ok(pair) => {
            report.instances_tested = 1;
            if pair.is_confirmed() {
                report.witnesses.push(pair.record());
            } else {
                let mut r = pair.record();
                r.kind = "construction-not-confirmed".into();
                report.failures.push(r);
            }
        }
        Err(Error::NotApplicable(why)) => {
            report
                .witnesses
                .push(Record::new("not-applicable").field("reason", why));
        }
        Err(e) => return Err(e),
    }
    Ok(report.finish(started))
}

type Pair = (Vec<ElementId>, Vec<ElementId>);

fn exhaustive_pairs(n: usize) -> Vec<Pair> {
    let all: Vec<usize> = (0..n).collect();
    let non_identity: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    for k in 1..n {
        let bs = combinations(&non_identity, k);
        for a in combinations(&all, k) {
            for b in &bs {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Tests every pair `(A, B)` with `|A| = |B|` and `1 ∉ B` (exhaustively up to
/// the pair cap, by sampling above it) and compares "every pair matched"
/// with the classification prediction. When the property fails, the least
/// failing pair by `|A|`, then `A`, then `B` is attached.
pub fn check_matching_property(g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    const NAME: &str = "matching-property";
    let started = Instant::now();
    let n = g.order();
    if n > cfg.caps.max_order {
        return Err(Error::size_limit(NAME, n, cfg.caps.max_order));
    }
    let mut report = CheckReport::new(NAME, g.label());
    let pairs = if n <= cfg.caps.exhaustive_pair_order {
        report.bump("exhaustive", 1);
        exhaustive_pairs(n)
    } else {
        report.seed = Some(cfg.seed);
        let mut rng = cfg.rng(NAME, &g.label());
        (0..cfg.samples)
            .map(|_| {
                let k = rng.gen_range(1..n);
                let a = random_subset(&mut rng, 0, n, k);
                let b = random_subset(&mut rng, 1, n, k);
                (a, b)
            })
            .collect()
    };
    let outcomes = cfg.map(&pairs, |(a, b)| {
        let a = GroupSubset::new(g, a.iter().copied()).expect("in range");
        let b = GroupSubset::new(g, b.iter().copied()).expect("in range");
        match find_matching(&a, &b).expect("well-formed pair") {
            MatchOutcome::Matched(_) => None,
            MatchOutcome::Violator(v) => Some(violator_fields(
                Record::new("failing-pair").field("A", &a).field("B", &b),
                &v,
            )),
        }
    });
    report.instances_tested = outcomes.len() as u64;

    let mut least: Option<(&Pair, Record)> = None;
    let mut failing = 0u64;
    for (pair, outcome) in pairs.iter().zip(outcomes) {
        if let Some(r) = outcome {
            failing += 1;
            let better = match &least {
                None => true,
                Some((p, _)) => (pair.0.len(), pair) < (p.0.len(), *p),
            };
            if better {
                least = Some((pair, r));
            }
        }
    }
    report.bump("failing_pairs", failing);
    report.bump("matched_pairs", report.instances_tested - failing);

    let predicted = g.classify().predicted_matching_property;
    let observed = failing == 0;
    if let Some((_, r)) = least {
        report.witnesses.push(r);
    }
    if report.instances_tested > 0 && observed != predicted {
        report.failures.push(
            Record::new("classification-mismatch")
                .field("predicted", predicted)
                .field("observed", observed)
                .field("failing_pairs", failing),
        );
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, make_cyclic, make_quaternion};
    use crate::lab::Status;

    #[test]
    fn automatching_small_groups() {
        let cfg = LabConfig::default();
        let c4 = make_cyclic(4).unwrap();
        let r = check_automatching(&c4, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.instances_tested, 7);
        let q8 = make_quaternion().unwrap();
        let r = check_automatching(&q8, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.instances_tested, 127);
        // subsets of size <= 5 containing 0: sum over j <= 4 of C(7, j)
        assert_eq!(r.counter("only_if_confirmed"), 1 + 7 + 21 + 35 + 35);
    }

    #[test]
    fn identity_singleton_has_no_self_matching() {
        let c3 = make_cyclic(3).unwrap();
        let a = GroupSubset::new(&c3, [0]).unwrap();
        assert_eq!(brute_force_matching(&a, &a).unwrap(), None);
    }

    #[test]
    fn counterexample_c4_and_c6() {
        let c4 = make_cyclic(4).unwrap();
        let p = construct_counterexample(&c4).unwrap();
        assert_eq!((p.generator, p.outsider), (2, 1));
        assert_eq!(p.a.members(), &[0, 2]);
        assert_eq!(p.b.members(), &[1, 2]);
        assert!(p.is_confirmed());
        assert_eq!(p.brute_force_confirmed, Some(true));

        let c6 = make_cyclic(6).unwrap();
        let p = construct_counterexample(&c6).unwrap();
        assert_eq!(p.generator, 2);
        assert_eq!(p.a.members(), &[0, 2, 4]);
        assert_eq!(p.b.members(), &[1, 2, 4]);
        assert!(p.is_confirmed());
    }

    #[test]
    fn counterexample_klein_and_prime() {
        let c2 = make_cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        let p = construct_counterexample(&v4).unwrap();
        assert_eq!(p.a.len(), 2);
        assert!(p.is_confirmed());
        for n in [1, 2, 5, 7] {
            let g = make_cyclic(n).unwrap();
            assert!(matches!(
                construct_counterexample(&g),
                Err(Error::NotApplicable(_))
            ));
        }
    }

    #[test]
    fn exhaustive_pair_count() {
        // sum over k of C(n, k) C(n-1, k) = C(2n-1, n-1)
        assert_eq!(exhaustive_pairs(4).len(), 35 - 1);
        assert_eq!(exhaustive_pairs(7).len(), 1716 - 1);
    }

    #[test]
    fn property_c5_holds_c4_fails() {
        let cfg = LabConfig::default();
        let c5 = make_cyclic(5).unwrap();
        let r = check_matching_property(&c5, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.counter("failing_pairs"), 0);

        let c4 = make_cyclic(4).unwrap();
        let r = check_matching_property(&c4, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.counter("failing_pairs") > 0);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn trivial_group_has_no_pairs() {
        let c1 = make_cyclic(1).unwrap();
        let r = check_matching_property(&c1, &LabConfig::default()).unwrap();
        assert_eq!(r.instances_tested, 0);
        assert_eq!(r.status, Status::Skipped);
    }
}
