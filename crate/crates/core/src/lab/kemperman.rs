//! If some `c ∈ AB` has exactly one factorization `c = ab`, then
//! `|AB| ≥ |A| + |B| − 1`.

use std::time::Instant;

use rand::Rng;

use super::report::{CheckReport, Record};
use super::{nonempty_masks, random_subset, LabConfig};
use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};
use crate::subset::{product_set, unique_products, GroupSubset};

const NAME: &str = "kemperman";

enum Outcome {
    Held(Option<Record>),
    Skipped,
    Violated(Record),
}

fn evaluate(a: &GroupSubset<'_, GroupTable>, b: &GroupSubset<'_, GroupTable>) -> Outcome {
    let unique = unique_products(a, b).expect("same group");
    let Some(first) = unique.first() else {
        return Outcome::Skipped;
    };
    let g = a.group();
    let ab = product_set(a, b).expect("same group");
    let (x, y) = &first.factorizations[0];
    let witness = Record::new("unique-product")
        .field("A", a)
        .field("B", b)
        .field("c", g.display_elem(&first.value))
        .field("a", g.display_elem(x))
        .field("b", g.display_elem(y))
        .field("|AB|", ab.len())
        .field("|A|+|B|-1", a.len() + b.len() - 1);
    if ab.len() + 1 >= a.len() + b.len() {
        Outcome::Held(Some(witness))
    } else {
        let mut w = witness;
        w.kind = "kemperman-violation".into();
        Outcome::Violated(w)
    }
}

fn tally(report: &mut CheckReport, outcomes: Vec<Outcome>, keep_witness: bool) {
    report.instances_tested += outcomes.len() as u64;
    for o in outcomes {
        match o {
            Outcome::Held(w) => {
                report.bump("hypothesis_met", 1);
                if keep_witness {
                    report.witnesses.extend(w);
                }
            }
            Outcome::Skipped => report.bump("skipped", 1),
            Outcome::Violated(r) => report.failures.push(r),
        }
    }
}

/// Checks one pair. The report is `skipped` when `AB` has no unique product.
pub fn check_kemperman(
    g: &GroupTable,
    a: &GroupSubset<'_, GroupTable>,
    b: &GroupSubset<'_, GroupTable>,
) -> Result<CheckReport> {
    let started = Instant::now();
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !std::ptr::eq(a.group(), g) || !a.same_group(b) {
        return Err(Error::MixedGroups);
    }
    let mut report = CheckReport::new(NAME, g.label());
    tally(&mut report, vec![evaluate(a, b)], true);
    Ok(report.finish(started))
}

/// All nonempty pairs `(A, B)` when `|G|` is within the exhaustive cap,
/// otherwise `cfg.samples` random pairs.
pub fn sweep_kemperman(g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let n = g.order();
    if n > cfg.caps.max_order {
        return Err(Error::size_limit(NAME, n, cfg.caps.max_order));
    }
    if n > 64 {
        return Err(Error::size_limit("bitmask sweep", n, 64));
    }
    let mut report = CheckReport::new(NAME, g.label());
    let pairs: Vec<(u64, u64)> = if n <= cfg.caps.exhaustive_sumset_order {
        report.bump("exhaustive", 1);
        nonempty_masks(n)
            .flat_map(|a| nonempty_masks(n).map(move |b| (a, b)))
            .collect()
    } else {
        report.seed = Some(cfg.seed);
        let mut rng = cfg.rng(NAME, &g.label());
        (0..cfg.samples)
            .map(|_| {
                let mut draw = || {
                    let k = rng.gen_range(1..=n);
                    let s = random_subset(&mut rng, 0, n, k);
                    s.iter().fold(0u64, |m, &i| m | 1 << i)
                };
                (draw(), draw())
            })
            .collect()
    };
    let outcomes = cfg.map(&pairs, |&(a, b)| {
        evaluate(&GroupSubset::from_mask(g, a), &GroupSubset::from_mask(g, b))
    });
    tally(&mut report, outcomes, false);
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
    fn single_instances() {
        let c6 = make_cyclic(6).unwrap();
        let r = check_kemperman(&c6, &set(&c6, &[0, 1]), &set(&c6, &[0, 2])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.witnesses[0].get("|AB|"), Some("4"));

        // singleton A: equality
        let r = check_kemperman(&c6, &set(&c6, &[3]), &set(&c6, &[1, 2, 5])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.witnesses[0].get("|AB|"), Some("3"));
        assert_eq!(r.witnesses[0].get("|A|+|B|-1"), Some("3"));

        let c2 = make_cyclic(2).unwrap();
        let full = set(&c2, &[0, 1]);
        let r = check_kemperman(&c2, &full, &full).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn c5_sweep_counts_every_pair() {
        let c5 = make_cyclic(5).unwrap();
        let r = sweep_kemperman(&c5, &LabConfig::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.instances_tested, 31 * 31);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn sampled_above_cap() {
        let c9 = make_cyclic(9).unwrap();
        let cfg = LabConfig {
            samples: 300,
            ..LabConfig::default()
        };
        let r = sweep_kemperman(&c9, &cfg).unwrap();
        assert_eq!(r.instances_tested, 300);
        assert_eq!(r.seed, Some(cfg.seed));
        assert_eq!(r.status, Status::Pass);
    }
}
