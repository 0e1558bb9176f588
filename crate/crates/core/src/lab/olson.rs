//! For nonempty `A`, `B` there is a subgroup `H` and a nonempty `T ⊆ AB`
//! with `|T| ≥ |A| + |B| − |H|` and either `HT = T` or `TH = T`.
//!
//! For a fixed `H` and side, the `H`-invariant subsets of `AB` are exactly
//! the unions of cosets contained in `AB`, and the largest of them is the
//! union of all such cosets. Checking that one set per `(H, side)` therefore
//! decides whether any witness exists.

use std::fmt;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use super::report::{CheckReport, Record};
use super::{nonempty_masks, random_subset, LabConfig};
use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};
use crate::subset::{product_set, GroupSubset};

const NAME: &str = "olson";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `HT = T`: `T` is a union of cosets `Hx`.
    Left,
    /// `TH = T`: `T` is a union of cosets `xH`.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "HT=T",
            Side::Right => "TH=T",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OlsonWitness<'g> {
    pub h: GroupSubset<'g, GroupTable>,
    pub t: GroupSubset<'g, GroupTable>,
    pub side: Side,
}

impl<'g> OlsonWitness<'g> {
    /// Re-derives every witness property from the group table.
    pub fn is_valid(
        &self,
        a: &GroupSubset<'g, GroupTable>,
        b: &GroupSubset<'g, GroupTable>,
    ) -> bool {
        let g = a.group();
        let Ok(ab) = product_set(a, b) else {
            return false;
        };
        let invariant = match self.side {
            Side::Left => product_set(&self.h, &self.t),
            Side::Right => product_set(&self.t, &self.h),
        };
        g.is_subgroup(self.h.members())
            && !self.t.is_empty()
            && self.t.is_subset_of(&ab)
            && invariant.is_ok_and(|ht| ht == self.t)
            && self.t.len() + self.h.len() >= a.len() + b.len()
    }

    fn record(&self, kind: &str) -> Record {
        Record::new(kind)
            .field("H", &self.h)
            .field("T", &self.t)
            .field("side", self.side)
            .field("|H|", self.h.len())
            .field("|T|", self.t.len())
    }
}

/// Searches `subgroups` in order, left side before right, and returns the
/// first `(H, T, side)` that works, with `T` the largest invariant subset.
pub fn find_olson_witness<'g>(
    a: &GroupSubset<'g, GroupTable>,
    b: &GroupSubset<'g, GroupTable>,
    subgroups: &[GroupSubset<'g, GroupTable>],
) -> Option<OlsonWitness<'g>> {
    let g = a.group();
    let ab = product_set(a, b).ok()?;
    let target = a.len() + b.len();
    for h in subgroups {
        if ab.len() + h.len() < target {
            continue;
        }
        for side in [Side::Left, Side::Right] {
            let t = ab.filter(|x| {
                h.iter().all(|y| {
                    let p = match side {
                        Side::Left => g.mul(*y, *x),
                        Side::Right => g.mul(*x, *y),
                    };
                    ab.contains(&p)
                })
            });
            if !t.is_empty() && t.len() + h.len() >= target {
                return Some(OlsonWitness {
                    h: h.clone(),
                    t,
                    side,
                });
            }
        }
    }
    None
}

fn evaluate<'g>(
    a: &GroupSubset<'g, GroupTable>,
    b: &GroupSubset<'g, GroupTable>,
    subgroups: &[GroupSubset<'g, GroupTable>],
) -> std::result::Result<OlsonWitness<'g>, Record> {
    find_olson_witness(a, b, subgroups).ok_or_else(|| {
        Record::new("no-olson-witness")
            .field("A", a)
            .field("B", b)
            .field("|AB|", product_set(a, b).map(|s| s.len()).unwrap_or(0))
    })
}

pub fn check_olson(
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
    let subgroups = g.enumerate_subgroups()?;
    let mut report = CheckReport::new(NAME, g.label());
    report.instances_tested = 1;
    match evaluate(a, b, &subgroups) {
        Ok(w) => report.witnesses.push(
            w.record("olson-witness")
                .field("|A|+|B|-|H|", a.len() + b.len() - w.h.len()),
        ),
        Err(r) => report.failures.push(r),
    }
    Ok(report.finish(started))
}

/// All nonempty pairs within the exhaustive cap, `cfg.samples` random
/// pairs above it.
pub fn sweep_olson(g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let n = g.order();
    let subgroups = g.enumerate_subgroups_with_cap(cfg.caps.max_order.min(64))?;
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
                    random_subset(&mut rng, 0, n, k)
                        .iter()
                        .fold(0u64, |m, &i| m | 1 << i)
                };
                (draw(), draw())
            })
            .collect()
    };
    let outcomes = cfg.map(&pairs, |&(am, bm)| {
        let a = GroupSubset::from_mask(g, am);
        let b = GroupSubset::from_mask(g, bm);
        evaluate(&a, &b, &subgroups).map(|w| w.h.len() > 1)
    });
    report.instances_tested = outcomes.len() as u64;
    report.bump("nontrivial_h", 0);
    for o in outcomes {
        match o {
            Ok(true) => report.bump("nontrivial_h", 1),
            Ok(false) => {}
            Err(r) => report.failures.push(r),
        }
    }
    Ok(report.finish(started))
}
