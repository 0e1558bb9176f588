use proptest::prelude::*;

use group_matching::group::catalog;
use group_matching::io::{format_table, parse_table};
use group_matching::lab::{cross_validate_hall, find_olson_witness};
use group_matching::{
    brute_force_matching, candidate_set, find_matching, product_set, stable_set, unique_products,
    verify_matching, GroupSubset, GroupTable, LatticeGroup, LatticePoint, MatchOutcome,
};

fn groups() -> Vec<GroupTable> {
    catalog().into_iter().map(|e| e.group).collect()
}

/// A catalog index plus three raw masks, trimmed to the group order.
fn instance() -> impl Strategy<Value = (usize, u64, u64, u64)> {
    (0..groups().len(), any::<u64>(), any::<u64>(), any::<u64>())
}

fn trim(g: &GroupTable, mask: u64) -> u64 {
    let n = g.order();
    if n >= 64 {
        mask
    } else {
        mask & ((1u64 << n) - 1)
    }
}

/// A catalog group and `A`, `B` with `|A| = |B| <= cap` and `1 ∉ B`.
fn equal_pair(cap: usize) -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    let orders: Vec<usize> = groups().iter().map(GroupTable::order).collect();
    (1..orders.len()).prop_flat_map(move |gi| {
        let n = orders[gi];
        (1..=cap.min(n - 1)).prop_flat_map(move |k| {
            (
                Just(gi),
                proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k),
                proptest::sample::subsequence((1..n).collect::<Vec<_>>(), k),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn product_set_is_associative((gi, x, y, z) in instance()) {
        let gs = groups();
        let g = &gs[gi];
        let (a, b, c) = (
            GroupSubset::from_mask(g, trim(g, x)),
            GroupSubset::from_mask(g, trim(g, y)),
            GroupSubset::from_mask(g, trim(g, z)),
        );
        let left = product_set(&product_set(&a, &b).unwrap(), &c).unwrap();
        let right = product_set(&a, &product_set(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_set_matches_double_loop((gi, x, y, _z) in instance()) {
        let gs = groups();
        let g = &gs[gi];
        let (am, bm) = (trim(g, x), trim(g, y));
        let (a, b) = (GroupSubset::from_mask(g, am), GroupSubset::from_mask(g, bm));
        let n = g.order();
        let mut counts = vec![0usize; n];
        for i in (0..n).filter(|i| am >> i & 1 == 1) {
            for j in (0..n).filter(|j| bm >> j & 1 == 1) {
                counts[g.mul(i, j)] += 1;
            }
        }
        let ab: Vec<usize> = (0..n).filter(|&k| counts[k] > 0).collect();
        let unique: Vec<usize> = (0..n).filter(|&k| counts[k] == 1).collect();
        let prod = product_set(&a, &b).unwrap();
        prop_assert_eq!(prod.members(), &ab[..]);
        let got: Vec<usize> = unique_products(&a, &b).unwrap().iter().map(|w| w.value).collect();
        prop_assert_eq!(got, unique);
    }

    #[test]
    fn stable_set_complements_union_of_candidates((gi, x, y, z) in instance()) {
        let gs = groups();
        let g = &gs[gi];
        let a = GroupSubset::from_mask(g, trim(g, x) | 1);
        let b = GroupSubset::from_mask(g, trim(g, y));
        let s = GroupSubset::from_mask(g, trim(g, x) & trim(g, z) | 1);
        let mut union = GroupSubset::empty(g);
        for e in s.iter() {
            union = union.union(&candidate_set(&a, &b, e).unwrap()).unwrap();
        }
        let v = stable_set(&a, &b, &s).unwrap();
        prop_assert_eq!(v.clone(), b.difference(&union).unwrap());
        // V_S is the set of b with sb in A for every s in S
        for e in b.iter() {
            let stable = s.iter().all(|t| a.contains(&g.mul(*t, *e)));
            prop_assert_eq!(v.contains(e), stable);
        }
    }

    #[test]
    fn engine_agrees_with_brute_force((gi, am, bm) in equal_pair(6)) {
        let gs = groups();
        let g = &gs[gi];
        let a = GroupSubset::new(g, am).unwrap();
        let b = GroupSubset::new(g, bm).unwrap();
        let brute = brute_force_matching(&a, &b).unwrap();
        match find_matching(&a, &b).unwrap() {
            MatchOutcome::Matched(m) => {
                prop_assert!(verify_matching(&a, &b, &m).is_ok());
                prop_assert!(brute.is_some());
            }
            MatchOutcome::Violator(v) => {
                prop_assert!(v.is_sound(&a, &b));
                prop_assert!(brute.is_none());
            }
        }
    }

    #[test]
    fn hall_forms_agree((gi, am, bm) in equal_pair(5)) {
        let gs = groups();
        let g = &gs[gi];
        let a = GroupSubset::new(g, am).unwrap();
        let b = GroupSubset::new(g, bm).unwrap();
        prop_assert!(cross_validate_hall(&a, &b).unwrap().all_agree());
    }

    #[test]
    fn olson_witness_always_exists((gi, x, y, _z) in instance()) {
        let gs = groups();
        let g = &gs[gi];
        prop_assume!(g.order() <= 12);
        let a = GroupSubset::from_mask(g, trim(g, x) | 1);
        let b = GroupSubset::from_mask(g, trim(g, y) | 1);
        let subs = g.enumerate_subgroups().unwrap();
        let w = find_olson_witness(&a, &b, &subs);
        prop_assert!(w.is_some_and(|w| w.is_valid(&a, &b)));
    }

    #[test]
    fn identity_free_sets_match_themselves((gi, x, _y, _z) in instance()) {
        let gs = groups();
        let g = &gs[gi];
        let a = GroupSubset::from_mask(g, trim(g, x) & !1);
        prop_assume!(!a.is_empty());
        prop_assert!(find_matching(&a, &a).unwrap().is_matched());
    }

    #[test]
    fn lattice_sets_always_match(points in proptest::collection::btree_set((-5i64..=5, -5i64..=5), 1..8), shift in (1i64..4, -3i64..4)) {
        let z2 = LatticeGroup::new(2).unwrap();
        let a = GroupSubset::new(&z2, points.iter().map(|&(x, y)| LatticePoint(vec![x, y]))).unwrap();
        // translate A to a set B avoiding zero
        let b = GroupSubset::new(&z2, points.iter().map(|&(x, y)| LatticePoint(vec![x + 20 * shift.0, y + shift.1]))).unwrap();
        let outcome = find_matching(&a, &b).unwrap();
        let m = outcome.matching().expect("torsion-free groups always match");
        prop_assert!(verify_matching(&a, &b, m).is_ok());
    }
}

#[test]
fn catalog_tables_round_trip() {
    for g in groups() {
        let back = parse_table(&format_table(&g)).unwrap();
        assert_eq!(back.rows(), g.rows(), "{}", g.order());
    }
}
