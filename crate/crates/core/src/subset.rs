//! Finite subsets of a group and the set arithmetic on them: product sets,
//! unique products, and the sets `E_a` / `V_S` that drive the matching
//! arguments.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};

/// A finite subset of a group. Members are kept sorted and distinct.
pub struct GroupSubset<'g, G: Group> {
    group: &'g G,
    members: Vec<G::Elem>,
}

impl<G: Group> Clone for GroupSubset<'_, G> {
    fn clone(&self) -> Self {
        GroupSubset {
            group: self.group,
            members: self.members.clone(),
        }
    }
}

impl<G: Group> fmt::Debug for GroupSubset<'_, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

impl<G: Group> PartialEq for GroupSubset<'_, G> {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.members == other.members
    }
}

impl<G: Group> Eq for GroupSubset<'_, G> {}

impl<G: Group> fmt::Display for GroupSubset<'_, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.group.display_elem(x))?;
        }
        f.write_str("}")
    }
}

impl<'g, G: Group> GroupSubset<'g, G> {
    pub fn new(group: &'g G, elems: impl IntoIterator<Item = G::Elem>) -> Result<Self> {
        let mut members: Vec<G::Elem> = elems.into_iter().collect();
        if let Some(bad) = members.iter().find(|x| !group.contains(x)) {
            return Err(Error::ElementOutOfRange(bad.to_string()));
        }
        members.sort_unstable();
        members.dedup();
        Ok(GroupSubset { group, members })
    }

    pub(crate) fn from_sorted_unchecked(group: &'g G, members: Vec<G::Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        GroupSubset { group, members }
    }

    pub fn empty(group: &'g G) -> Self {
        GroupSubset {
            group,
            members: Vec::new(),
        }
    }

    pub fn singleton(group: &'g G, x: G::Elem) -> Result<Self> {
        Self::new(group, [x])
    }

    pub fn group(&self) -> &'g G {
        self.group
    }

    pub fn members(&self) -> &[G::Elem] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, G::Elem> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &G::Elem) -> bool {
        self.members.binary_search(x).is_ok()
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(&self.group.identity())
    }

    pub fn same_group(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.members.iter().all(|x| other.contains(x))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_group(other) {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    fn from_unsorted(group: &'g G, mut members: Vec<G::Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        GroupSubset { group, members }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let all = self.members.iter().chain(&other.members).cloned().collect();
        Ok(Self::from_unsorted(self.group, all))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.filter(|x| other.contains(x)))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.filter(|x| !other.contains(x)))
    }

    pub fn filter(&self, mut keep: impl FnMut(&G::Elem) -> bool) -> Self {
        GroupSubset {
            group: self.group,
            members: self.members.iter().filter(|x| keep(x)).cloned().collect(),
        }
    }

    pub fn with(&self, x: G::Elem) -> Result<Self> {
        if !self.group.contains(&x) {
            return Err(Error::ElementOutOfRange(x.to_string()));
        }
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&x) {
            members.insert(pos, x);
        }
        Ok(GroupSubset {
            group: self.group,
            members,
        })
    }

    pub fn without(&self, x: &G::Elem) -> Self {
        self.filter(|y| y != x)
    }
}

impl<'g> GroupSubset<'g, GroupTable> {
    /// Subset whose members are the set bits of `mask`. Bits at or above
    /// the group order are ignored.
    pub fn from_mask(group: &'g GroupTable, mask: u64) -> Self {
        let n = group.order().min(64);
        GroupSubset {
            group,
            members: (0..n).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    /// Bitmask of the members. Only meaningful for groups of order at most 64.
    pub fn to_mask(&self) -> u64 {
        self.members
            .iter()
            .filter(|&&i| i < 64)
            .fold(0, |m, &i| m | 1 << i)
    }

    pub fn full(group: &'g GroupTable) -> Self {
        GroupSubset {
            group,
            members: (0..group.order()).collect(),
        }
    }

    /// `G \ {1}`.
    pub fn non_identity(group: &'g GroupTable) -> Self {
        GroupSubset {
            group,
            members: (1..group.order()).collect(),
        }
    }
}

/// A product `c` of `AB` together with every factorization `c = ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness<E> {
    pub value: E,
    pub factorizations: Vec<(E, E)>,
}

/// `AB = {ab : a in A, b in B}`.
pub fn product_set<'g, G: Group>(
    a: &GroupSubset<'g, G>,
    b: &GroupSubset<'g, G>,
) -> Result<GroupSubset<'g, G>> {
    a.check_same(b)?;
    let g = a.group;
    let products = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| g.op(x, y)))
        .collect();
    Ok(GroupSubset::from_unsorted(g, products))
}

/// Every element of `AB` with all of its factorizations, in ascending order
/// of the product. Factorizations are listed in scan order (by `a`, then `b`).
pub fn factorizations<G: Group>(
    a: &GroupSubset<'_, G>,
    b: &GroupSubset<'_, G>,
) -> Result<Vec<ProductWitness<G::Elem>>> {
    a.check_same(b)?;
    let g = a.group;
    let mut by_value: BTreeMap<G::Elem, Vec<(G::Elem, G::Elem)>> = BTreeMap::new();
    for x in a.iter() {
        for y in b.iter() {
            by_value
                .entry(g.op(x, y))
                .or_default()
                .push((x.clone(), y.clone()));
        }
    }
    Ok(by_value
        .into_iter()
        .map(|(value, factorizations)| ProductWitness {
            value,
            factorizations,
        })
        .collect())
}

/// Elements of `AB` with exactly one factorization `c = ab`.
pub fn unique_products<G: Group>(
    a: &GroupSubset<'_, G>,
    b: &GroupSubset<'_, G>,
) -> Result<Vec<ProductWitness<G::Elem>>> {
    Ok(factorizations(a, b)?
        .into_iter()
        .filter(|w| w.factorizations.len() == 1)
        .collect())
}

/// `E_a = {x in B : ax not in A}`, the elements `a` may be matched to.
pub fn candidate_set<'g, G: Group>(
    a_set: &GroupSubset<'g, G>,
    b_set: &GroupSubset<'g, G>,
    a: &G::Elem,
) -> Result<GroupSubset<'g, G>> {
    a_set.check_same(b_set)?;
    if !a_set.contains(a) {
        return Err(Error::NotInA(a_set.group.display_elem(a)));
    }
    let g = a_set.group;
    Ok(b_set.filter(|x| !a_set.contains(&g.op(a, x))))
}

/// `V_S = {x in B : sx in A for all s in S}`, the complement in `B` of the
/// union of the candidate sets `E_s` over `s` in `S`.
pub fn stable_set<'g, G: Group>(
    a_set: &GroupSubset<'g, G>,
    b_set: &GroupSubset<'g, G>,
    s_set: &GroupSubset<'g, G>,
) -> Result<GroupSubset<'g, G>> {
    a_set.check_same(b_set)?;
    a_set.check_same(s_set)?;
    if s_set.is_empty() {
        return Err(Error::EmptyS);
    }
    if let Some(s) = s_set.iter().find(|s| !a_set.contains(s)) {
        return Err(Error::NotInA(a_set.group.display_elem(s)));
    }
    let g = a_set.group;
    Ok(b_set.filter(|x| s_set.iter().all(|s| a_set.contains(&g.op(s, x)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dihedral, LatticeGroup, LatticePoint};

    fn set<'g>(g: &'g GroupTable, xs: &[usize]) -> GroupSubset<'g, GroupTable> {
        GroupSubset::new(g, xs.iter().copied()).unwrap()
    }

    #[test]
    fn product_set_examples() {
        let c4 = make_cyclic(4).unwrap();
        let ab = product_set(&set(&c4, &[1, 2]), &set(&c4, &[2, 3])).unwrap();
        assert_eq!(ab.members(), &[0, 1, 3]);
        let b = set(&c4, &[1, 3]);
        assert_eq!(product_set(&set(&c4, &[0]), &b).unwrap(), b);
        assert!(product_set(&GroupSubset::empty(&c4), &b)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn mixed_groups_rejected() {
        let g1 = make_cyclic(4).unwrap();
        let g2 = make_cyclic(4).unwrap();
        assert_eq!(
            product_set(&set(&g1, &[1]), &set(&g2, &[1])).unwrap_err(),
            Error::MixedGroups
        );
    }

    #[test]
    fn out_of_range_element() {
        let c4 = make_cyclic(4).unwrap();
        assert!(matches!(
            GroupSubset::new(&c4, [4]),
            Err(Error::ElementOutOfRange(_))
        ));
    }

    #[test]
    fn unique_product_examples() {
        let c5 = make_cyclic(5).unwrap();
        let a = set(&c5, &[1, 2]);
        let u = unique_products(&a, &a).unwrap();
        assert_eq!(
            u,
            vec![
                ProductWitness {
                    value: 2,
                    factorizations: vec![(1, 1)]
                },
                ProductWitness {
                    value: 4,
                    factorizations: vec![(2, 2)]
                },
            ]
        );

        let c2 = make_cyclic(2).unwrap();
        let full = set(&c2, &[0, 1]);
        assert!(unique_products(&full, &full).unwrap().is_empty());

        let d3 = make_dihedral(3).unwrap();
        let b = set(&d3, &[0, 2, 4, 5]);
        let single = set(&d3, &[3]);
        let u = unique_products(&single, &b).unwrap();
        assert_eq!(u.len(), b.len());
    }

    #[test]
    fn candidate_set_examples() {
        let c4 = make_cyclic(4).unwrap();
        let a = set(&c4, &[1, 2]);
        assert_eq!(candidate_set(&a, &a, &1).unwrap().members(), &[2]);

        let a = set(&c4, &[0, 2]);
        let b = set(&c4, &[1, 2]);
        assert_eq!(candidate_set(&a, &b, &0).unwrap().members(), &[1]);
        assert!(matches!(candidate_set(&a, &b, &1), Err(Error::NotInA(_))));

        // singleton with ab outside A
        let a = set(&c4, &[1]);
        let b = set(&c4, &[1]);
        assert_eq!(candidate_set(&a, &b, &1).unwrap().members(), &[1]);
    }

    #[test]
    fn stable_set_examples() {
        let c4 = make_cyclic(4).unwrap();
        let a = set(&c4, &[0, 2]);
        let b = set(&c4, &[1, 2]);
        assert_eq!(stable_set(&a, &b, &a).unwrap().members(), &[2]);
        assert_eq!(
            stable_set(&a, &b, &GroupSubset::empty(&c4)).unwrap_err(),
            Error::EmptyS
        );

        let c5 = make_cyclic(5).unwrap();
        let a = set(&c5, &[1, 2, 3, 4]);
        assert!(stable_set(&a, &a, &a).unwrap().is_empty());
    }

    #[test]
    fn lattice_minkowski_sum() {
        let z2 = LatticeGroup::new(2).unwrap();
        let p = |x, y| LatticePoint(vec![x, y]);
        let a = GroupSubset::new(&z2, [p(0, 0), p(1, 0)]).unwrap();
        let b = GroupSubset::new(&z2, [p(0, 1), p(1, 1), p(0, 0)]).unwrap();
        let ab = product_set(&a, &b).unwrap();
        assert_eq!(ab.members(), &[p(0, 0), p(0, 1), p(1, 0), p(1, 1), p(2, 1)]);
        assert_eq!(ab.to_string(), "{(0,0),(0,1),(1,0),(1,1),(2,1)}");
    }

    #[test]
    fn mask_round_trip() {
        let c6 = make_cyclic(6).unwrap();
        let s = GroupSubset::from_mask(&c6, 0b101010);
        assert_eq!(s.members(), &[1, 3, 5]);
        assert_eq!(s.to_mask(), 0b101010);
        assert_eq!(GroupSubset::non_identity(&c6).len(), 5);
    }
}
