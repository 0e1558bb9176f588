use std::collections::{BTreeSet, VecDeque};

use super::{Group, GroupClassification};
use crate::error::{Error, NotAGroupReason, Result};
use crate::subset::GroupSubset;

/// Index of an element of a finite group. Index 0 is always the identity.
pub type ElementId = usize;

/// Largest group order any constructor will build.
pub const DEFAULT_TABLE_CAP: usize = 5040;

/// Largest group order `enumerate_subgroups` accepts by default.
pub const DEFAULT_SUBGROUP_CAP: usize = 24;

/// Tables up to this order get the full cubic associativity scan; larger ones
/// use Light's test restricted to a generating set.
const FULL_ASSOCIATIVITY_CAP: usize = 256;

/// A finite group given by a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// Row-major, `table[i * order + j] = i * j`.
    table: Vec<ElementId>,
    inverses: Vec<ElementId>,
    names: Option<Vec<String>>,
    label: String,
}

impl GroupTable {
    /// Validates `rows` as the Cayley table of a group with identity at index 0.
    pub fn from_cayley_table(rows: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        Self::from_cayley_table_with_cap(rows, names, DEFAULT_TABLE_CAP)
    }

    pub fn from_cayley_table_with_cap(
        rows: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("table has no rows".into()));
        }
        if n > cap {
            return Err(Error::size_limit("group order", n, cap));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable(format!(
                    "row {i} contains {bad}, outside [0, {n})"
                )));
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::MalformedTable(format!(
                    "{} names given for {n} elements",
                    names.len()
                )));
            }
            let distinct: BTreeSet<&String> = names.iter().collect();
            if distinct.len() != n {
                return Err(Error::MalformedTable(
                    "element names are not distinct".into(),
                ));
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let at = |i: usize, j: usize| table[i * n + j];

        check_identity(n, &at)?;
        check_latin(n, &at)?;
        if n <= FULL_ASSOCIATIVITY_CAP {
            check_associative_full(n, &at)?;
        } else {
            check_associative_light(n, &at)?;
        }

        let mut inverses = vec![usize::MAX; n];
        for (i, inv) in inverses.iter_mut().enumerate() {
            let j = (0..n)
                .find(|&j| at(i, j) == 0)
                .expect("latin rows contain 0");
            if at(j, i) != 0 {
                return Err(Error::NotAGroup {
                    reason: NotAGroupReason::MissingInverse,
                    witness: [i, j, at(j, i)],
                });
            }
            *inv = j;
        }

        Ok(GroupTable {
            order: n,
            table,
            inverses,
            names,
            label: format!("G{n}"),
        })
    }

    /// Builds a table from a multiplication rule that is known to define a group.
    /// Runs the same validation as [`GroupTable::from_cayley_table`].
    pub(crate) fn from_fn(
        n: usize,
        label: impl Into<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if n > DEFAULT_TABLE_CAP {
            return Err(Error::size_limit("group order", n, DEFAULT_TABLE_CAP));
        }
        let rows = (0..n)
            .map(|i| (0..n).map(|j| mul(i, j)).collect())
            .collect();
        Ok(Self::from_cayley_table(rows, None)?.with_label(label))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverses[a]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Index of the element called `name`, if the table carries names.
    pub fn index_of_name(&self, name: &str) -> Option<ElementId> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn power(&self, a: ElementId, k: usize) -> ElementId {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: ElementId) -> usize {
        assert!(a < self.order, "element {a} out of range");
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The subgroup `{1, a, a^2, ...}` generated by `a`.
    pub fn cyclic_subgroup(&self, a: ElementId) -> GroupSubset<'_, GroupTable> {
        assert!(a < self.order, "element {a} out of range");
        let mut members = vec![0];
        let mut x = a;
        while x != 0 {
            members.push(x);
            x = self.mul(x, a);
        }
        GroupSubset::from_sorted_unchecked(self, {
            members.sort_unstable();
            members
        })
    }

    /// True iff `members` is nonempty and closed under the law and inverses.
    pub fn is_subgroup(&self, members: &[ElementId]) -> bool {
        if members.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.order];
        for &m in members {
            inside[m] = true;
        }
        members
            .iter()
            .all(|&a| inside[self.inverse(a)] && members.iter().all(|&b| inside[self.mul(a, b)]))
    }

    /// Closure of `seed` under the group law. In a finite group this is the
    /// subgroup generated by `seed` (plus the identity).
    pub fn generated_subgroup(&self, seed: &[ElementId]) -> Vec<ElementId> {
        let mut inside = vec![false; self.order];
        let mut list = vec![0];
        inside[0] = true;
        for &s in seed {
            if !inside[s] {
                inside[s] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            let mut j = 0;
            while j <= i {
                let y = list[j];
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !inside[z] {
                        inside[z] = true;
                        list.push(z);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// All subgroups, ordered by size and then lexicographically.
    pub fn enumerate_subgroups(&self) -> Result<Vec<GroupSubset<'_, GroupTable>>> {
        self.enumerate_subgroups_with_cap(DEFAULT_SUBGROUP_CAP)
    }

    pub fn enumerate_subgroups_with_cap(
        &self,
        cap: usize,
    ) -> Result<Vec<GroupSubset<'_, GroupTable>>> {
        if self.order > cap {
            return Err(Error::size_limit("subgroup enumeration", self.order, cap));
        }
        // Every subgroup is reached from the trivial one by repeatedly
        // adjoining a single element and closing.
        let mut seen: BTreeSet<Vec<ElementId>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let trivial = vec![0];
        seen.insert(trivial.clone());
        queue.push_back(trivial);
        while let Some(h) = queue.pop_front() {
            let mut inside = vec![false; self.order];
            for &x in &h {
                inside[x] = true;
            }
            for g in 0..self.order {
                if inside[g] {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(g);
                let k = self.generated_subgroup(&seed);
                if seen.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
        }
        let mut all: Vec<Vec<ElementId>> = seen.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(all
            .into_iter()
            .map(|m| GroupSubset::from_sorted_unchecked(self, m))
            .collect())
    }
}

impl Group for GroupTable {
    type Elem = ElementId;

    fn identity(&self) -> ElementId {
        0
    }

    fn op(&self, a: &ElementId, b: &ElementId) -> ElementId {
        self.mul(*a, *b)
    }

    fn contains(&self, x: &ElementId) -> bool {
        *x < self.order
    }

    fn classify(&self) -> GroupClassification {
        GroupClassification::finite(self.order)
    }

    fn display_elem(&self, x: &ElementId) -> String {
        match &self.names {
            Some(names) => names[*x].clone(),
            None => x.to_string(),
        }
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

fn check_identity(n: usize, at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    for j in 0..n {
        if at(0, j) != j {
            return Err(Error::NotAGroup {
                reason: NotAGroupReason::WrongIdentity,
                witness: [0, j, at(0, j)],
            });
        }
        if at(j, 0) != j {
            return Err(Error::NotAGroup {
                reason: NotAGroupReason::WrongIdentity,
                witness: [j, 0, at(j, 0)],
            });
        }
    }
    Ok(())
}

fn check_latin(n: usize, at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    // rows first, then columns; witness (i, j, k) has two equal entries
    for i in 0..n {
        let mut first = vec![usize::MAX; n];
        for j in 0..n {
            let v = at(i, j);
            if first[v] != usize::MAX {
                return Err(Error::NotAGroup {
                    reason: NotAGroupReason::NotLatinSquare,
                    witness: [i, first[v], j],
                });
            }
            first[v] = j;
        }
    }
    for j in 0..n {
        let mut first = vec![usize::MAX; n];
        for i in 0..n {
            let v = at(i, j);
            if first[v] != usize::MAX {
                return Err(Error::NotAGroup {
                    reason: NotAGroupReason::NotLatinSquare,
                    witness: [first[v], i, j],
                });
            }
            first[v] = i;
        }
    }
    Ok(())
}

fn check_associative_full(n: usize, at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    for i in 0..n {
        for j in 0..n {
            let ij = at(i, j);
            for k in 0..n {
                if at(ij, k) != at(i, at(j, k)) {
                    return Err(Error::NotAGroup {
                        reason: NotAGroupReason::NotAssociative,
                        witness: [i, j, k],
                    });
                }
            }
        }
    }
    Ok(())
}

/// Light's associativity test: the set of middle elements `y` for which
/// `(xy)z = x(yz)` holds for all `x, z` is closed under the law, so it is
/// enough to check `y` over a generating set.
fn check_associative_light(n: usize, at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut reached = vec![0];
    let mut gens = Vec::new();
    for g in 1..n {
        if inside[g] {
            continue;
        }
        gens.push(g);
        // left-normed products of generators
        let mut i = 0;
        inside[g] = true;
        reached.push(g);
        while i < reached.len() {
            let x = reached[i];
            for &h in &gens {
                let y = at(x, h);
                if !inside[y] {
                    inside[y] = true;
                    reached.push(y);
                }
            }
            i += 1;
        }
    }
    for &j in &gens {
        for i in 0..n {
            let ij = at(i, j);
            for k in 0..n {
                if at(ij, k) != at(i, at(j, k)) {
                    return Err(Error::NotAGroup {
                        reason: NotAGroupReason::NotAssociative,
                        witness: [i, j, k],
                    });
                }
            }
        }
    }
    Ok(())
}
