//! Matchings from `A` to `B`: bijections `φ` with `aφ(a) ∉ A` for every `a`.
//!
//! Existence is decided by maximum bipartite matching on the matchability
//! graph (edge `(a, b)` iff `ab ∉ A`). When no perfect matching exists the
//! engine returns a Hall violator: a set `S ⊆ A` whose candidate sets cover
//! fewer than `|S|` elements of `B`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::subset::{candidate_set, GroupSubset};
use crate::util::next_permutation;

/// Largest `|A|` accepted by [`brute_force_matching`].
pub const BRUTE_FORCE_CAP: usize = 7;

/// Bipartite graph between `A` (left) and `B` (right); row `i` lists the
/// indices into `B` of the candidate set of the `i`-th element of `A`.
pub struct MatchabilityGraph<'g, G: Group> {
    left: GroupSubset<'g, G>,
    right: GroupSubset<'g, G>,
    adjacency: Vec<Vec<usize>>,
}

impl<'g, G: Group> MatchabilityGraph<'g, G> {
    pub fn left(&self) -> &GroupSubset<'g, G> {
        &self.left
    }

    pub fn right(&self) -> &GroupSubset<'g, G> {
        &self.right
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Row of the `i`-th left vertex as a subset of `B`.
    pub fn row(&self, i: usize) -> GroupSubset<'g, G> {
        GroupSubset::from_sorted_unchecked(
            self.right.group(),
            self.adjacency[i]
                .iter()
                .map(|&j| self.right.members()[j].clone())
                .collect(),
        )
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Kuhn's augmenting-path algorithm. Left vertices are processed in
    /// ascending order and each row is scanned in ascending order, so the
    /// result is deterministic. Returns, for every left vertex, its partner.
    fn maximum_matching(&self) -> Vec<Option<usize>> {
        let mut match_right: Vec<Option<usize>> = vec![None; self.right.len()];
        let mut visited = vec![false; self.right.len()];
        for u in 0..self.left.len() {
            visited.iter_mut().for_each(|v| *v = false);
            self.augment(u, &mut visited, &mut match_right);
        }
        let mut match_left = vec![None; self.left.len()];
        for (v, u) in match_right.iter().enumerate() {
            if let Some(u) = *u {
                match_left[u] = Some(v);
            }
        }
        match_left
    }

    fn augment(&self, u: usize, visited: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for &v in &self.adjacency[u] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let free = match match_right[v] {
                None => true,
                Some(w) => self.augment(w, visited, match_right),
            };
            if free {
                match_right[v] = Some(u);
                return true;
            }
        }
        false
    }

    /// König: the left vertices reachable by alternating paths from the
    /// unmatched left vertices have strictly fewer neighbours than members.
    fn hall_violator(&self, match_left: &[Option<usize>]) -> (Vec<usize>, Vec<usize>) {
        let mut match_right = vec![None; self.right.len()];
        for (u, v) in match_left.iter().enumerate() {
            if let Some(v) = *v {
                match_right[v] = Some(u);
            }
        }
        let mut seen_left = vec![false; self.left.len()];
        let mut seen_right = vec![false; self.right.len()];
        let mut queue: VecDeque<usize> = match_left
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(u, _)| u)
            .collect();
        for &u in &queue {
            seen_left[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if seen_right[v] {
                    continue;
                }
                seen_right[v] = true;
                let w = match_right[v].expect("maximum matching has no augmenting path");
                if !seen_left[w] {
                    seen_left[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let pick = |seen: &[bool]| {
            seen.iter()
                .enumerate()
                .filter(|(_, &s)| s)
                .map(|(i, _)| i)
                .collect()
        };
        (pick(&seen_left), pick(&seen_right))
    }
}

/// A bijection `A → B`, stored as `(a, φ(a))` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching<E> {
    pairs: Vec<(E, E)>,
}

impl<E: Clone + Ord> Matching<E> {
    pub fn from_pairs(pairs: Vec<(E, E)>) -> Self {
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(E, E)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn image(&self, a: &E) -> Option<&E> {
        self.pairs.iter().find(|(x, _)| x == a).map(|(_, y)| y)
    }
}

/// A set `S ⊆ A` whose neighbourhood `⋃ E_s` in `B` is smaller than `S`.
pub struct HallViolator<'g, G: Group> {
    pub subset: GroupSubset<'g, G>,
    pub neighborhood: GroupSubset<'g, G>,
    pub deficiency: usize,
}

impl<G: Group> fmt::Debug for HallViolator<'_, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HallViolator")
            .field("subset", &self.subset)
            .field("neighborhood", &self.neighborhood)
            .field("deficiency", &self.deficiency)
            .finish()
    }
}

impl<'g, G: Group> HallViolator<'g, G> {
    /// Recomputes the neighbourhood from scratch and confirms the deficiency.
    pub fn is_sound(&self, a: &GroupSubset<'g, G>, b: &GroupSubset<'g, G>) -> bool {
        if self.subset.is_empty() || !self.subset.is_subset_of(a) {
            return false;
        }
        let mut union = GroupSubset::empty(a.group());
        for s in self.subset.iter() {
            match candidate_set(a, b, s).and_then(|e| union.union(&e)) {
                Ok(u) => union = u,
                Err(_) => return false,
            }
        }
        union == self.neighborhood
            && union.len() < self.subset.len()
            && self.deficiency == self.subset.len() - union.len()
    }
}

pub enum MatchOutcome<'g, G: Group> {
    Matched(Matching<G::Elem>),
    Violator(HallViolator<'g, G>),
}

impl<'g, G: Group> MatchOutcome<'g, G> {
    pub fn is_matched(&self) -> bool {
        matches!(self, MatchOutcome::Matched(_))
    }

    pub fn matching(&self) -> Option<&Matching<G::Elem>> {
        match self {
            MatchOutcome::Matched(m) => Some(m),
            MatchOutcome::Violator(_) => None,
        }
    }

    pub fn violator(&self) -> Option<&HallViolator<'g, G>> {
        match self {
            MatchOutcome::Matched(_) => None,
            MatchOutcome::Violator(v) => Some(v),
        }
    }
}

impl<G: Group> fmt::Debug for MatchOutcome<'_, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchOutcome::Matched(m) => f.debug_tuple("Matched").field(m).finish(),
            MatchOutcome::Violator(v) => f.debug_tuple("Violator").field(v).finish(),
        }
    }
}

pub fn build_graph<'g, G: Group>(
    a: &GroupSubset<'g, G>,
    b: &GroupSubset<'g, G>,
) -> Result<MatchabilityGraph<'g, G>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !a.same_group(b) {
        return Err(Error::MixedGroups);
    }
    let g = a.group();
    let adjacency = a
        .iter()
        .map(|x| {
            b.iter()
                .enumerate()
                .filter(|(_, y)| !a.contains(&g.op(x, y)))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(MatchabilityGraph {
        left: a.clone(),
        right: b.clone(),
        adjacency,
    })
}

/// Returns a matching from `A` to `B` or a Hall violator proving none exists.
pub fn find_matching<'g, G: Group>(
    a: &GroupSubset<'g, G>,
    b: &GroupSubset<'g, G>,
) -> Result<MatchOutcome<'g, G>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !a.same_group(b) {
        return Err(Error::MixedGroups);
    }
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if b.contains_identity() {
        return Err(Error::IdentityInB);
    }
    let graph = build_graph(a, b)?;
    let match_left = graph.maximum_matching();
    if match_left.iter().all(Option::is_some) {
        let pairs = match_left
            .iter()
            .enumerate()
            .map(|(u, v)| (a.members()[u].clone(), b.members()[v.unwrap()].clone()))
            .collect();
        return Ok(MatchOutcome::Matched(Matching { pairs }));
    }
    let (left, right) = graph.hall_violator(&match_left);
    let subset = GroupSubset::from_sorted_unchecked(
        a.group(),
        left.iter().map(|&i| a.members()[i].clone()).collect(),
    );
    let neighborhood = GroupSubset::from_sorted_unchecked(
        a.group(),
        right.iter().map(|&j| b.members()[j].clone()).collect(),
    );
    let deficiency = subset.len() - neighborhood.len();
    Ok(MatchOutcome::Violator(HallViolator {
        subset,
        neighborhood,
        deficiency,
    }))
}

/// First reason a candidate matching is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingDefect<E> {
    WrongSize {
        pairs: usize,
        left: usize,
        right: usize,
    },
    NotInA(E),
    NotInB(E),
    RepeatedLeft(E),
    RepeatedRight(E),
    ProductInA {
        a: E,
        image: E,
        product: E,
    },
}

impl<E: fmt::Display> fmt::Display for MatchingDefect<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingDefect::WrongSize { pairs, left, right } => write!(
                f,
                "not bijective: {pairs} pairs for |A| = {left}, |B| = {right}"
            ),
            MatchingDefect::NotInA(x) => write!(f, "{x} is not in A"),
            MatchingDefect::NotInB(x) => write!(f, "{x} is not in B"),
            MatchingDefect::RepeatedLeft(x) => write!(f, "not bijective: {x} is mapped twice"),
            MatchingDefect::RepeatedRight(x) => {
                write!(f, "not bijective: {x} is hit twice")
            }
            MatchingDefect::ProductInA { a, image, product } => {
                write!(f, "{a}·{image} = {product} ∈ A")
            }
        }
    }
}

/// Checks that `m` is a bijection `A → B` with `aφ(a) ∉ A` for every pair.
pub fn verify_matching<G: Group>(
    a: &GroupSubset<'_, G>,
    b: &GroupSubset<'_, G>,
    m: &Matching<G::Elem>,
) -> Result<(), MatchingDefect<G::Elem>> {
    let mut seen_left = std::collections::BTreeSet::new();
    let mut seen_right = std::collections::BTreeSet::new();
    for (x, y) in &m.pairs {
        if !a.contains(x) {
            return Err(MatchingDefect::NotInA(x.clone()));
        }
        if !b.contains(y) {
            return Err(MatchingDefect::NotInB(y.clone()));
        }
        if !seen_left.insert(x) {
            return Err(MatchingDefect::RepeatedLeft(x.clone()));
        }
        if !seen_right.insert(y) {
            return Err(MatchingDefect::RepeatedRight(y.clone()));
        }
    }
    if m.pairs.len() != a.len() || a.len() != b.len() {
        return Err(MatchingDefect::WrongSize {
            pairs: m.pairs.len(),
            left: a.len(),
            right: b.len(),
        });
    }
    let g = a.group();
    for (x, y) in &m.pairs {
        let product = g.op(x, y);
        if a.contains(&product) {
            return Err(MatchingDefect::ProductInA {
                a: x.clone(),
                image: y.clone(),
                product,
            });
        }
    }
    Ok(())
}

/// Scans all `|A|!` bijections in lexicographic order of the image
/// sequence and returns the first valid one.
pub fn brute_force_matching<G: Group>(
    a: &GroupSubset<'_, G>,
    b: &GroupSubset<'_, G>,
) -> Result<Option<Matching<G::Elem>>> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() > BRUTE_FORCE_CAP {
        return Err(Error::size_limit(
            "brute-force matching",
            a.len(),
            BRUTE_FORCE_CAP,
        ));
    }
    if !a.same_group(b) {
        return Err(Error::MixedGroups);
    }
    if a.is_empty() {
        return Ok(None);
    }
    let g = a.group();
    let mut perm: Vec<usize> = (0..b.len()).collect();
    loop {
        let ok = a
            .iter()
            .zip(&perm)
            .all(|(x, &j)| !a.contains(&g.op(x, &b.members()[j])));
        if ok {
            let pairs = a
                .iter()
                .zip(&perm)
                .map(|(x, &j)| (x.clone(), b.members()[j].clone()))
                .collect();
            return Ok(Some(Matching { pairs }));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}
