//! Groups: finite groups stored as Cayley tables, the standard small
//! families, and the integer lattices `Z^d` used for torsion-free testing.

mod families;
mod lattice;
mod table;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use serde::Serialize;

pub use families::{
    catalog, direct_product, make_cyclic, make_dihedral, make_quaternion, make_symmetric,
    CatalogEntry,
};
pub use lattice::{LatticeGroup, LatticePoint};
pub use table::{ElementId, GroupTable, DEFAULT_SUBGROUP_CAP, DEFAULT_TABLE_CAP};

/// The interface the subset algebra and the matching engine need from a group.
///
/// Implementations are immutable after construction, so a group can be
/// shared read-only between worker threads.
pub trait Group: Sync {
    type Elem: Clone + Ord + Hash + Debug + Display + Send + Sync;

    fn identity(&self) -> Self::Elem;

    /// The group law, written multiplicatively.
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn contains(&self, x: &Self::Elem) -> bool;

    fn classify(&self) -> GroupClassification;

    fn display_elem(&self, x: &Self::Elem) -> String;

    /// Short human-readable label, e.g. `C4` or `Z^2`.
    fn label(&self) -> String;
}

/// Where a group sits with respect to the matching-property classification:
/// a group has the property iff it is torsion-free or cyclic of prime order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupClassification {
    pub is_trivial: bool,
    pub is_cyclic_prime: bool,
    pub is_torsion_free: bool,
    pub predicted_matching_property: bool,
}

impl GroupClassification {
    pub(crate) fn finite(order: usize) -> Self {
        let is_trivial = order == 1;
        let is_cyclic_prime = is_prime(order);
        GroupClassification {
            is_trivial,
            is_cyclic_prime,
            // the trivial group is the only torsion-free finite group
            is_torsion_free: is_trivial,
            predicted_matching_property: is_trivial || is_cyclic_prime,
        }
    }

    pub(crate) fn torsion_free() -> Self {
        GroupClassification {
            is_trivial: false,
            is_cyclic_prime: false,
            is_torsion_free: true,
            predicted_matching_property: true,
        }
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn classification_of_cyclic_groups() {
        for n in 1..=30 {
            let c = make_cyclic(n).unwrap().classify();
            assert_eq!(
                c.predicted_matching_property,
                n == 1 || is_prime(n),
                "n={n}"
            );
        }
        assert!(
            make_cyclic(5)
                .unwrap()
                .classify()
                .predicted_matching_property
        );
        assert!(
            !make_cyclic(4)
                .unwrap()
                .classify()
                .predicted_matching_property
        );
        let trivial = make_cyclic(1).unwrap().classify();
        assert!(trivial.is_trivial && !trivial.is_cyclic_prime);
    }

    #[test]
    fn lattice_is_torsion_free() {
        let z2 = LatticeGroup::new(2).unwrap().classify();
        assert!(z2.is_torsion_free);
        assert!(z2.predicted_matching_property);
    }
}
