use std::fmt;

use super::{Group, GroupClassification};
use crate::error::{Error, Result};

/// A point of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The free abelian group `Z^d` under componentwise addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeGroup {
    dim: usize,
}

impl LatticeGroup {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "lattice dimension must be at least 1".into(),
            ));
        }
        Ok(LatticeGroup { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `k * x`, the k-th power in multiplicative notation.
    pub fn power(&self, x: &LatticePoint, k: i64) -> LatticePoint {
        LatticePoint(x.0.iter().map(|c| c * k).collect())
    }
}

impl Group for LatticeGroup {
    type Elem = LatticePoint;

    fn identity(&self) -> LatticePoint {
        LatticePoint::zero(self.dim)
    }

    fn op(&self, a: &LatticePoint, b: &LatticePoint) -> LatticePoint {
        LatticePoint(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.dim
    }

    fn classify(&self) -> GroupClassification {
        GroupClassification::torsion_free()
    }

    fn display_elem(&self, x: &LatticePoint) -> String {
        x.to_string()
    }

    fn label(&self) -> String {
        format!("Z^{}", self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_and_identity() {
        let z2 = LatticeGroup::new(2).unwrap();
        let a = LatticePoint(vec![1, -2]);
        let b = LatticePoint(vec![3, 5]);
        assert_eq!(z2.op(&a, &b), LatticePoint(vec![4, 3]));
        assert_eq!(z2.op(&a, &z2.identity()), a);
        assert!(z2.contains(&a));
        assert!(!z2.contains(&LatticePoint(vec![1])));
        assert_eq!(a.to_string(), "(1,-2)");
        assert!(LatticeGroup::new(0).is_err());
    }

    #[test]
    fn nonzero_points_have_no_finite_order() {
        let z3 = LatticeGroup::new(3).unwrap();
        let x = LatticePoint(vec![0, -1, 2]);
        for k in 1..50 {
            assert!(!z3.power(&x, k).is_zero());
        }
    }
}
