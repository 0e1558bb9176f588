//! Standard finite groups with fixed element orderings.
//!
//! - `C<n>`: element `i` is the residue `i mod n`.
//! - `D<m>` (order `2m`): indices `0..m` are the rotations `r^i`, indices
//!   `m..2m` are the reflections `s r^i`, with `s r = r^-1 s`.
//! - `S<k>`: permutations of `{0..k-1}` in lexicographic order of their
//!   one-line notation; the product `pq` applies `q` first, then `p`.
//! - `Q8`: `1, -1, i, -i, j, -j, k, -k`.
//! - `G x H`: the pair `(g, h)` has index `g * |H| + h`.

use super::table::{GroupTable, DEFAULT_TABLE_CAP};
use super::Group;
use crate::error::{Error, Result};
use crate::util::next_permutation;

pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic group order must be at least 1".into(),
        ));
    }
    GroupTable::from_fn(n, format!("C{n}"), |i, j| (i + j) % n)
}

pub fn make_dihedral(m: usize) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "dihedral parameter must be at least 1".into(),
        ));
    }
    let n = 2 * m;
    if n > DEFAULT_TABLE_CAP {
        return Err(Error::size_limit("group order", n, DEFAULT_TABLE_CAP));
    }
    GroupTable::from_fn(n, format!("D{m}"), |a, b| {
        let (sa, ia) = (a >= m, a % m);
        let (sb, ib) = (b >= m, b % m);
        // (s^sa r^ia)(s^sb r^ib) = s^(sa+sb) r^(±ia + ib)
        let exponent = if sb { (m - ia + ib) % m } else { (ia + ib) % m };
        if sa != sb {
            m + exponent
        } else {
            exponent
        }
    })
}

pub fn make_symmetric(k: usize) -> Result<GroupTable> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "symmetric degree must be at least 1".into(),
        ));
    }
    let order: usize = (1..=k).product();
    if order > DEFAULT_TABLE_CAP {
        return Err(Error::size_limit("group order", order, DEFAULT_TABLE_CAP));
    }
    let mut perms = Vec::with_capacity(order);
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    GroupTable::from_fn(order, format!("S{k}"), |a, b| {
        let composed: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
        index(&composed)
    })
}

pub fn make_quaternion() -> Result<GroupTable> {
    // units 1, i, j, k; element index = 2 * unit + (negative as usize)
    const UNIT_PRODUCT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    GroupTable::from_fn(8, "Q8", |a, b| {
        let (na, ua) = (a % 2 == 1, a / 2);
        let (nb, ub) = (b % 2 == 1, b / 2);
        let (neg, u) = UNIT_PRODUCT[ua][ub];
        2 * u + usize::from(neg ^ na ^ nb)
    })
}

pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    if order > DEFAULT_TABLE_CAP {
        return Err(Error::size_limit("group order", order, DEFAULT_TABLE_CAP));
    }
    let label = format!("{}x{}", g.label(), h.label());
    GroupTable::from_fn(order, label, |a, b| {
        g.mul(a / n, b / n) * n + h.mul(a % n, b % n)
    })
}

/// A named group in the built-in test catalog.
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: GroupTable,
}

/// The built-in catalog: every cyclic group up to order 14, the small
/// non-cyclic abelian groups, dihedral groups up to `D7`, `Q8`, `S3`, `S4`.
pub fn catalog() -> Vec<CatalogEntry> {
    use crate::io::parse_group_spec;
    const NAMES: &[&str] = &[
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
        "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6", "D3", "D4", "D5", "D6", "D7", "Q8", "S3",
        "S4",
    ];
    NAMES
        .iter()
        .map(|&name| CatalogEntry {
            name,
            group: parse_group_spec(name)
                .and_then(|g| g.into_finite())
                .expect("catalog names are valid specs"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables() {
        let c5 = make_cyclic(5).unwrap();
        assert_eq!(c5.mul(2, 4), 1);
        assert_eq!(make_cyclic(1).unwrap().order(), 1);
        assert!(make_cyclic(0).is_err());
    }

    #[test]
    fn dihedral_is_nonabelian() {
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        // s r = r^-1 s: index m is s, index 1 is r
        assert_eq!(d3.mul(3, 1), d3.mul(2, 3));
        // reflections are involutions
        for s in 3..6 {
            assert_eq!(d3.element_order(s), 2);
        }
        assert!(make_dihedral(1).unwrap().is_abelian());
    }

    #[test]
    fn symmetric_orders() {
        for (k, n) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            assert_eq!(make_symmetric(k).unwrap().order(), n);
        }
        assert!(!make_symmetric(3).unwrap().is_abelian());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = make_quaternion().unwrap();
        // elements with x^2 = 1, minus the identity
        let involutions = (1..8).filter(|&x| q8.mul(x, x) == 0).count();
        assert_eq!(involutions, 1);
        assert!(!q8.is_abelian());
        // i * j = k
        assert_eq!(q8.mul(2, 4), 6);
    }

    #[test]
    fn klein_group() {
        let c2 = make_cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!((1..4).all(|x| v4.element_order(x) == 2));
        assert_eq!(v4.label(), "C2xC2");
    }

    #[test]
    fn lagrange_holds_across_catalog() {
        for entry in catalog() {
            let g = &entry.group;
            for a in 0..g.order() {
                assert_eq!(g.order() % g.element_order(a), 0, "{}", entry.name);
            }
        }
    }

    #[test]
    fn size_caps() {
        assert!(matches!(make_symmetric(8), Err(Error::SizeLimit { .. })));
        let s5 = make_symmetric(5).unwrap();
        assert!(matches!(
            direct_product(&s5, &s5),
            Err(Error::SizeLimit { .. })
        ));
    }
}
