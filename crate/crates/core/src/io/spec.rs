use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::group::{
    direct_product, make_cyclic, make_dihedral, make_quaternion, make_symmetric, GroupTable,
    LatticeGroup,
};

/// Either kind of group the tools can work with.
#[derive(Debug, Clone)]
pub enum AnyGroup {
    Finite(GroupTable),
    Lattice(LatticeGroup),
}

impl AnyGroup {
    pub fn into_finite(self) -> Result<GroupTable> {
        match self {
            AnyGroup::Finite(g) => Ok(g),
            AnyGroup::Lattice(z) => Err(Error::NotApplicable(format!(
                "Z^{} is not a finite group",
                z.dim()
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecSource {
    Family(String),
    TableFile(PathBuf),
}

/// A command-line group argument: a family string such as `C2xC4`, or
/// `@path` naming a Cayley-table file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub source: SpecSource,
}

impl GroupSpec {
    pub fn parse(arg: &str) -> Self {
        let source = match arg.strip_prefix('@') {
            Some(path) => SpecSource::TableFile(PathBuf::from(path)),
            None => SpecSource::Family(arg.to_string()),
        };
        GroupSpec { source }
    }

    pub fn load(&self) -> Result<AnyGroup> {
        match &self.source {
            SpecSource::Family(s) => parse_group_spec(s),
            SpecSource::TableFile(path) => super::read_table(path).map(AnyGroup::Finite),
        }
    }
}

/// Parses `C<n>`, `D<m>`, `S<k>`, `Q8`, products joined by `x`
/// (e.g. `C2xC4`), or `Z^<d>`.
pub fn parse_group_spec(text: &str) -> Result<AnyGroup> {
    let s = text.trim();
    let offset = text.len() - text.trim_start().len();
    if s.is_empty() {
        return Err(Error::parse(1, 1, "empty group spec"));
    }
    if let Some(rest) = s.strip_prefix("Z^") {
        let d = parse_number(rest, offset + 3)?;
        return LatticeGroup::new(d).map(AnyGroup::Lattice);
    }
    let mut group: Option<GroupTable> = None;
    let mut column = offset + 1;
    for factor in s.split(['x', '×']) {
        let g = parse_factor(factor, column)?;
        group = Some(match group {
            None => g,
            Some(acc) => direct_product(&acc, &g)?,
        });
        column += factor.len() + 1;
    }
    Ok(AnyGroup::Finite(
        group.expect("split yields at least one factor"),
    ))
}

fn parse_factor(factor: &str, column: usize) -> Result<GroupTable> {
    let mut chars = factor.chars();
    let Some(head) = chars.next() else {
        return Err(Error::parse(1, column, "missing factor"));
    };
    let rest = chars.as_str();
    match head {
        'C' => make_cyclic(parse_number(rest, column + 1)?),
        'D' => make_dihedral(parse_number(rest, column + 1)?),
        'S' => make_symmetric(parse_number(rest, column + 1)?),
        'Q' if rest == "8" => make_quaternion(),
        'Q' => Err(Error::parse(1, column + 1, "only Q8 is supported")),
        'Z' => Err(Error::parse(
            1,
            column,
            "Z^d cannot appear in a product of finite groups",
        )),
        other => Err(Error::parse(
            1,
            column,
            format!("unknown group family '{other}' (expected C, D, S, Q8 or Z^d)"),
        )),
    }
}

fn parse_number(s: &str, column: usize) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::parse(1, column, "expected a number"));
    }
    if let Some(pos) = s.find(|c: char| !c.is_ascii_digit()) {
        return Err(Error::parse(1, column + pos, "expected a digit"));
    }
    s.parse()
        .map_err(|_| Error::parse(1, column, format!("number '{s}' is out of range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    fn finite(s: &str) -> GroupTable {
        parse_group_spec(s).unwrap().into_finite().unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(finite("C4").order(), 4);
        assert_eq!(finite("D5").order(), 10);
        assert_eq!(finite("S3").order(), 6);
        assert_eq!(finite("Q8").order(), 8);
        let p = finite("C2xC4");
        assert_eq!(p.order(), 8);
        assert_eq!(p.label(), "C2xC4");
        assert_eq!(finite("C2xC2xC2").order(), 8);
        match parse_group_spec("Z^3").unwrap() {
            AnyGroup::Lattice(z) => assert_eq!(z.dim(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_columns() {
        let err = |s: &str| match parse_group_spec(s) {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("{s}: expected parse error, got {other:?}"),
        };
        assert_eq!(err("X4"), 1);
        assert_eq!(err("C2xK3"), 4);
        assert_eq!(err("C2xC"), 5);
        assert_eq!(err("C4a"), 3);
        assert_eq!(err("Q7"), 2);
        assert_eq!(err("C2xZ^2"), 4);
        assert_eq!(err(""), 1);
    }

    #[test]
    fn file_specs() {
        assert_eq!(
            GroupSpec::parse("@groups/s3.cayley").source,
            SpecSource::TableFile("groups/s3.cayley".into())
        );
        assert_eq!(
            GroupSpec::parse("C4").source,
            SpecSource::Family("C4".into())
        );
    }
}
