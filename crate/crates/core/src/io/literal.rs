use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, LatticeGroup, LatticePoint};
use crate::subset::GroupSubset;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn column(&self) -> usize {
        self.src[..self.pos].chars().count() + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(1, self.column(), message)
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// A run of characters that are not delimiters.
    fn token(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let column = self.column();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| c.is_whitespace() || matches!(c, ',' | '{' | '}' | '(' | ')'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected an element"));
        }
        self.pos += len;
        Ok((column, &rest[..len]))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    /// `{ item, item, ... }` with `{}` allowed.
    fn braced_list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('{')?;
        let mut out = Vec::new();
        if self.eat('}') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat('}') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }
}

/// Parses `{0,2,4}`. Elements may be written by index or, when the table
/// carries names, by name.
pub fn parse_finite_subset<'g>(
    group: &'g GroupTable,
    text: &str,
) -> Result<GroupSubset<'g, GroupTable>> {
    let mut cur = Cursor::new(text);
    let elems = cur.braced_list(|cur| {
        let (column, tok) = cur.token()?;
        let id: Option<ElementId> = group
            .index_of_name(tok)
            .or_else(|| tok.parse().ok().filter(|&i: &usize| i < group.order()));
        id.ok_or_else(|| {
            Error::parse(
                1,
                column,
                format!(
                    "'{tok}' is not an element of a group of order {}",
                    group.order()
                ),
            )
        })
    })?;
    cur.finish()?;
    GroupSubset::new(group, elems)
}

/// Parses `{(0,0),(1,-2)}`.
pub fn parse_lattice_subset<'g>(
    group: &'g LatticeGroup,
    text: &str,
) -> Result<GroupSubset<'g, LatticeGroup>> {
    let mut cur = Cursor::new(text);
    let points = cur.braced_list(|cur| {
        cur.skip_ws();
        let start = cur.column();
        cur.expect('(')?;
        let mut coords = Vec::new();
        loop {
            let (column, tok) = cur.token()?;
            let c: i64 = tok
                .parse()
                .map_err(|_| Error::parse(1, column, format!("'{tok}' is not an integer")))?;
            coords.push(c);
            if cur.eat(')') {
                break;
            }
            cur.expect(',')?;
        }
        if coords.len() != group.dim() {
            return Err(Error::parse(
                1,
                start,
                format!(
                    "point has {} coordinates, expected {}",
                    coords.len(),
                    group.dim()
                ),
            ));
        }
        Ok(LatticePoint(coords))
    })?;
    cur.finish()?;
    GroupSubset::new(group, points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_cyclic;

    fn column_of(r: Result<impl std::fmt::Debug>) -> usize {
        match r {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn finite_literals() {
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(
            parse_finite_subset(&c6, "{0,2,4}").unwrap().members(),
            &[0, 2, 4]
        );
        assert_eq!(
            parse_finite_subset(&c6, " { 4 , 2 ,2 } ")
                .unwrap()
                .members(),
            &[2, 4]
        );
        assert!(parse_finite_subset(&c6, "{}").unwrap().is_empty());
        assert_eq!(column_of(parse_finite_subset(&c6, "{0,7}")), 4);
        assert_eq!(column_of(parse_finite_subset(&c6, "{0,2")), 5);
        assert_eq!(column_of(parse_finite_subset(&c6, "0,2}")), 1);
        assert_eq!(column_of(parse_finite_subset(&c6, "{1} x")), 5);
    }

    #[test]
    fn named_elements() {
        let rows = vec![vec![0, 1], vec![1, 0]];
        let g = GroupTable::from_cayley_table(rows, Some(vec!["e".into(), "t".into()])).unwrap();
        assert_eq!(parse_finite_subset(&g, "{t}").unwrap().members(), &[1]);
        assert_eq!(parse_finite_subset(&g, "{e,1}").unwrap().members(), &[0, 1]);
    }

    #[test]
    fn lattice_literals() {
        let z2 = LatticeGroup::new(2).unwrap();
        let s = parse_lattice_subset(&z2, "{(0,0), (1,-2)}").unwrap();
        assert_eq!(
            s.members(),
            &[LatticePoint(vec![0, 0]), LatticePoint(vec![1, -2])]
        );
        assert_eq!(column_of(parse_lattice_subset(&z2, "{(0,0,1)}")), 2);
        assert_eq!(column_of(parse_lattice_subset(&z2, "{(0,a)}")), 5);
        assert!(parse_lattice_subset(&z2, "{}").unwrap().is_empty());
    }
}
