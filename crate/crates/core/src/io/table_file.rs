//! Cayley-table files.
//!
//! ```text
//! # Klein four-group
//! n: 4
//! names: e, a, b, c
//! table:
//! 0 1 2 3
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! ```
//!
//! `#` starts a comment. Entries and names may be separated by whitespace
//! or commas. `names` is optional; index 0 must be the identity.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};

pub fn read_table(path: impl AsRef<Path>) -> Result<GroupTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "table".into());
    Ok(parse_table(&text)?.with_label(label))
}

pub fn write_table(path: impl AsRef<Path>, group: &GroupTable) -> Result<()> {
    fs::write(path, format_table(group))?;
    Ok(())
}

pub fn format_table(group: &GroupTable) -> String {
    let mut out = format!("# {}\nn: {}\n", group.label(), group.order());
    if let Some(names) = group.names() {
        out.push_str("names: ");
        out.push_str(&names.join(", "));
        out.push('\n');
    }
    out.push_str("table:\n");
    for row in group.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Splits `line` into fields separated by whitespace or commas, returning
/// each field with its 1-based column.
fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        let sep = c.is_whitespace() || c == ',';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub fn parse_table(text: &str) -> Result<GroupTable> {
    let mut n: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut in_table = false;
    let mut table_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if in_table {
            let row = fields(line)
                .into_iter()
                .map(|(col, tok)| {
                    tok.parse::<usize>().map_err(|_| {
                        Error::parse(lineno, col, format!("'{tok}' is not an element index"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(n) = n {
                if row.len() != n {
                    return Err(Error::parse(
                        lineno,
                        1,
                        format!("row has {} entries, expected {n}", row.len()),
                    ));
                }
                if let Some(pos) = row.iter().position(|&x| x >= n) {
                    let col = fields(line)[pos].0;
                    return Err(Error::parse(
                        lineno,
                        col,
                        format!("index {} is outside [0, {n})", row[pos]),
                    ));
                }
            }
            rows.push(row);
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(Error::parse(lineno, col, "expected 'key: value'"));
        };
        let value_col = key.len() + 2 + value.len() - value.trim_start().len();
        match key.trim() {
            "n" => {
                let v = value.trim();
                let parsed = v.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(|| {
                    Error::parse(
                        lineno,
                        value_col,
                        format!("'{v}' is not a positive integer"),
                    )
                })?;
                n = Some(parsed);
            }
            "names" => {
                names = Some(
                    fields(value)
                        .into_iter()
                        .map(|(_, s)| s.to_string())
                        .collect(),
                );
            }
            "table" => {
                if !value.trim().is_empty() {
                    return Err(Error::parse(
                        lineno,
                        value_col,
                        "table rows start on the line after 'table:'",
                    ));
                }
                in_table = true;
                table_line = lineno;
            }
            other => {
                return Err(Error::parse(lineno, 1, format!("unknown field '{other}'")));
            }
        }
    }

    let n = n.ok_or_else(|| Error::parse(1, 1, "missing field 'n'"))?;
    if !in_table {
        return Err(Error::parse(1, 1, "missing field 'table'"));
    }
    if rows.len() != n {
        return Err(Error::parse(
            table_line,
            1,
            format!("table has {} rows, expected {n}", rows.len()),
        ));
    }
    if let Some(names) = &names {
        if names.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} names given for {n} elements",
                names.len()
            )));
        }
    }
    GroupTable::from_cayley_table(rows, names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::NotAGroupReason;
    use crate::group::catalog;

    #[test]
    fn parses_documented_example() {
        let text = "# Klein four-group\nn: 4\nnames: e, a, b, c\ntable:\n0 1 2 3\n1,0,3,2\n2 3 0 1  # row c\n3 2 1 0\n";
        let g = parse_table(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.names().unwrap()[3], "c");
        assert_eq!(g.mul(1, 2), 3);
    }

    #[test]
    fn rejects_non_identity_first_row() {
        let text = "n: 2\ntable:\n1 0\n0 1\n";
        assert!(matches!(
            parse_table(text),
            Err(Error::NotAGroup {
                reason: NotAGroupReason::WrongIdentity,
                ..
            })
        ));
    }

    #[test]
    fn positioned_errors() {
        let pos = |text: &str| match parse_table(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(pos("n: 2\ntable:\n0 1\n1 x\n"), (4, 3));
        assert_eq!(pos("n: 2\ntable:\n0 1\n1 5\n"), (4, 3));
        assert_eq!(pos("n: two\n"), (1, 4));
        assert_eq!(pos("size: 2\n"), (1, 1));
        assert_eq!(pos("n: 2\ntable:\n0 1\n"), (2, 1));
        assert_eq!(pos("table:\n0\n"), (1, 1));
    }

    #[test]
    fn catalog_round_trip() {
        for entry in catalog() {
            let text = format_table(&entry.group);
            let back = parse_table(&text).unwrap();
            assert_eq!(back.rows(), entry.group.rows(), "{}", entry.name);
        }
    }

    #[test]
    fn file_round_trip_keeps_names() {
        let rows = vec![vec![0, 1], vec![1, 0]];
        let g = GroupTable::from_cayley_table(rows, Some(vec!["e".into(), "t".into()])).unwrap();
        let dir = std::env::temp_dir().join(format!("gm-table-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c2.cayley");
        write_table(&path, &g).unwrap();
        let back = read_table(&path).unwrap();
        assert_eq!(back.rows(), g.rows());
        assert_eq!(back.names(), g.names());
        assert_eq!(back.label(), "c2");
        fs::remove_dir_all(&dir).unwrap();
    }
}
