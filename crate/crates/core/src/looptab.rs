//! The LOOPTAB v1 text format.
//!
//! ```text
//! looptab 1          # or `grouptab 1`
//! 3
//! 0 1 2              # element names, the first one is the identity
//! 0 1 2              # row r, token c is r ∘ c
//! 1 2 0
//! 2 0 1
//! ```
//!
//! `#` starts a comment and blank lines are ignored. The writer emits single
//! spaces and no comments beyond the ones it is given, so parse → write is
//! byte-stable on its own output.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::perm::Permutation;
use crate::table::CayleyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Loop,
    Group,
}

impl FileKind {
    fn magic(self) -> &'static str {
        match self {
            FileKind::Loop => "looptab 1",
            FileKind::Group => "grouptab 1",
        }
    }
}

/// A parsed file. The identity is element 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopFile {
    pub kind: FileKind,
    pub table: CayleyTable,
}

pub fn parse(input: &str) -> Result<LoopFile, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(ParseError::UnexpectedEof("header"))?;
    let header_tokens: Vec<&str> = header.split_whitespace().collect();
    let kind = match header_tokens.as_slice() {
        ["looptab", "1"] => FileKind::Loop,
        ["grouptab", "1"] => FileKind::Group,
        _ => {
            return Err(ParseError::BadHeader {
                line,
                found: header.to_string(),
            })
        }
    };

    let (line, count) = lines
        .next()
        .ok_or(ParseError::UnexpectedEof("element count"))?;
    let n: usize = match count.parse() {
        Ok(n) if n > 0 => n,
        _ => {
            return Err(ParseError::BadOrder {
                line,
                found: count.to_string(),
            })
        }
    };

    let (line, name_line) = lines
        .next()
        .ok_or(ParseError::UnexpectedEof("element names"))?;
    let names: Vec<String> = name_line.split_whitespace().map(str::to_string).collect();
    if names.len() != n {
        return Err(ParseError::WrongCount {
            line,
            expected: n,
            found: names.len(),
        });
    }
    // Validates names and catches duplicates before the rows are read.
    let probe = CayleyTable::new(names.clone(), vec![vec![0; n]; n])
        .map_err(|source| ParseError::Table { line, source })?;

    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.next().ok_or(ParseError::UnexpectedEof("table row"))?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != n {
            return Err(ParseError::WrongCount {
                line,
                expected: n,
                found: tokens.len(),
            });
        }
        let row = tokens
            .into_iter()
            .map(|t| {
                probe.index_of(t).ok_or_else(|| ParseError::UnknownName {
                    line,
                    name: t.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingContent { line });
    }
    let table =
        CayleyTable::new(names, rows).map_err(|source| ParseError::Table { line: 0, source })?;
    Ok(LoopFile { kind, table })
}

/// Writes `table` with `identity` moved to the front of the name list.
/// Each comment line is emitted as `# <text>` right after the magic line.
pub fn write(table: &CayleyTable, identity: usize, kind: FileKind, comments: &[String]) -> String {
    let table = if identity == 0 {
        std::borrow::Cow::Borrowed(table)
    } else {
        let n = table.order();
        // swap identity with 0
        let images = (0..n)
            .map(|i| {
                if i == identity {
                    0
                } else if i == 0 {
                    identity
                } else {
                    i
                }
            })
            .collect();
        let p = Permutation::from_images(images).expect("transposition");
        std::borrow::Cow::Owned(table.relabel(&p))
    };
    let mut out = String::new();
    out.push_str(kind.magic());
    out.push('\n');
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{}", table.order());
    out.push_str(&table.names().join(" "));
    out.push('\n');
    for r in 0..table.order() {
        let row: Vec<&str> = table.row(r).iter().map(|&v| table.name(v)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::error::TableError;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# z3\nlooptab 1\n\n3  # order\n0 1 2\n0 1 2\n1   2 0\n2 0 1\n";
        let f = parse(text).unwrap();
        assert_eq!(f.kind, FileKind::Loop);
        assert_eq!(&f.table, corpus::cyclic(3).table());
        assert_eq!(
            write(&f.table, 0, f.kind, &[]),
            "looptab 1\n3\n0 1 2\n0 1 2\n1 2 0\n2 0 1\n"
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse(""), Err(ParseError::UnexpectedEof(_))));
        assert!(matches!(
            parse("looptab 2\n1\ne\ne\n"),
            Err(ParseError::BadHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse("looptab 1\n0\n"),
            Err(ParseError::BadOrder { line: 2, .. })
        ));
        assert!(matches!(
            parse("looptab 1\n2\ne a b\n"),
            Err(ParseError::WrongCount {
                line: 3,
                expected: 2,
                found: 3
            })
        ));
        assert!(matches!(
            parse("looptab 1\n2\ne e\ne e\ne e\n"),
            Err(ParseError::Table {
                source: TableError::DuplicateName(_),
                ..
            })
        ));
        assert!(matches!(
            parse("grouptab 1\n2\ne a\ne a\na x\n"),
            Err(ParseError::UnknownName { line: 5, .. })
        ));
        assert!(matches!(
            parse("grouptab 1\n2\ne a\ne a\na\n"),
            Err(ParseError::WrongCount { line: 5, .. })
        ));
        assert!(matches!(
            parse("grouptab 1\n1\ne\ne\ne\n"),
            Err(ParseError::TrailingContent { line: 5 })
        ));
    }

    #[test]
    fn writer_puts_identity_first() {
        let g = corpus::cyclic(3);
        let p = crate::perm::Permutation::from_images(vec![2, 0, 1]).unwrap();
        let t = g.table().relabel(&p);
        // identity "0" now sits at index 2
        let text = write(&t, 2, FileKind::Group, &["note".into()]);
        assert!(text.starts_with("grouptab 1\n# note\n3\n0 "));
        let back = parse(&text).unwrap();
        assert_eq!(back.table.name(0), "0");
        assert_eq!(
            write(&back.table, 0, FileKind::Group, &["note".into()]),
            text
        );
    }
}
