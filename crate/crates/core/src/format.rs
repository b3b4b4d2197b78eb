//! The line-oriented `.sg` table format and `---`-separated catalogs.
//!
//! ```text
//! # comment
//! elements: a b c
//! zero: a
//! table:
//! a a a
//! a b a
//! a a c
//! ```

use std::collections::HashMap;

use crate::elemset::MAX_ORDER;
use crate::error::{NamedViolation, ParseError, ParseErrorKind, TableError};
use crate::semigroup::{check_associativity, Semigroup};

/// A syntactically valid document whose table has not been checked for
/// associativity yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDocument {
    pub names: Vec<String>,
    /// Row-major, `names.len()` squared entries.
    pub table: Vec<u8>,
    pub zero: Option<usize>,
    table_line: usize,
    zero_line: usize,
}

impl RawDocument {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Validates associativity and the declared zero.
    pub fn into_semigroup(self) -> Result<Semigroup, ParseError> {
        let n = self.order();
        if let Some(v) = check_associativity(n, &self.table).first() {
            let (i, j, k) = v.triple;
            let name = |x: usize| self.names[x].clone();
            return Err(ParseError {
                line: self.table_line,
                column: 1,
                kind: ParseErrorKind::NotAssociative(Box::new(NamedViolation {
                    a: name(i),
                    b: name(j),
                    c: name(k),
                    lhs: name(v.lhs),
                    rhs: name(v.rhs),
                    violation: *v,
                })),
            });
        }
        let zero_name = self.zero.map(|z| self.names[z].clone());
        let zero_line = self.zero_line;
        Semigroup::from_flat(self.names, self.table, self.zero).map_err(|e| match e {
            TableError::ZeroNotAbsorbing(_) => ParseError {
                line: zero_line,
                column: 1,
                kind: ParseErrorKind::ZeroNotAbsorbing(zero_name.unwrap_or_default()),
            },
            // Shape, range and names were enforced while parsing.
            other => unreachable!("parsed document failed validation: {other}"),
        })
    }
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut col = offset;
    for (b, ch) in s.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some((c, bs)) = start.take() {
                out.push((c, &s[bs..b]));
            }
        } else if start.is_none() {
            start = Some((col, b));
        }
    }
    if let Some((c, bs)) = start {
        out.push((c, &s[bs..]));
    }
    out
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('#')
}

/// Splits `line` at a `key:` prefix, returning the remainder and its
/// character offset.
fn keyed<'a>(line: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let lead = line.len() - line.trim_start().len();
    let rest = line[lead..].strip_prefix(key)?.strip_prefix(':')?;
    Some((rest, line[..lead].chars().count() + key.chars().count() + 1))
}

/// Parses one document; `first_line` is the 1-based number of `text`'s first
/// line within its file.
pub fn parse_document_at(text: &str, first_line: usize) -> Result<RawDocument, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut zero = None;
    let mut zero_line = 0;
    let mut table_line = None;
    let mut table: Vec<u8> = Vec::new();
    let mut rows = 0;
    let mut last_line = first_line;

    for (off, line) in text.lines().enumerate() {
        let ln = first_line + off;
        last_line = ln;
        if is_skippable(line) {
            continue;
        }
        if table_line.is_some() {
            let n = names.as_ref().map_or(0, Vec::len);
            if rows == n {
                return Err(err(
                    ln,
                    1,
                    ParseErrorKind::UnexpectedLine(line.trim().to_string()),
                ));
            }
            let toks = tokens(line, 0);
            if toks.len() != n {
                return Err(err(
                    ln,
                    1,
                    ParseErrorKind::RowLength {
                        expected: n,
                        found: toks.len(),
                    },
                ));
            }
            for (col, tok) in toks {
                match index.get(tok) {
                    Some(&v) => table.push(v as u8),
                    None => return Err(err(ln, col, ParseErrorKind::UnknownToken(tok.into()))),
                }
            }
            rows += 1;
            continue;
        }
        if let Some((rest, offset)) = keyed(line, "elements") {
            if names.is_some() {
                return Err(err(ln, 1, ParseErrorKind::DuplicateElements));
            }
            let toks = tokens(rest, offset);
            if toks.is_empty() {
                return Err(err(ln, 1, ParseErrorKind::NoElements));
            }
            if toks.len() > MAX_ORDER {
                return Err(err(ln, 1, ParseErrorKind::TooLarge(toks.len())));
            }
            let mut list = Vec::with_capacity(toks.len());
            for (col, tok) in toks {
                if index.insert(tok.to_string(), list.len()).is_some() {
                    return Err(err(ln, col, ParseErrorKind::DuplicateToken(tok.into())));
                }
                list.push(tok.to_string());
            }
            names = Some(list);
        } else if let Some((rest, offset)) = keyed(line, "zero") {
            if names.is_none() {
                return Err(err(ln, 1, ParseErrorKind::OutOfOrder("zero:")));
            }
            let toks = tokens(rest, offset);
            if toks.len() != 1 || zero.is_some() {
                return Err(err(ln, 1, ParseErrorKind::BadZero));
            }
            let (col, tok) = toks[0];
            match index.get(tok) {
                Some(&z) => zero = Some(z),
                None => return Err(err(ln, col, ParseErrorKind::UnknownToken(tok.into()))),
            }
            zero_line = ln;
        } else if let Some((rest, _)) = keyed(line, "table") {
            if names.is_none() {
                return Err(err(ln, 1, ParseErrorKind::OutOfOrder("table:")));
            }
            if !rest.trim().is_empty() {
                return Err(err(
                    ln,
                    1,
                    ParseErrorKind::UnexpectedLine(line.trim().to_string()),
                ));
            }
            table_line = Some(ln);
        } else {
            return Err(err(
                ln,
                1,
                ParseErrorKind::UnexpectedLine(line.trim().to_string()),
            ));
        }
    }

    let names = names.ok_or_else(|| err(first_line, 1, ParseErrorKind::MissingElements))?;
    let table_line = table_line.ok_or_else(|| err(last_line, 1, ParseErrorKind::MissingTable))?;
    if rows != names.len() {
        return Err(err(
            last_line,
            1,
            ParseErrorKind::RowCount {
                expected: names.len(),
                found: rows,
            },
        ));
    }
    Ok(RawDocument {
        names,
        table,
        zero,
        table_line,
        zero_line,
    })
}

pub fn parse_document(text: &str) -> Result<RawDocument, ParseError> {
    parse_document_at(text, 1)
}

/// Parses and validates a single `.sg` document.
pub fn parse_semigroup(text: &str) -> Result<Semigroup, ParseError> {
    parse_document(text)?.into_semigroup()
}

/// Splits a catalog on `---` lines, yielding each segment's text and first
/// line number. Segments holding only comments or blanks are dropped.
pub fn catalog_segments(text: &str) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 1;
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            out.push((std::mem::take(&mut cur), start));
            start = i + 2;
        } else {
            cur.push_str(line);
            cur.push('\n');
        }
    }
    out.push((cur, start));
    out.retain(|(seg, _)| !seg.lines().all(is_skippable));
    out
}

/// Parses a `---`-separated stream of `.sg` documents.
pub fn parse_catalog(text: &str) -> Result<Vec<Semigroup>, ParseError> {
    catalog_segments(text)
        .into_iter()
        .map(|(seg, start)| parse_document_at(&seg, start)?.into_semigroup())
        .collect()
}

/// Writes `s` in `.sg` form: single-space separators, no comments.
pub fn to_sg(s: &Semigroup) -> String {
    let mut out = format!("elements: {}\n", s.names().join(" "));
    if let Some(z) = s.zero() {
        out.push_str(&format!("zero: {}\n", s.name(z)));
    }
    out.push_str("table:\n");
    for row in s.rows() {
        let toks: Vec<&str> = row.iter().map(|&v| s.name(v)).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

/// Documents joined by `---` lines.
pub fn to_catalog<'a, I: IntoIterator<Item = &'a Semigroup>>(items: I) -> String {
    items
        .into_iter()
        .map(to_sg)
        .collect::<Vec<_>>()
        .join("---\n")
}

/// One table as nested index arrays, e.g. `[[0,0],[1,1]]`.
pub fn to_json_line(s: &Semigroup) -> String {
    serde_json::to_string(&s.rows()).expect("rows serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    const EXAMPLE2: &str = "# semilattice\nelements: a b c\ntable:\na a a\na b a\na a c\n";

    #[test]
    fn parses_example2() {
        let s = parse_semigroup(EXAMPLE2).unwrap();
        assert_eq!(s, s3());
        assert_eq!(s.zero(), Some(0));
    }

    #[test]
    fn parses_trivial() {
        let s = parse_semigroup("elements: e\ntable:\ne\n").unwrap();
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn rejects_example1() {
        let text = "elements: a b c d\ntable:\na c b d\nc d d d\nb d d d\nd d d d\n";
        let e = parse_semigroup(text).unwrap_err();
        match e.kind {
            ParseErrorKind::NotAssociative(v) => {
                assert_eq!((v.a.as_str(), v.b.as_str(), v.c.as_str()), ("a", "a", "b"));
                assert_eq!((v.lhs.as_str(), v.rhs.as_str()), ("c", "b"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reports_unknown_token_position() {
        let e = parse_semigroup("elements: a b\ntable:\na a\na  q\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 4));
        assert_eq!(e.kind, ParseErrorKind::UnknownToken("q".into()));
    }

    #[test]
    fn reports_non_square() {
        let e = parse_semigroup("elements: a b\ntable:\na a a\nb b\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(
            e.kind,
            ParseErrorKind::RowLength {
                expected: 2,
                found: 3
            }
        );
        let e = parse_semigroup("elements: a b\ntable:\na a\n").unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::RowCount {
                expected: 2,
                found: 1
            }
        );
        let e = parse_semigroup("elements: a b\ntable:\na a\nb b\nb b\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedLine(_)));
    }

    #[test]
    fn syntax_errors() {
        let e = parse_semigroup("table:\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::OutOfOrder("table:"));
        let e = parse_semigroup("elements: a a\n").unwrap_err();
        assert_eq!(
            (e.column, e.kind),
            (13, ParseErrorKind::DuplicateToken("a".into()))
        );
        let e = parse_semigroup("elements: a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingTable);
        let e = parse_semigroup("hello\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedLine(_)));
    }

    #[test]
    fn declared_zero() {
        let ok = parse_semigroup("elements: 0 e\nzero: 0\ntable:\n0 0\n0 0\n").unwrap();
        assert_eq!(ok, n2());
        let e = parse_semigroup("elements: x y\nzero: x\ntable:\nx x\ny y\n").unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (2, ParseErrorKind::ZeroNotAbsorbing("x".into()))
        );
    }

    #[test]
    fn serializes_fixed_layout() {
        assert_eq!(to_sg(&l2()), "elements: x y\ntable:\nx x\ny y\n");
        assert_eq!(
            to_sg(&s3()),
            "elements: a b c\nzero: a\ntable:\na a a\na b a\na a c\n"
        );
        assert_eq!(to_json_line(&l2()), "[[0,0],[1,1]]");
    }

    #[test]
    fn catalog_round_trip() {
        let items = vec![s3(), l2(), n2(), trivial()];
        let text = to_catalog(&items);
        assert_eq!(parse_catalog(&text).unwrap(), items);
    }

    #[test]
    fn catalog_errors_carry_absolute_lines() {
        let text = "elements: e\ntable:\ne\n---\n# second\nelements: a\ntable:\nz\n";
        let e = parse_catalog(text).unwrap_err();
        assert_eq!(e.line, 8);
    }
}
