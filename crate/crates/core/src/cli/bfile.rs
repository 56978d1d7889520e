//! The b-file interchange format: one `index value` pair per line, `#`
//! comments, decimal integers of any size.

use std::fmt::{self, Write};

use thiserror::Error;

use crate::exact::ExactInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: ExactInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct BFileError {
    pub line: usize,
    pub kind: BFileErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BFileErrorKind {
    BadIndex(String),
    BadValue(String),
    /// Not exactly two fields.
    FieldCount(usize),
    /// Index not greater than the previous one.
    NotIncreasing { previous: i64, found: i64 },
}

impl fmt::Display for BFileErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BFileErrorKind::BadIndex(tok) => write!(f, "invalid index `{tok}`"),
            BFileErrorKind::BadValue(tok) => write!(f, "invalid value `{tok}`"),
            BFileErrorKind::FieldCount(n) => write!(f, "expected `index value`, found {n} fields"),
            BFileErrorKind::NotIncreasing { previous, found } if previous == found => {
                write!(f, "duplicate index {found}")
            }
            BFileErrorKind::NotIncreasing { previous, found } => {
                write!(f, "index {found} does not increase past {previous}")
            }
        }
    }
}

/// Parses b-file text. Blank lines and lines starting with `#` are skipped;
/// indices must be strictly increasing. Line numbers in errors are 1-based.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>, BFileError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let err = |kind| BFileError { line, kind };
        if fields.len() != 2 {
            return Err(err(BFileErrorKind::FieldCount(fields.len())));
        }
        let index: i64 = fields[0].parse().map_err(|_| err(BFileErrorKind::BadIndex(fields[0].into())))?;
        let value: ExactInt = fields[1].parse().map_err(|_| err(BFileErrorKind::BadValue(fields[1].into())))?;
        if let Some(prev) = entries.last() {
            if index <= prev.index {
                return Err(err(BFileErrorKind::NotIncreasing { previous: prev.index, found: index }));
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Renders entries as b-file lines, each terminated by `\n`.
pub fn write_bfile<'a>(entries: impl IntoIterator<Item = &'a BFileEntry>) -> String {
    let mut out = String::new();
    for e in entries {
        writeln!(out, "{} {}", e.index, e.value).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn entry(index: i64, value: i64) -> BFileEntry {
        BFileEntry { index, value: value.into() }
    }

    #[test]
    fn parses_comments_and_whitespace() {
        let got = parse_bfile("# comment\n0 1\n  1   1  \n\n2 3\n").unwrap();
        assert_eq!(got, vec![entry(0, 1), entry(1, 1), entry(2, 3)]);
        assert_eq!(parse_bfile("").unwrap(), vec![]);
        assert_eq!(parse_bfile("0 1\r\n1 1\r\n").unwrap(), vec![entry(0, 1), entry(1, 1)]);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_bfile("1 1\n1 2").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.to_string(), "line 2: duplicate index 1");
        let err = parse_bfile("0 1\n1 1\n2 3\n3 x7\n").unwrap_err();
        assert_eq!(err, BFileError { line: 4, kind: BFileErrorKind::BadValue("x7".into()) });
        assert_eq!(parse_bfile("5 1\n2 1").unwrap_err().line, 2);
        assert_eq!(parse_bfile("0 1 2").unwrap_err().kind, BFileErrorKind::FieldCount(3));
        assert!(matches!(parse_bfile("a 1").unwrap_err().kind, BFileErrorKind::BadIndex(_)));
    }

    #[test]
    fn huge_values() {
        let digits = "9".repeat(3000);
        let got = parse_bfile(&format!("7 -{digits}\n")).unwrap();
        assert_eq!(got[0].value.to_string(), format!("-{digits}"));
    }

    proptest! {
        #[test]
        fn write_then_parse(values in prop::collection::vec(any::<i128>(), 0..40), start in -5i64..5) {
            let entries: Vec<BFileEntry> = values
                .iter()
                .enumerate()
                .map(|(i, v)| BFileEntry { index: start + i as i64, value: ExactInt::from(*v) })
                .collect();
            prop_assert_eq!(parse_bfile(&write_bfile(&entries)).unwrap(), entries);
        }
    }
}
