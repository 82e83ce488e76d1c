use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};

/// Ascending ordinates of critical-line zeros.
///
/// File format: UTF-8 text, one decimal ordinate per line, `#` starts a
/// comment line, blank lines are ignored, LF or CRLF line endings.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: String,
}

/// Options of [`load_zero_table`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadOptions {
    /// Require the first ordinate to lie in (14, 15), as it does for every
    /// genuine table of zeta zeros.
    pub sanity_check: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self { sanity_check: true }
    }
}

impl ZeroTable {
    /// Builds a table from already-parsed ordinates, validating order.
    pub fn from_ordinates(ordinates: Vec<f64>, source: impl Into<String>) -> Result<Self> {
        for (i, w) in ordinates.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::Validation {
                    line: i + 2,
                    message: format!("ordinate {} does not exceed the previous {}", w[1], w[0]),
                });
            }
        }
        if let Some((i, &bad)) = ordinates
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::Validation {
                line: i + 1,
                message: format!("ordinate {bad} is not a positive finite number"),
            });
        }
        Ok(Self {
            ordinates,
            source: source.into(),
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Writes the table back in the file format, one shortest round-trip
    /// decimal per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.source.is_empty() {
            let _ = writeln!(out, "# source: {}", self.source);
        }
        for v in &self.ordinates {
            let _ = writeln!(out, "{v}");
        }
        out
    }
}

/// Parses a zero table from a text stream.
pub fn load_zero_table<R: Read>(
    reader: R,
    source: &str,
    options: LoadOptions,
) -> Result<ZeroTable> {
    let mut ordinates = Vec::new();
    let mut previous: Option<(f64, usize)> = None;
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            column: 1,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let column = line.len() - line.trim_start().len() + 1;
        let value: f64 = trimmed.parse().map_err(|_| Error::Parse {
            line: line_no,
            column,
            message: format!("expected a decimal ordinate, found {trimmed:?}"),
        })?;
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Validation {
                line: line_no,
                message: format!("ordinate {value} is not a positive finite number"),
            });
        }
        if let Some((prev, prev_line)) = previous {
            if value <= prev {
                return Err(Error::Validation {
                    line: line_no,
                    message: format!("ordinate {value} does not exceed {prev} on line {prev_line}"),
                });
            }
        }
        if options.sanity_check && previous.is_none() && !(14.0 < value && value < 15.0) {
            return Err(Error::Validation {
                line: line_no,
                message: format!(
                    "first ordinate {value} is not in (14, 15); not a table of zeta zeros \
                     (disable the sanity check to load it anyway)"
                ),
            });
        }
        previous = Some((value, line_no));
        ordinates.push(value);
    }
    Ok(ZeroTable {
        ordinates,
        source: source.to_string(),
    })
}

/// Reads a zero table from a file.
pub fn load_zero_table_file(path: &Path, options: LoadOptions) -> Result<ZeroTable> {
    let file = File::open(path)
        .map_err(|e| Error::Io(format!("cannot open zero table {}: {e}", path.display())))?;
    load_zero_table(file, &path.display().to_string(), options)
}

/// Number of ordinates `≤ energy` (closed upper bound).
pub fn count_zeros(table: &ZeroTable, energy: f64) -> usize {
    table.ordinates.partition_point(|&x| x <= energy)
}

/// The 100-zero table shipped with the crate.
pub fn bundled_zero_table() -> ZeroTable {
    const TEXT: &str = include_str!("../../data/zeros_100.txt");
    load_zero_table(
        TEXT.as_bytes(),
        "bundled:zeros_100.txt",
        LoadOptions::default(),
    )
    .expect("bundled zero table is valid")
}

/// Parses a table held in memory.
pub fn parse_zero_table(text: &str, options: LoadOptions) -> Result<ZeroTable> {
    load_zero_table(text.as_bytes(), "<memory>", options)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_lines() {
        let t =
            parse_zero_table("14.134725\n21.022040\n25.010858\n", LoadOptions::default()).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.ordinates()[1], 21.022040);
    }

    #[test]
    fn empty_is_valid() {
        assert!(parse_zero_table("", LoadOptions::default())
            .unwrap()
            .is_empty());
        assert!(
            parse_zero_table("# only a comment\n\n", LoadOptions::default())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn parse_error_cites_line() {
        let err = parse_zero_table("14.1\nabc\n", LoadOptions::default()).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 1,
                message: "expected a decimal ordinate, found \"abc\"".into()
            }
        );
        let err = parse_zero_table("14.1\n   x1\n", LoadOptions::default()).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 4,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn order_is_validated() {
        let err = parse_zero_table("14.1\n21.0\n21.0\n", LoadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Validation { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn crlf_and_comments() {
        let t = parse_zero_table(
            "# header\r\n14.5\r\n\r\n  # mid\r\n30.25\r\n",
            LoadOptions::default(),
        )
        .unwrap();
        assert_eq!(t.ordinates(), &[14.5, 30.25]);
    }

    #[test]
    fn sanity_gate() {
        let strict = LoadOptions::default();
        let lax = LoadOptions {
            sanity_check: false,
        };
        assert!(parse_zero_table("1.0\n2.0\n", strict).is_err());
        assert_eq!(parse_zero_table("1.0\n2.0\n", lax).unwrap().len(), 2);
    }

    #[test]
    fn closed_upper_bound() {
        let t = parse_zero_table("14.5\n21.0\n25.0\n", LoadOptions::default()).unwrap();
        assert_eq!(count_zeros(&t, 10.0), 0);
        assert_eq!(count_zeros(&t, 21.0), 2);
        assert_eq!(count_zeros(&t, 1e9), 3);
    }

    #[test]
    fn bundled_table() {
        let t = bundled_zero_table();
        assert_eq!(t.len(), 100);
        assert!((t.ordinates()[0] - 14.134_725_141_735).abs() < 1e-12);
    }
}
