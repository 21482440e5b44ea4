use std::collections::HashMap;

use super::{check_latin, LatinSquare, Loop};
use crate::error::{Error, Result};

/// Non-empty, non-comment lines with their 1-based line numbers.
fn table_rows(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                None
            } else {
                Some((i + 1, t.split_whitespace().collect()))
            }
        })
        .collect()
}

fn check_shape(rows: &[(usize, Vec<&str>)]) -> Result<usize> {
    let Some((_, first)) = rows.first() else {
        return Err(Error::Parse {
            line: 0,
            msg: "empty table".into(),
        });
    };
    let n = first.len();
    if rows.len() != n {
        let line = rows.last().map_or(0, |r| r.0);
        return Err(Error::Parse {
            line,
            msg: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    for (line, row) in rows {
        if row.len() != n {
            return Err(Error::Parse {
                line: *line,
                msg: format!("expected {n} tokens, found {}", row.len()),
            });
        }
    }
    Ok(n)
}

/// Elements are numbered in first-appearance order of the tokens of the
/// first row; row `i` and column `j` belong to element `i` and `j`.
pub(super) fn parse_loop(text: &str) -> Result<Loop> {
    let rows = table_rows(text);
    let n = check_shape(&rows)?;
    let mut index: HashMap<&str, usize> = HashMap::with_capacity(n);
    for tok in &rows[0].1 {
        let next = index.len();
        if index.insert(tok, next).is_some() {
            return Err(Error::NotLatinSquare(format!(
                "row 0 repeats token {tok:?}"
            )));
        }
    }
    let mut mul = Vec::with_capacity(n * n);
    for (line, row) in &rows {
        for tok in row {
            match index.get(tok) {
                Some(&v) => mul.push(v),
                None => {
                    return Err(Error::Parse {
                        line: *line,
                        msg: format!("token {tok:?} does not occur in the first row"),
                    })
                }
            }
        }
    }
    Loop::from_table(n, mul)
}

/// Parses a positional Latin square whose tokens are the integers `0..n`.
pub fn parse_latin_square(text: &str) -> Result<LatinSquare> {
    let rows = table_rows(text);
    let n = check_shape(&rows)?;
    let mut cells = Vec::with_capacity(n * n);
    for (line, row) in &rows {
        for tok in row {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: *line,
                msg: format!("bad token {tok:?}"),
            })?;
            cells.push(v);
        }
    }
    check_latin(n, &cells)?;
    Ok(LatinSquare::new_unchecked(n, cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parses_q1() {
        let q = Loop::parse(corpus::Q1_TEXT).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.identity(), 0);
    }

    #[test]
    fn trivial_table() {
        let q = Loop::parse("1\n").unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.identity(), 0);
    }

    #[test]
    fn quasigroup_without_identity() {
        // the ⊕ table used for the non-normal Comm(Q) example has no identity
        assert_eq!(Loop::parse(corpus::OPLUS_COMM_TEXT), Err(Error::NoIdentity));
        // while the ⊕ table of the non-solvable example is a copy of Z4
        let q = Loop::parse(corpus::OPLUS_Z4_TEXT).unwrap();
        assert!(q.is_abelian_group());
    }

    #[test]
    fn ragged_rows() {
        let err = Loop::parse("1 2\n2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Loop::parse("1 2\n2 1\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn unknown_token() {
        let err = Loop::parse("a b\nb c\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn repeated_token() {
        assert!(matches!(
            Loop::parse("1 2\n2 2\n"),
            Err(Error::NotLatinSquare(_))
        ));
    }

    #[test]
    fn comments_and_round_trip() {
        let text = "# a comment\n1 2 3\n2 3 1\n\n3 1 2\n";
        let q = Loop::parse(text).unwrap();
        assert_eq!(Loop::parse(&q.to_text()).unwrap(), q);
    }

    #[test]
    fn latin_square_tokens() {
        let sq = parse_latin_square("0 1\n1 0\n").unwrap();
        assert_eq!(sq.order(), 2);
        assert!(parse_latin_square("0 2\n2 0\n").is_err());
        assert!(parse_latin_square("0 x\n1 0\n").is_err());
    }
}
