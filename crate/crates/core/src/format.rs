//! Text formats for schemes.
//!
//! The canonical form is line oriented:
//!
//! ```text
//! n=5
//! 1: 2-4 3-5
//! 2: 1-3 4-5
//! 3: 1-4 2-5
//! 4: 1-5 2-3
//! 5: 1-2 3-4
//! ```
//!
//! For `n <= 9` the compact double-digit form `24 35 / 13 45 / 14 25 / 15 23
//! / 12 34` is also accepted: one group per axis, separated by `/`, `|` or
//! newlines. Blank lines and lines starting with `#` are ignored in both.

use crate::error::{Error, Result};
use crate::scheme::{feasibility, validate_scheme, Scheme};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// `(line_no, line)` for lines carrying content, 1-based.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Parses either text form; the compact form infers `n` from its group count.
pub fn parse_scheme_text(input: &str) -> Result<Scheme> {
    match content_lines(input).next() {
        None => Err(syntax(1, 1, "empty scheme")),
        Some((_, first)) if first.trim_start().starts_with("n=") => parse_canonical(input),
        Some(_) => parse_compact(input, None),
    }
}

fn parse_canonical(input: &str) -> Result<Scheme> {
    let mut lines = content_lines(input);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, 1, "empty scheme"))?;
    let value = header.trim().strip_prefix("n=").expect("checked by caller");
    let hcol = header.find("n=").unwrap_or(0) + 3;
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| syntax(hline, hcol, format!("bad dimension `{}`", value.trim())))?;
    feasibility(n)?;

    let mut raw: Vec<Option<Vec<(usize, usize)>>> = vec![None; n];
    for (line_no, line) in lines {
        let (label, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(line_no, 1, "expected `<axis>: <pairs>`"))?;
        let lcol = line.len() - line.trim_start().len() + 1;
        let axis: usize = label
            .trim()
            .parse()
            .map_err(|_| syntax(line_no, lcol, format!("bad axis label `{}`", label.trim())))?;
        if axis == 0 || axis > n {
            return Err(syntax(
                line_no,
                lcol,
                format!("axis {axis} out of range 1..={n}"),
            ));
        }
        if raw[axis - 1].is_some() {
            return Err(syntax(line_no, lcol, format!("axis {axis} listed twice")));
        }
        let body_offset = label.len() + 1;
        let mut pairs = Vec::new();
        for (col, token) in tokens(body, |c| c.is_whitespace()) {
            let column = body_offset + col;
            let (a, b) = token.split_once('-').ok_or_else(|| {
                syntax(
                    line_no,
                    column,
                    format!("expected `lo-hi`, found `{token}`"),
                )
            })?;
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| syntax(line_no, column, format!("bad index in `{token}`")))
            };
            pairs.push((parse(a)?, parse(b)?));
        }
        raw[axis - 1] = Some(pairs);
    }
    let last_line = input.lines().count().max(1);
    let raw = raw
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            p.ok_or_else(|| syntax(last_line, 1, format!("missing line for axis {}", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    validate_scheme(n, &raw)
}

/// Splits `s` on `sep`, yielding `(1-based column, token)` for non-empty tokens.
fn tokens(s: &str, sep: impl Fn(char) -> bool) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if sep(c) {
            if let Some(st) = start.take() {
                out.push((st + 1, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st + 1, &s[st..]));
    }
    out.into_iter()
}

/// Parses the double-digit form. With `n` given, a single group holding all
/// `n * K` tokens is split into axes of `K` pairs each (the layout of a table
/// row).
pub fn parse_compact(input: &str, n: Option<usize>) -> Result<Scheme> {
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    for (line_no, line) in content_lines(input) {
        let mut offset = 0;
        for segment in line.split(['/', '|']) {
            let mut group = Vec::new();
            for (col, token) in tokens(segment, |c| c.is_whitespace() || c == ',') {
                let column = offset + col;
                let digits: Vec<usize> = token
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .filter(|d: &Vec<usize>| d.len() == 2 && d.iter().all(|&x| x > 0))
                    .ok_or_else(|| {
                        syntax(
                            line_no,
                            column,
                            format!("expected two digits 1-9, found `{token}`"),
                        )
                    })?;
                group.push((digits[0], digits[1]));
            }
            if !group.is_empty() {
                groups.push(group);
            }
            offset += segment.len() + 1;
        }
    }
    if groups.is_empty() {
        return Err(syntax(1, 1, "empty scheme"));
    }
    let n = match n {
        Some(n) => {
            let dim = feasibility(n)?;
            if groups.len() == 1 && n > 1 && groups[0].len() == n * dim.k() {
                groups = groups[0].chunks(dim.k()).map(<[_]>::to_vec).collect();
            }
            n
        }
        None => groups.len(),
    };
    if n > 9 {
        return Err(syntax(
            1,
            1,
            format!("compact form supports n <= 9, got {n}"),
        ));
    }
    validate_scheme(n, &groups)
}

/// Canonical text form, no trailing newline.
pub fn emit_scheme_text(s: &Scheme) -> String {
    let mut out = format!("n={}", s.n());
    for m in s.matchings() {
        out.push_str(&format!("\n{}: {m}", m.axis()));
    }
    out
}

/// Double-digit form (`24 35 / 13 45 / ...`); `None` for `n > 9`.
pub fn emit_compact(s: &Scheme) -> Option<String> {
    if s.n() > 9 {
        return None;
    }
    let groups: Vec<String> = s
        .matchings()
        .iter()
        .map(|m| {
            m.pairs()
                .iter()
                .map(|p| format!("{}{}", p.lo(), p.hi()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    Some(groups.join(" / "))
}

/// One JSON object per scheme, for line-delimited streams. `path` is the
/// enumeration branch path that resumes the stream after this scheme.
pub fn scheme_jsonl(id: u64, path: &[usize], s: &Scheme) -> String {
    let matchings: Vec<Vec<String>> = s
        .matchings()
        .iter()
        .map(|m| m.pairs().iter().map(ToString::to_string).collect())
        .collect();
    serde_json::json!({
        "id": id,
        "n": s.n(),
        "path": path,
        "matchings": matchings,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_schemes;

    const ROW3: &str = "n=5\n1: 2-4 3-5\n2: 1-3 4-5\n3: 1-4 2-5\n4: 1-5 2-3\n5: 1-2 3-4";

    #[test]
    fn canonical_and_compact_agree() {
        let a = parse_scheme_text(ROW3).unwrap();
        let b = parse_compact("24 35 / 13 45 / 14 25 / 15 23 / 12 34", Some(5)).unwrap();
        let c = parse_scheme_text("24 35 / 13 45 / 14 25 / 15 23 / 12 34").unwrap();
        let d = parse_compact("24 35 13 45 14 25 15 23 12 34", Some(5)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a, d);
        assert_eq!(emit_scheme_text(&a), ROW3);
        assert_eq!(
            emit_compact(&a).unwrap(),
            "24 35 / 13 45 / 14 25 / 15 23 / 12 34"
        );
    }

    #[test]
    fn three_dimensional_emit() {
        let s = parse_scheme_text("n=3\n1: 2-3\n2: 1-3\n3: 1-2\n").unwrap();
        assert_eq!(emit_scheme_text(&s), "n=3\n1: 2-3\n2: 1-3\n3: 1-2");
    }

    #[test]
    fn unordered_and_commented_input() {
        let text = "# row 3\nn=5\n\n5: 4-3 2-1\n1: 4-2 3-5\n2: 1-3 4-5\n3: 1-4 2-5\n4: 1-5 2-3\n";
        assert_eq!(emit_scheme_text(&parse_scheme_text(text).unwrap()), ROW3);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_scheme_text("n=4\n1: 2-3"),
            Err(Error::EvenDimension(4))
        );
        assert!(matches!(parse_scheme_text(""), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_scheme_text("n=5\n1: 2-4 3_5"),
            Err(Error::Syntax {
                line: 2,
                column: 8,
                message: "expected `lo-hi`, found `3_5`".into()
            })
        );
        assert!(matches!(
            parse_scheme_text("n=5\n1: 2-4 3-5\n1: 2-4 3-5"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_scheme_text("n=3\n1: 2-3\n2: 1-3"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_scheme_text("n=x"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_scheme_text("n=3\n7: 1-2"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_scheme_text("24 35 / 13 4x / 14 25 / 15 23 / 12 34"),
            Err(Error::Syntax {
                line: 1,
                column: 12,
                ..
            })
        ));
        assert!(matches!(
            parse_scheme_text("23 45 / 45 13 / 14 25 / 15 23 / 12 34"),
            Err(Error::DuplicatePair { .. })
        ));
        assert!(matches!(
            parse_compact("24 35 / 13 45", Some(5)),
            Err(Error::AxisCount {
                expected: 5,
                found: 2
            })
        ));
    }

    #[test]
    fn round_trip_5d() {
        for s in enumerate_schemes(feasibility(5).unwrap()).unwrap() {
            assert_eq!(parse_scheme_text(&emit_scheme_text(&s)).unwrap(), s);
            assert_eq!(parse_scheme_text(&emit_compact(&s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn jsonl_line() {
        let s = parse_scheme_text("n=3\n1: 2-3\n2: 1-3\n3: 1-2").unwrap();
        assert_eq!(
            scheme_jsonl(0, &[0, 0, 0], &s),
            r#"{"id":0,"matchings":[["2-3"],["1-3"],["1-2"]],"n":3,"path":[0,0,0]}"#
        );
    }
}
