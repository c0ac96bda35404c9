//! Reference tables shipped with the crate and their computed reproduction.
//!
//! `data/table1.txt` and `data/table3.txt` hold the per-axis matchings for
//! five and seven dimensions (one row per kind, one column per axis);
//! `data/table2.txt` and `data/table4.txt` hold complete schemes, one per
//! row. Rows are `label | cell | cell | ...` with pairs written as double
//! digits.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::enumerate::SchemeSpace;
use crate::error::{Error, Result};
use crate::format::emit_compact;
use crate::identity::xab_identically_zero;
use crate::scheme::{
    enumerate_axis_matchings, feasibility, is_closed, validate_scheme, IndexPair, Scheme,
};
use crate::tensor::build_tensor;

pub const TABLE1: &str = include_str!("../data/table1.txt");
pub const TABLE2: &str = include_str!("../data/table2.txt");
pub const TABLE3: &str = include_str!("../data/table3.txt");
pub const TABLE4: &str = include_str!("../data/table4.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    /// One pair list per column (axis).
    pub cells: Vec<Vec<(usize, usize)>>,
}

pub fn parse_table(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut fields = t.split('|');
        let label = fields.next().unwrap_or_default().trim().to_string();
        let mut cells = Vec::new();
        for field in fields {
            let mut pairs = Vec::new();
            for tok in field.split([' ', ',']).filter(|s| !s.is_empty()) {
                let d: Vec<u32> = tok.chars().filter_map(|c| c.to_digit(10)).collect();
                if d.len() != 2 || tok.len() != 2 {
                    return Err(Error::Syntax {
                        line: line_no,
                        column: line.find(tok).unwrap_or(0) + 1,
                        message: format!("expected a double digit, found `{tok}`"),
                    });
                }
                pairs.push((d[0] as usize, d[1] as usize));
            }
            cells.push(pairs);
        }
        rows.push(TableRow { label, cells });
    }
    Ok(rows)
}

/// Validates every row of a scheme table.
pub fn table_schemes(text: &str, n: usize) -> Result<Vec<(String, Scheme)>> {
    parse_table(text)?
        .into_iter()
        .map(|row| validate_scheme(n, &row.cells).map(|s| (row.label, s)))
        .collect()
}

type PairSet = BTreeSet<IndexPair>;

/// Column `axis` (1-based) of a matching table as a set of pair sets.
pub fn table_column(text: &str, axis: usize) -> Result<BTreeSet<PairSet>> {
    Ok(parse_table(text)?
        .into_iter()
        .filter_map(|row| row.cells.get(axis - 1).cloned())
        .map(|cell| {
            cell.into_iter()
                .filter_map(|(a, b)| IndexPair::try_new(a, b))
                .collect()
        })
        .collect())
}

/// Looks up a row of the embedded scheme tables: `table` is 2 or 4, `row` is
/// the 1-based row number.
pub fn reference_scheme(table: usize, row: usize) -> Option<Scheme> {
    let (text, n) = match table {
        2 => (TABLE2, 5),
        4 => (TABLE4, 7),
        _ => return None,
    };
    let rows = table_schemes(text, n).ok()?;
    rows.into_iter().nth(row.checked_sub(1)?).map(|(_, s)| s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheck {
    pub title: String,
    pub pass: bool,
    pub lines: Vec<String>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TablesReport {
    pub checks: Vec<TableCheck>,
}

impl TablesReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "== {} ==", c.title);
            for l in &c.lines {
                let _ = writeln!(out, "{l}");
            }
            let _ = writeln!(
                out,
                "{}: {} ({})\n",
                c.title,
                if c.pass { "PASS" } else { "FAIL" },
                c.verdict
            );
        }
        out
    }
}

fn matching_check(title: &str, text: &str, n: usize) -> TableCheck {
    let dim = feasibility(n).expect("reference dimensions are odd");
    let mut lines = Vec::new();
    let mut pass = true;
    let mut per_axis = 0;
    for axis in 1..=n {
        let computed = enumerate_axis_matchings(dim, axis).expect("axis in range");
        per_axis = computed.len();
        let computed_set: BTreeSet<PairSet> = computed
            .iter()
            .map(|m| m.pairs().iter().copied().collect())
            .collect();
        let expected = table_column(text, axis).unwrap_or_default();
        let ok = computed_set == expected && computed.len() as u128 == dim.matchings_per_axis();
        pass &= ok;
        let listing: Vec<String> = computed.iter().map(ToString::to_string).collect();
        lines.push(format!(
            "axis {axis}: {} matchings [{}] {}",
            computed.len(),
            listing.join(" | "),
            if ok { "match" } else { "MISMATCH" }
        ));
    }
    TableCheck {
        title: title.into(),
        pass,
        lines,
        verdict: format!("{per_axis} matchings per axis, compared as sets per column"),
    }
}

fn scheme_set_check(space_n: usize) -> TableCheck {
    let dim = feasibility(space_n).expect("odd");
    let space = SchemeSpace::new(dim).expect("small dimension");
    let computed: Vec<Scheme> = space.stream().collect();
    let mut lines = Vec::new();
    let (pass, verdict) = match table_schemes(TABLE2, space_n) {
        Ok(rows) => {
            let reference: BTreeSet<&Scheme> = rows.iter().map(|(_, s)| s).collect();
            let ours: BTreeSet<&Scheme> = computed.iter().collect();
            for (id, s) in computed.iter().enumerate() {
                let label = rows
                    .iter()
                    .find(|(_, r)| r == s)
                    .map(|(l, _)| format!("reference row {l}"))
                    .unwrap_or_else(|| "not in reference".into());
                lines.push(format!(
                    "scheme {id}: {} [{label}]",
                    emit_compact(s).unwrap_or_default()
                ));
            }
            (
                reference == ours && computed.len() == rows.len(),
                format!(
                    "{} schemes enumerated, {} reference rows",
                    computed.len(),
                    rows.len()
                ),
            )
        }
        Err(e) => (false, format!("reference table invalid: {e}")),
    };
    TableCheck {
        title: "Table 2".into(),
        pass,
        lines,
        verdict,
    }
}

fn membership_check() -> TableCheck {
    let dim = feasibility(7).expect("odd");
    let space = SchemeSpace::new(dim).expect("small dimension");
    let ids: HashMap<Scheme, usize> = space.stream().enumerate().map(|(i, s)| (s, i)).collect();
    let mut lines = Vec::new();
    let (pass, verdict) = match table_schemes(TABLE4, 7) {
        Ok(rows) => {
            let mut found = 0;
            for (label, s) in &rows {
                let l = build_tensor(s);
                match ids.get(s) {
                    Some(id) => {
                        found += 1;
                        lines.push(format!(
                            "row {label}: scheme {id} closed={} xab_zero={}",
                            is_closed(s),
                            xab_identically_zero(&l)
                        ));
                    }
                    None => lines.push(format!("row {label}: NOT FOUND")),
                }
            }
            (
                found == rows.len() && rows.len() == 30,
                format!(
                    "{found}/{} rows found among {} schemes",
                    rows.len(),
                    ids.len()
                ),
            )
        }
        Err(e) => (false, format!("reference table invalid: {e}")),
    };
    TableCheck {
        title: "Table 4".into(),
        pass,
        lines,
        verdict,
    }
}

/// Recomputes the four reference tables and compares them with the
/// embedded data.
pub fn reproduce_tables() -> TablesReport {
    TablesReport {
        checks: vec![
            matching_check("Table 1", TABLE1, 5),
            scheme_set_check(5),
            matching_check("Table 3", TABLE3, 7),
            membership_check(),
        ],
    }
}
