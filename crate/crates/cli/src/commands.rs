use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use ncross::{
    build_tensor, census, emit_compact, emit_scheme_text, enumerate_axis_matchings, feasibility,
    find_witness, is_closed, orthogonality_identically_zero, parse_scheme_text, reference_scheme,
    reproduce_tables, scheme_jsonl, write_census_csv, xab_direct, xab_identically_zero,
    CensusOptions, CensusSummary, DefectReport, Scalar, Scheme, SchemeSpace, Vector,
};

use crate::{Command, Format};

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Dims { max } => dims(max)?,
        Command::Matchings { n, axis } => matchings(n, axis)?,
        Command::Enumerate {
            n,
            limit,
            format,
            output,
            after,
        } => enumerate(n, limit, format, output.as_deref(), after.as_deref())?,
        Command::Tensor { scheme } => {
            let s = load_scheme(&scheme)?;
            print!("{}", build_tensor(&s).dump());
        }
        Command::Cross { scheme, a, b } => cross(&load_scheme(&scheme)?, &a, &b)?,
        Command::Verify { scheme, seed } => verify(&load_scheme(&scheme)?, seed)?,
        Command::Census {
            n,
            jobs,
            limit,
            output,
            seed,
            format,
            after,
            start_id,
        } => {
            let options = CensusOptions {
                limit,
                jobs: jobs as usize,
                seed,
                resume_after: after.as_deref().map(parse_path).transpose()?,
                start_id: start_id.unwrap_or(0),
            };
            run_census(n, &options, format, output.as_deref())?
        }
        Command::Tables => {
            let report = reproduce_tables();
            print!("{}", report.render());
            if !report.all_pass() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_path(text: &str) -> Result<Vec<usize>> {
    text.split([',', '.'])
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad branch index `{t}`"))
        })
        .collect()
}

/// `tableT:R`, an existing file, or inline scheme text.
fn load_scheme(src: &str) -> Result<Scheme> {
    if let Some((table, row)) = src
        .split_once(':')
        .and_then(|(t, r)| Some((t.strip_prefix("table")?, r)))
    {
        if let (Ok(table), Ok(row)) = (table.parse::<usize>(), row.parse::<usize>()) {
            return reference_scheme(table, row)
                .with_context(|| format!("no reference row {row} in table {table}"));
        }
    }
    let path = PathBuf::from(src);
    if path.is_file() {
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?;
        return Ok(parse_scheme_text(&text)?);
    }
    Ok(parse_scheme_text(src)?)
}

fn dims(max: usize) -> Result<()> {
    let mut out = open_output(None)?;
    for n in 3..=max {
        match feasibility(n) {
            Ok(d) => writeln!(
                out,
                "n={n} K={} pairs={} matchings_per_axis={}",
                d.k(),
                d.pair_count(),
                d.matchings_per_axis()
            )?,
            Err(e) => writeln!(out, "n={n} infeasible: {e}")?,
        }
    }
    out.flush()?;
    Ok(())
}

fn matchings(n: usize, axis: usize) -> Result<()> {
    let dim = feasibility(n)?;
    let mut out = open_output(None)?;
    for m in enumerate_axis_matchings(dim, axis)? {
        writeln!(out, "{m}")?;
    }
    out.flush()?;
    Ok(())
}

fn enumerate(
    n: usize,
    limit: Option<u64>,
    format: Format,
    output: Option<&Path>,
    after: Option<&str>,
) -> Result<()> {
    let space = SchemeSpace::new(feasibility(n)?)?;
    let mut stream = match after {
        Some(p) => space.stream_after(&parse_path(p)?)?,
        None => space.stream(),
    };
    let mut out = open_output(output)?;
    let mut id = 0u64;
    while limit.is_none_or(|l| id < l) {
        let Some(path) = stream.next_path().map(<[usize]>::to_vec) else {
            break;
        };
        let s = space.scheme_at(&path)?;
        match format {
            Format::Jsonl => writeln!(out, "{}", scheme_jsonl(id, &path, &s))?,
            Format::Text => writeln!(out, "{}\n", emit_scheme_text(&s))?,
            Format::Csv => bail!("enumerate supports --format jsonl or text"),
        }
        id += 1;
    }
    out.flush()?;
    Ok(())
}

enum Parsed {
    Exact(Vector<i64>),
    Real(Vector<f64>),
}

fn parse_vector(text: &str) -> Result<Parsed> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    if let Ok(ints) = tokens
        .iter()
        .map(|t| t.parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
    {
        return Ok(Parsed::Exact(Vector::new(ints)));
    }
    let reals = tokens
        .iter()
        .map(|t| {
            t.parse::<f64>()
                .with_context(|| format!("bad component `{t}`"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Parsed::Real(Vector::new(reals)))
}

fn to_real(p: Parsed) -> Vector<f64> {
    match p {
        Parsed::Exact(v) => v.map(|x| x as f64),
        Parsed::Real(v) => v,
    }
}

/// `2*e1 - e3 + e5`; zero components are left out.
pub fn format_combination<T: Scalar + PartialOrd + std::fmt::Display>(v: &Vector<T>) -> String {
    let mut out = String::new();
    for (idx, &c) in v.components().iter().enumerate() {
        if c == T::zero() {
            continue;
        }
        let negative = c < T::zero();
        let mag = if negative { -c } else { c };
        let sign = match (out.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sign);
        if mag != T::one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&format!("e{}", idx + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn report<T: Scalar + PartialOrd + std::fmt::Display>(
    s: &Scheme,
    a: &Vector<T>,
    b: &Vector<T>,
) -> Result<()> {
    let l = build_tensor(s);
    let product = ncross::cross(&l, a, b)?;
    let r = DefectReport::compute(&l, s, a, b)?;
    println!("A x B = {}", format_combination(&product));
    println!("(A x B).A = {}", r.dot_with_a);
    println!("(A x B).B = {}", r.dot_with_b);
    println!("X_AB = {}", r.xab_direct);
    println!("X_AB (tensor) = {}", r.xab_tensor);
    println!("X_AB (pairs) = {}", r.xab_pairs);
    Ok(())
}

fn cross(s: &Scheme, a: &str, b: &str) -> Result<()> {
    match (parse_vector(a)?, parse_vector(b)?) {
        (Parsed::Exact(a), Parsed::Exact(b)) => report(s, &a, &b),
        (a, b) => report(s, &to_real(a), &to_real(b)),
    }
}

fn verify(s: &Scheme, seed: u64) -> Result<()> {
    let l = build_tensor(s);
    match emit_compact(s) {
        Some(c) => println!("scheme: {c}"),
        None => println!("{}", emit_scheme_text(s)),
    }
    println!("closed: {}", is_closed(s));
    println!(
        "orthogonality_identically_zero: {}",
        orthogonality_identically_zero(&l)
    );
    let xab_zero = xab_identically_zero(&l);
    println!("xab_identically_zero: {xab_zero}");
    if !xab_zero {
        match find_witness(&l, seed, 0) {
            Some(w) => println!("witness: {w} X_AB = {}", xab_direct(&l, &w.a, &w.b)?),
            None => println!("witness: none found"),
        }
    }
    Ok(())
}

fn run_census(
    n: usize,
    options: &CensusOptions,
    format: Format,
    output: Option<&Path>,
) -> Result<()> {
    let dim = feasibility(n)?;
    let records = census(dim, options)?;
    let out = open_output(output)?;
    let summary = match format {
        Format::Csv => write_census_csv(out, records)?,
        Format::Jsonl => {
            let mut out = out;
            let mut summary = CensusSummary::default();
            for r in records {
                summary.add(&r);
                let line = serde_json::json!({
                    "scheme_id": r.scheme_id,
                    "closed": r.closed,
                    "orthogonality_zero": r.orthogonality_zero,
                    "xab_zero": r.xab_zero,
                    "witness": r.witness.as_ref().map(ToString::to_string),
                });
                writeln!(out, "{line}")?;
            }
            out.flush()?;
            summary
        }
        Format::Text => bail!("census supports --format csv or jsonl"),
    };
    eprintln!(
        "census n={n}: {} schemes, {} closed, {} orthogonality_zero, {} xab_zero, {} without witness",
        summary.total, summary.closed, summary.orthogonality_zero, summary.xab_zero, summary.missing_witness
    );
    Ok(())
}
