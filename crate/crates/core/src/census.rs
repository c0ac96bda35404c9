//! Exhaustive classification of the schemes of a dimension.
//!
//! Schemes are pulled from the enumeration stream in fixed-size chunks and
//! each chunk is classified either in order on the calling thread or across
//! a bounded rayon pool (feature `parallel`). Records carry their ordinal in
//! enumeration order and are emitted in that order, so the output does not
//! depend on the worker count.

use std::collections::VecDeque;
use std::io::Write;

use crate::enumerate::{SchemeSpace, SchemeStream};
use crate::error::Result;
use crate::identity::{
    find_witness, orthogonality_identically_zero, xab_identically_zero, Witness,
};
use crate::scheme::{is_closed, Dimension, Scheme};
use crate::tensor::build_tensor;

/// Schemes classified per batch.
pub const CHUNK: usize = 512;

pub const CSV_HEADER: [&str; 5] = [
    "scheme_id",
    "closed",
    "orthogonality_zero",
    "xab_zero",
    "witness",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub scheme_id: u64,
    pub closed: bool,
    pub orthogonality_zero: bool,
    pub xab_zero: bool,
    /// Set exactly when `xab_zero` is false and the search found a pair.
    pub witness: Option<Witness>,
}

/// Classifies one scheme. The witness search uses `seed` with the scheme id
/// as its stream selector.
pub fn classify(scheme: &Scheme, scheme_id: u64, seed: u64) -> CensusRecord {
    let l = build_tensor(scheme);
    let xab_zero = xab_identically_zero(&l);
    CensusRecord {
        scheme_id,
        closed: is_closed(scheme),
        orthogonality_zero: orthogonality_identically_zero(&l),
        xab_zero,
        witness: if xab_zero {
            None
        } else {
            find_witness(&l, seed, scheme_id)
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOptions {
    pub limit: Option<u64>,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    pub seed: u64,
    /// Resume strictly after this full branch path.
    pub resume_after: Option<Vec<usize>>,
    /// Ordinal assigned to the first emitted record.
    pub start_id: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            limit: None,
            jobs: 1,
            seed: 0,
            resume_after: None,
            start_id: 0,
        }
    }
}

enum Executor {
    Sequential,
    #[cfg(feature = "parallel")]
    Pool(rayon::ThreadPool),
}

impl Executor {
    fn new(jobs: usize) -> Self {
        #[cfg(feature = "parallel")]
        if jobs > 1 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                return Executor::Pool(pool);
            }
        }
        let _ = jobs;
        Executor::Sequential
    }

    fn classify_chunk(&self, chunk: &[(u64, Scheme)], seed: u64) -> Vec<CensusRecord> {
        match self {
            Executor::Sequential => chunk.iter().map(|(id, s)| classify(s, *id, seed)).collect(),
            #[cfg(feature = "parallel")]
            Executor::Pool(pool) => {
                use rayon::prelude::*;
                pool.install(|| {
                    chunk
                        .par_iter()
                        .map(|(id, s)| classify(s, *id, seed))
                        .collect()
                })
            }
        }
    }
}

/// Streaming census; see [`census`].
pub struct CensusStream {
    schemes: SchemeStream,
    executor: Executor,
    seed: u64,
    next_id: u64,
    remaining: Option<u64>,
    buffer: VecDeque<(Vec<usize>, CensusRecord)>,
    last_path: Option<Vec<usize>>,
}

impl CensusStream {
    /// Branch path of the scheme behind the last yielded record; together
    /// with `scheme_id + 1` it is enough to resume.
    pub fn last_path(&self) -> Option<&[usize]> {
        self.last_path.as_deref()
    }

    fn refill(&mut self) {
        let want = match self.remaining {
            Some(r) => CHUNK.min(r as usize),
            None => CHUNK,
        };
        let mut chunk = Vec::with_capacity(want);
        let mut paths = Vec::with_capacity(want);
        while chunk.len() < want {
            let Some(scheme) = self.schemes.next() else {
                break;
            };
            paths.push(self.schemes.path().expect("just yielded").to_vec());
            chunk.push((self.next_id, scheme));
            self.next_id += 1;
        }
        if let Some(r) = self.remaining.as_mut() {
            *r -= chunk.len() as u64;
        }
        let records = self.executor.classify_chunk(&chunk, self.seed);
        self.buffer.extend(paths.into_iter().zip(records));
    }
}

impl Iterator for CensusStream {
    type Item = CensusRecord;

    fn next(&mut self) -> Option<CensusRecord> {
        if self.buffer.is_empty() {
            self.refill();
        }
        let (path, record) = self.buffer.pop_front()?;
        self.last_path = Some(path);
        Some(record)
    }
}

/// Classifies every scheme of `dim` (or the first `limit`) in enumeration
/// order.
pub fn census(dim: Dimension, options: &CensusOptions) -> Result<CensusStream> {
    let space = SchemeSpace::new(dim)?;
    let schemes = match &options.resume_after {
        Some(path) => space.stream_after(path)?,
        None => space.stream(),
    };
    Ok(CensusStream {
        schemes,
        executor: Executor::new(options.jobs.max(1)),
        seed: options.seed,
        next_id: options.start_id,
        remaining: options.limit,
        buffer: VecDeque::new(),
        last_path: None,
    })
}

/// Running totals over census records.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub total: u64,
    pub closed: u64,
    pub orthogonality_zero: u64,
    pub xab_zero: u64,
    pub missing_witness: u64,
}

impl CensusSummary {
    pub fn add(&mut self, r: &CensusRecord) {
        self.total += 1;
        self.closed += r.closed as u64;
        self.orthogonality_zero += r.orthogonality_zero as u64;
        self.xab_zero += r.xab_zero as u64;
        self.missing_witness += (!r.xab_zero && r.witness.is_none()) as u64;
    }
}

/// Writes records as CSV with the fixed [`CSV_HEADER`].
pub fn write_census_csv<W: Write>(
    out: W,
    records: impl IntoIterator<Item = CensusRecord>,
) -> std::io::Result<CensusSummary> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let mut summary = CensusSummary::default();
    for r in records {
        summary.add(&r);
        let witness = r
            .witness
            .as_ref()
            .map(Witness::to_string)
            .unwrap_or_default();
        w.write_record([
            r.scheme_id.to_string().as_str(),
            bool_str(r.closed),
            bool_str(r.orthogonality_zero),
            bool_str(r.xab_zero),
            witness.as_str(),
        ])?;
    }
    w.flush()?;
    Ok(summary)
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}
