//! Lazy depth-first enumeration of every pairing scheme of a dimension.
//!
//! Axes are filled in ascending order; at each axis the candidate matchings
//! are tried in [`enumerate_axis_matchings`] order and kept only if they do
//! not reuse a pair already taken by an earlier axis. A scheme is identified
//! by its *branch path*: the index of the chosen matching at every axis.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scheme::{enumerate_axis_matchings, Dimension, Matching, Scheme};

/// Largest `n` whose `C(n,2)` pairs fit in the 128-bit occupancy mask.
pub const MAX_ENUMERATION_N: usize = 15;

/// Per-axis candidate matchings and their pair-occupancy masks.
#[derive(Debug)]
pub struct SchemeSpace {
    dim: Dimension,
    choices: Vec<Vec<Matching>>,
    masks: Vec<Vec<u128>>,
}

fn pair_bit(n: usize, lo: usize, hi: usize) -> u128 {
    // Row-major index into the strict upper triangle.
    let (lo, hi) = (lo - 1, hi - 1);
    let idx = lo * (2 * n - lo - 1) / 2 + (hi - lo - 1);
    1u128 << idx
}

impl SchemeSpace {
    pub fn new(dim: Dimension) -> Result<Arc<Self>> {
        let n = dim.n();
        if n > MAX_ENUMERATION_N {
            return Err(Error::TooLarge {
                n,
                max: MAX_ENUMERATION_N,
            });
        }
        let mut choices = Vec::with_capacity(n);
        let mut masks = Vec::with_capacity(n);
        for axis in 1..=n {
            let ms = enumerate_axis_matchings(dim, axis)?;
            masks.push(
                ms.iter()
                    .map(|m| {
                        m.pairs()
                            .iter()
                            .fold(0u128, |acc, p| acc | pair_bit(n, p.lo(), p.hi()))
                    })
                    .collect(),
            );
            choices.push(ms);
        }
        Ok(Arc::new(SchemeSpace {
            dim,
            choices,
            masks,
        }))
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    /// Candidate matchings for `axis` (1-based).
    pub fn choices(&self, axis: usize) -> &[Matching] {
        &self.choices[axis - 1]
    }

    /// Checks that a partial or full branch path is in range and returns the
    /// accumulated occupancy masks, or `None` if the path reuses a pair.
    fn check_path(&self, path: &[usize]) -> Result<Option<Vec<u128>>> {
        let n = self.dim.n();
        if path.len() > n {
            return Err(Error::BadCheckpoint(format!(
                "path has {} entries, dimension has {n} axes",
                path.len()
            )));
        }
        let mut used = vec![0u128; n + 1];
        for (d, &c) in path.iter().enumerate() {
            let mask = *self.masks[d].get(c).ok_or_else(|| {
                Error::BadCheckpoint(format!(
                    "axis {} has {} matchings, index {c} requested",
                    d + 1,
                    self.masks[d].len()
                ))
            })?;
            if used[d] & mask != 0 {
                return Ok(None);
            }
            used[d + 1] = used[d] | mask;
        }
        Ok(Some(used))
    }

    fn check_full_path(&self, path: &[usize]) -> Result<Vec<u128>> {
        let used = self
            .check_path(path)?
            .ok_or_else(|| Error::BadCheckpoint("path reuses a pair".into()))?;
        if path.len() != self.dim.n() {
            return Err(Error::BadCheckpoint(
                "path does not name a full scheme".into(),
            ));
        }
        Ok(used)
    }

    /// Materializes the scheme at a full branch path.
    pub fn scheme_at(&self, path: &[usize]) -> Result<Scheme> {
        self.check_full_path(path)?;
        Ok(self.build(path))
    }

    fn build(&self, path: &[usize]) -> Scheme {
        let matchings = path
            .iter()
            .enumerate()
            .map(|(d, &c)| self.choices[d][c].clone())
            .collect();
        Scheme::from_parts_unchecked(self.dim, matchings)
    }

    /// Every scheme, in depth-first lexicographic order.
    pub fn stream(self: &Arc<Self>) -> SchemeStream {
        SchemeStream::start(Arc::clone(self), Vec::new(), vec![0; self.dim.n() + 1], 0)
    }

    /// Only the schemes whose branch path starts with `prefix`, in order.
    pub fn stream_with_prefix(self: &Arc<Self>, prefix: &[usize]) -> Result<SchemeStream> {
        Ok(match self.check_path(prefix)? {
            Some(used) => {
                SchemeStream::start(Arc::clone(self), prefix.to_vec(), used, prefix.len())
            }
            // A prefix that reuses a pair is a legitimate but empty branch.
            None => {
                let mut s = self.stream();
                s.state = State::Done;
                s
            }
        })
    }

    /// Resumes strictly after the scheme at the full branch path `last`.
    pub fn stream_after(self: &Arc<Self>, last: &[usize]) -> Result<SchemeStream> {
        let used = self.check_full_path(last)?;
        let mut s = SchemeStream::start(Arc::clone(self), last.to_vec(), used, 0);
        s.state = State::Emitted;
        Ok(s)
    }

    /// One stream per first-axis choice. Concatenating them in order gives
    /// the sequential stream.
    pub fn partitions(self: &Arc<Self>) -> Vec<SchemeStream> {
        (0..self.choices[0].len())
            .map(|c| {
                self.stream_with_prefix(&[c])
                    .expect("single-entry prefixes are always valid")
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Emitted,
    Done,
}

/// Lazy iterator over schemes. After each `next()`, [`SchemeStream::path`]
/// reports the branch path of the scheme just yielded, which can later be
/// handed to [`SchemeSpace::stream_after`] to resume.
#[derive(Debug)]
pub struct SchemeStream {
    space: Arc<SchemeSpace>,
    path: Vec<usize>,
    used: Vec<u128>,
    floor: usize,
    state: State,
}

impl SchemeStream {
    fn start(space: Arc<SchemeSpace>, path: Vec<usize>, used: Vec<u128>, floor: usize) -> Self {
        SchemeStream {
            space,
            path,
            used,
            floor,
            state: State::Fresh,
        }
    }

    pub fn space(&self) -> &Arc<SchemeSpace> {
        &self.space
    }

    /// Branch path of the most recently yielded scheme.
    pub fn path(&self) -> Option<&[usize]> {
        (self.state == State::Emitted).then_some(&self.path[..])
    }

    /// Advances to the next full branch path, or `None` when exhausted.
    pub fn next_path(&mut self) -> Option<&[usize]> {
        let n = self.space.dim.n();
        let (mut depth, mut start) = match self.state {
            State::Done => return None,
            State::Fresh => {
                if self.path.len() == n {
                    // A full prefix names exactly one scheme.
                    self.state = State::Emitted;
                    return Some(&self.path);
                }
                (self.path.len(), 0)
            }
            State::Emitted => {
                if self.floor == n {
                    self.state = State::Done;
                    return None;
                }
                let last = self.path.pop().expect("emitted path is full");
                (n - 1, last + 1)
            }
        };

        loop {
            let masks = &self.space.masks[depth];
            let used = self.used[depth];
            match (start..masks.len()).find(|&c| masks[c] & used == 0) {
                Some(c) => {
                    self.path.push(c);
                    self.used[depth + 1] = used | masks[c];
                    if depth + 1 == n {
                        self.state = State::Emitted;
                        return Some(&self.path);
                    }
                    depth += 1;
                    start = 0;
                }
                None => {
                    if depth == self.floor {
                        self.state = State::Done;
                        return None;
                    }
                    depth -= 1;
                    start = self.path.pop().expect("depth above floor") + 1;
                }
            }
        }
    }
}

impl Iterator for SchemeStream {
    type Item = Scheme;

    fn next(&mut self) -> Option<Scheme> {
        self.next_path()?;
        Some(self.space.build(&self.path))
    }
}

/// Convenience wrapper: the full stream for `dim`.
pub fn enumerate_schemes(dim: Dimension) -> Result<SchemeStream> {
    Ok(SchemeSpace::new(dim)?.stream())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::scheme::{feasibility, validate_scheme};

    fn space(n: usize) -> Arc<SchemeSpace> {
        SchemeSpace::new(feasibility(n).unwrap()).unwrap()
    }

    #[test]
    fn pair_bits_are_distinct() {
        for n in [3, 5, 7, 15] {
            let mut seen = 0u128;
            for lo in 1..=n {
                for hi in lo + 1..=n {
                    let b = pair_bit(n, lo, hi);
                    assert_eq!(seen & b, 0);
                    seen |= b;
                }
            }
            assert_eq!(seen.count_ones() as usize, n * (n - 1) / 2);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(space(3).stream().count(), 1);
        assert_eq!(space(5).stream().count(), 6);
        assert_eq!(space(7).stream().count(), 6240);
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            SchemeSpace::new(feasibility(17).unwrap()),
            Err(Error::TooLarge { n: 17, .. })
        ));
    }

    #[test]
    fn emitted_schemes_validate_and_are_ordered() {
        let schemes: Vec<Scheme> = space(5).stream().collect();
        for s in &schemes {
            assert_eq!(&validate_scheme(5, &s.to_raw()).unwrap(), s);
        }
        assert!(schemes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn partitions_concatenate_to_stream() {
        let sp = space(7);
        let seq: Vec<Scheme> = sp.stream().collect();
        let parts: Vec<Scheme> = sp.partitions().into_iter().flatten().collect();
        assert_eq!(seq, parts);
        let set: BTreeSet<_> = seq.iter().collect();
        assert_eq!(set.len(), 6240);
    }

    #[test]
    fn resume_after_every_position_5d() {
        let sp = space(5);
        let mut s = sp.stream();
        let mut paths = Vec::new();
        while let Some(p) = s.next_path() {
            paths.push(p.to_vec());
        }
        for (i, p) in paths.iter().enumerate() {
            let rest: Vec<Vec<usize>> = {
                let mut r = sp.stream_after(p).unwrap();
                std::iter::from_fn(|| r.next_path().map(<[usize]>::to_vec)).collect()
            };
            assert_eq!(rest, paths[i + 1..]);
        }
    }

    #[test]
    fn resume_7d_midstream() {
        let sp = space(7);
        let mut s = sp.stream();
        for _ in 0..1000 {
            s.next().unwrap();
        }
        let cp = s.path().unwrap().to_vec();
        let tail: Vec<Scheme> = s.collect();
        let resumed: Vec<Scheme> = sp.stream_after(&cp).unwrap().collect();
        assert_eq!(tail, resumed);
        assert_eq!(tail.len(), 5240);
    }

    #[test]
    fn prefixes() {
        let sp = space(5);
        let all: Vec<Scheme> = sp.stream().collect();
        let full = sp.stream_with_prefix(&[0, 2, 1, 0, 1]);
        // Whether or not that path is valid, the stream is consistent.
        let got: Vec<Scheme> = full.map(|s| s.collect()).unwrap_or_default();
        assert!(got.len() <= 1);
        for s in &got {
            assert!(all.contains(s));
        }
        assert!(sp.stream_with_prefix(&[0, 9]).is_err());
        // 2-3 under axis 1 and 1-3 ... pick a reused pair: axis 1 {2-3,4-5},
        // axis 2 {1-3,4-5}.
        let c2 = sp
            .choices(2)
            .iter()
            .position(|m| m.to_string() == "1-3 4-5")
            .unwrap();
        assert_eq!(sp.stream_with_prefix(&[0, c2]).unwrap().count(), 0);
    }

    #[test]
    fn bad_resume_paths() {
        let sp = space(5);
        assert!(sp.stream_after(&[0]).is_err());
        assert!(sp.stream_after(&[0, 0, 0, 0, 0, 0]).is_err());
        assert!(sp.scheme_at(&[7, 0, 0, 0, 0]).is_err());
    }
}
