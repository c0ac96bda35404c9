//! Pairing schemes: which basis pair multiplies into which axis.
//!
//! A scheme assigns every unordered pair `{i, j}` of basis indices to one
//! target axis `k` such that, for each axis, the pairs assigned to it form a
//! perfect matching of the remaining `n - 1` indices. Schemes are purely
//! combinatorial; orientation is derived later (see [`crate::tensor`]).

use std::fmt;

use crate::error::{Error, Result};

/// A feasible odd dimension `n = 2K + 1`, where `K` is the number of pairs
/// landing on each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dimension {
    n: usize,
    k: usize,
}

impl Dimension {
    /// Same as [`feasibility`].
    pub fn new(n: usize) -> Result<Self> {
        feasibility(n)
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Pairs per axis.
    pub fn k(self) -> usize {
        self.k
    }

    /// `C(n, 2)`, the number of unordered basis pairs.
    pub fn pair_count(self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// `(n - 2)!!`, the number of perfect matchings of the `n - 1` indices
    /// left over once an axis is removed.
    pub fn matchings_per_axis(self) -> u128 {
        (1..=self.n - 2).step_by(2).map(|v| v as u128).product()
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} K={}", self.n, self.k)
    }
}

/// Checks that `n` admits an even distribution of the `C(n,2)` basis pairs
/// over the `n` axes and returns the resulting dimension.
pub fn feasibility(n: usize) -> Result<Dimension> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let pairs = n * (n - 1) / 2;
    if !pairs.is_multiple_of(n) {
        return Err(Error::EvenDimension(n));
    }
    let k = pairs / n;
    debug_assert_eq!(n, 2 * k + 1);
    Ok(Dimension { n, k })
}

/// An unordered pair of 1-based basis indices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexPair {
    lo: usize,
    hi: usize,
}

impl IndexPair {
    /// Builds a normalized pair. Panics if `a == b` or either index is 0.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("pair members must be distinct and 1-based")
    }

    pub fn try_new(a: usize, b: usize) -> Option<Self> {
        if a == b || a == 0 || b == 0 {
            return None;
        }
        Some(IndexPair {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn contains(self, index: usize) -> bool {
        self.lo == index || self.hi == index
    }

    pub fn overlaps(self, other: IndexPair) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// The `K` disjoint pairs assigned to one axis, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    axis: usize,
    pairs: Vec<IndexPair>,
}

impl Matching {
    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn pairs(&self) -> &[IndexPair] {
        &self.pairs
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.pairs.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All perfect matchings of `{1..n} \ {axis}` in lexicographic order of their
/// sorted pair lists.
pub fn enumerate_axis_matchings(dim: Dimension, axis: usize) -> Result<Vec<Matching>> {
    let n = dim.n();
    if axis == 0 || axis > n {
        return Err(Error::AxisOutOfRange { axis, n });
    }
    let free: Vec<usize> = (1..=n).filter(|&i| i != axis).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(dim.k());
    match_rest(&free, &mut current, &mut |pairs| {
        out.push(Matching {
            axis,
            pairs: pairs.to_vec(),
        })
    });
    Ok(out)
}

// Pairs the smallest free index with each other candidate in ascending order,
// which produces matchings in lexicographic order.
fn match_rest(free: &[usize], current: &mut Vec<IndexPair>, emit: &mut impl FnMut(&[IndexPair])) {
    let Some((&first, rest)) = free.split_first() else {
        emit(current);
        return;
    };
    for (pos, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &v)| v)
            .collect();
        current.push(IndexPair::new(first, partner));
        match_rest(&remaining, current, emit);
        current.pop();
    }
}

/// A validated assignment of every basis pair to exactly one axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scheme {
    dim: Dimension,
    matchings: Vec<Matching>,
}

impl Scheme {
    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.dim.n()
    }

    /// One matching per axis, `matchings()[k - 1].axis() == k`.
    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn matching(&self, axis: usize) -> Option<&Matching> {
        axis.checked_sub(1).and_then(|i| self.matchings.get(i))
    }

    /// Iterates `(pair, axis)` over all `C(n,2)` assignments.
    pub fn assignments(&self) -> impl Iterator<Item = (IndexPair, usize)> + '_ {
        self.matchings
            .iter()
            .flat_map(|m| m.pairs.iter().map(move |&p| (p, m.axis)))
    }

    /// Dense `n x n` lookup (0-based row-major) from pair to target axis;
    /// the diagonal holds 0.
    pub fn axis_table(&self) -> Vec<usize> {
        let n = self.n();
        let mut table = vec![0; n * n];
        for (p, k) in self.assignments() {
            table[(p.lo - 1) * n + (p.hi - 1)] = k;
            table[(p.hi - 1) * n + (p.lo - 1)] = k;
        }
        table
    }

    /// Target axis of the pair `{i, j}`, if `i != j` and both are in range.
    pub fn axis_of(&self, i: usize, j: usize) -> Option<usize> {
        let pair = IndexPair::try_new(i, j)?;
        self.assignments()
            .find_map(|(p, k)| (p == pair).then_some(k))
    }

    /// The raw per-axis pair lists, as accepted by [`validate_scheme`].
    pub fn to_raw(&self) -> Vec<Vec<(usize, usize)>> {
        self.matchings
            .iter()
            .map(|m| m.pairs.iter().map(|p| (p.lo, p.hi)).collect())
            .collect()
    }

    pub(crate) fn from_parts_unchecked(dim: Dimension, matchings: Vec<Matching>) -> Self {
        Scheme { dim, matchings }
    }
}

/// Validates a raw assignment: `assignment[k - 1]` lists the pairs sent to
/// axis `k`. Pairs may be given in either order.
pub fn validate_scheme(n: usize, assignment: &[Vec<(usize, usize)>]) -> Result<Scheme> {
    let dim = feasibility(n)?;
    if assignment.len() != n {
        return Err(Error::AxisCount {
            expected: n,
            found: assignment.len(),
        });
    }

    let mut owner: Vec<usize> = vec![0; n * n];
    let mut matchings = Vec::with_capacity(n);
    for (idx, raw) in assignment.iter().enumerate() {
        let axis = idx + 1;
        let mut pairs = Vec::with_capacity(raw.len());
        for &(a, b) in raw {
            for index in [a, b] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            let pair = IndexPair::try_new(a, b).ok_or_else(|| Error::BadMatching {
                axis,
                reason: format!("degenerate pair {a}-{b}"),
            })?;
            if pair.contains(axis) {
                return Err(Error::SelfPair { pair, axis });
            }
            if let Some(&clash) = pairs.iter().find(|q: &&IndexPair| q.overlaps(pair)) {
                return Err(Error::BadMatching {
                    axis,
                    reason: format!("pairs {clash} and {pair} overlap"),
                });
            }
            let slot = &mut owner[(pair.lo - 1) * n + (pair.hi - 1)];
            if *slot != 0 {
                return Err(Error::DuplicatePair {
                    pair,
                    first: *slot,
                    second: axis,
                });
            }
            *slot = axis;
            pairs.push(pair);
        }
        pairs.sort();
        matchings.push(Matching { axis, pairs });
    }

    for lo in 1..=n {
        for hi in lo + 1..=n {
            if owner[(lo - 1) * n + (hi - 1)] == 0 {
                return Err(Error::MissingPair(IndexPair::new(lo, hi)));
            }
        }
    }

    // Disjoint pairs avoiding the axis cap each matching at K pairs, so full
    // coverage of all C(n,2) pairs forces every matching to be perfect.
    debug_assert!(matchings.iter().all(|m| m.pairs.len() == dim.k()));
    Ok(Scheme { dim, matchings })
}

/// True iff the scheme closes every assigned pair into a triple: whenever
/// `{i, j} -> k`, also `{j, k} -> i` and `{i, k} -> j`. Closed schemes are
/// exactly the Steiner triple systems on `n` points.
pub fn is_closed(s: &Scheme) -> bool {
    let n = s.n();
    let table = s.axis_table();
    let at = |a: usize, b: usize| table[(a - 1) * n + (b - 1)];
    s.assignments()
        .all(|(p, k)| at(p.hi, k) == p.lo && at(p.lo, k) == p.hi)
}
