//! Signed structure tensors and the generalized cross product.
//!
//! Each scheme pair `{i, j} -> k` becomes `e_first x e_second = +e_k` with the
//! ordering chosen so that `(first, second, k)` is a cyclic shift of the
//! ascending triple. The tensor is kept sparse: one `(axis, sign)` slot per
//! ordered pair of distinct indices.

use std::fmt;
use std::ops::{Index, Neg};

use num_traits::Num;

use crate::error::{Error, Result};
use crate::scheme::{Dimension, IndexPair, Scheme};

/// Scalars the algebra can run on. Integers give exact results; `f64`
/// covers general real input.
pub trait Scalar: Copy + PartialEq + fmt::Debug + Num + Neg<Output = Self> + Send + Sync {}

impl<T> Scalar for T where T: Copy + PartialEq + fmt::Debug + Num + Neg<Output = T> + Send + Sync {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply<T: Neg<Output = T>>(self, value: T) -> T {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `e_i x e_j = sign * e_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Entry {
    pub axis: usize,
    pub sign: Sign,
}

/// Orders the pair so that `e_first x e_second = +e_axis` under the
/// right-handed rule: `(first, second, axis)` must be an even permutation of
/// the three indices sorted ascending.
pub fn orient_pair(pair: IndexPair, axis: usize) -> Result<(usize, usize)> {
    if pair.contains(axis) {
        return Err(Error::AxisCollision { pair, axis });
    }
    let (lo, hi) = (pair.lo(), pair.hi());
    // The even permutations of a < b < c are (a,b,c), (b,c,a), (c,a,b). With
    // lo < hi fixed, (lo, hi, axis) is one of them unless lo < axis < hi.
    if lo < axis && axis < hi {
        Ok((hi, lo))
    } else {
        Ok((lo, hi))
    }
}

/// Sparse signed tensor `L_ijk` with `e_i x e_j = L_ijk e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    dim: Dimension,
    // Row-major n x n, diagonal empty.
    slots: Vec<Option<Entry>>,
}

impl StructureTensor {
    /// Installs `(first, second) -> (k, +1)` and `(second, first) -> (k, -1)`
    /// for every pair of the scheme.
    pub fn from_scheme(s: &Scheme) -> Self {
        let n = s.n();
        let mut slots = vec![None; n * n];
        for (pair, axis) in s.assignments() {
            let (first, second) =
                orient_pair(pair, axis).expect("validated schemes never pair an axis with itself");
            slots[(first - 1) * n + (second - 1)] = Some(Entry {
                axis,
                sign: Sign::Plus,
            });
            slots[(second - 1) * n + (first - 1)] = Some(Entry {
                axis,
                sign: Sign::Minus,
            });
        }
        StructureTensor {
            dim: s.dim(),
            slots,
        }
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.dim.n()
    }

    /// `e_i x e_j` as `Some(entry)`, or `None` when `i == j`.
    pub fn lookup(&self, i: usize, j: usize) -> Result<Option<Entry>> {
        let n = self.n();
        for index in [i, j] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        Ok(self.get(i, j))
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> Option<Entry> {
        self.slots[(i - 1) * self.n() + (j - 1)]
    }

    /// The coefficient `L_ijk` in `{-1, 0, 1}`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> i64 {
        match self.get(i, j) {
            Some(e) if e.axis == k => e.sign.as_i64(),
            _ => 0,
        }
    }

    /// All `n(n-1)` ordered entries as `(i, j, entry)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Entry)> + '_ {
        let n = self.n();
        self.slots
            .iter()
            .enumerate()
            .filter_map(move |(idx, e)| e.map(|e| (idx / n + 1, idx % n + 1, e)))
    }

    /// Ordered entries landing on `axis`.
    pub fn entries_for_axis(&self, axis: usize) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.entries()
            .filter(move |(_, _, e)| e.axis == axis)
            .map(|(i, j, e)| (i, j, e.sign))
    }

    /// Line-oriented dump, `"i j -> k sign"` for each entry with `i < j`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, j, e) in self.entries().filter(|&(i, j, _)| i < j) {
            out.push_str(&format!("{i} {j} -> {} {}\n", e.axis, e.sign));
        }
        out
    }
}

/// Shorthand for [`StructureTensor::from_scheme`].
pub fn build_tensor(s: &Scheme) -> StructureTensor {
    StructureTensor::from_scheme(s)
}

/// Components `a^1..a^n` of a vector in the orthonormal basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector<T>(Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(components: Vec<T>) -> Self {
        Vector(components)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![T::zero(); n])
    }

    /// The basis vector `e_index` (1-based).
    pub fn basis(n: usize, index: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[index - 1] = T::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[T] {
        &self.0
    }

    pub fn into_components(self) -> Vec<T> {
        self.0
    }

    pub fn dot(&self, other: &Self) -> T {
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    pub fn scale(&self, s: T) -> Self {
        Vector(self.0.iter().map(|&a| a * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Vector<U> {
        Vector(self.0.iter().map(|&a| f(a)).collect())
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;

    /// 1-based component access.
    fn index(&self, index: usize) -> &T {
        &self.0[index - 1]
    }
}

impl<T: Scalar> From<Vec<T>> for Vector<T> {
    fn from(v: Vec<T>) -> Self {
        Vector(v)
    }
}

pub(crate) fn check_len<T>(n: usize, v: &Vector<T>) -> Result<()> {
    if v.0.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.0.len(),
        });
    }
    Ok(())
}

/// `A x B = a^i b^j L_ijk e_k`.
pub fn cross<T: Scalar>(l: &StructureTensor, a: &Vector<T>, b: &Vector<T>) -> Result<Vector<T>> {
    let n = l.n();
    check_len(n, a)?;
    check_len(n, b)?;
    let mut out = vec![T::zero(); n];
    for (i, j, e) in l.entries() {
        let term = a[i] * b[j];
        out[e.axis - 1] = out[e.axis - 1] + e.sign.apply(term);
    }
    Ok(Vector(out))
}

/// The 2x2 minor `a_alpha b_beta - a_beta b_alpha`.
pub fn pair_determinant<T: Scalar>(
    a: &Vector<T>,
    b: &Vector<T>,
    alpha: usize,
    beta: usize,
) -> Result<T> {
    let n = a.len();
    check_len(n, b)?;
    for index in [alpha, beta] {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    Ok(a[alpha] * b[beta] - a[beta] * b[alpha])
}
