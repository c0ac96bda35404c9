//! Deciding whether an axiom holds identically, i.e. for every `A` and `B`.
//!
//! Both decisions are exact. Orthogonality reduces to total antisymmetry of
//! `L`. The magnitude identity is settled by expanding `X_AB` into integer
//! coefficients of the monomials `a_i a_l b_j b_m`; random probes are only
//! used afterwards to produce a concrete witness when the form is nonzero.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::tensor::{StructureTensor, Vector};
use crate::verify::xab_direct;

/// Witness entries are drawn from `-WITNESS_RANGE..=WITNESS_RANGE`.
pub const WITNESS_RANGE: i64 = 2;
/// Random probes tried before giving up on a witness.
pub const WITNESS_TRIES: usize = 100_000;

/// Homogeneous form of degree two in `a` and two in `b`, stored densely by
/// normalized monomial `a_i a_l b_j b_m` with `i <= l`, `j <= m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticForm {
    n: usize,
    coeffs: Vec<i64>,
}

impl QuarticForm {
    pub fn zero(n: usize) -> Self {
        QuarticForm {
            n,
            coeffs: vec![0; n * n * n * n],
        }
    }

    fn slot(&self, i: usize, l: usize, j: usize, m: usize) -> usize {
        let n = self.n;
        let (i, l) = (i.min(l), i.max(l));
        let (j, m) = (j.min(m), j.max(m));
        (((i - 1) * n + (l - 1)) * n + (j - 1)) * n + (m - 1)
    }

    /// Adds `c * a_i a_l b_j b_m` (1-based indices, any order within a/b).
    pub fn add(&mut self, i: usize, l: usize, j: usize, m: usize, c: i64) {
        let s = self.slot(i, l, j, m);
        self.coeffs[s] += c;
    }

    pub fn coefficient(&self, i: usize, l: usize, j: usize, m: usize) -> i64 {
        self.coeffs[self.slot(i, l, j, m)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero terms as `((i, l, j, m), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), i64)> + '_ {
        let n = self.n;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(idx, &c)| {
                let m = idx % n + 1;
                let j = idx / n % n + 1;
                let l = idx / (n * n) % n + 1;
                let i = idx / (n * n * n) + 1;
                ((i, l, j, m), c)
            })
    }

    pub fn evaluate(&self, a: &Vector<i64>, b: &Vector<i64>) -> i64 {
        self.terms()
            .map(|((i, l, j, m), c)| c * a[i] * a[l] * b[j] * b[m])
            .sum()
    }
}

/// Symbolic expansion of `|A x B|^2 - |A|^2 |B|^2 + (A.B)^2`.
pub fn xab_form(l: &StructureTensor) -> QuarticForm {
    let n = l.n();
    let mut form = QuarticForm::zero(n);
    for axis in 1..=n {
        let terms: Vec<_> = l.entries_for_axis(axis).collect();
        for &(i, j, s) in &terms {
            for &(p, m, t) in &terms {
                form.add(i, p, j, m, s.as_i64() * t.as_i64());
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            form.add(i, i, j, j, -1);
            form.add(i, j, i, j, 1);
        }
    }
    form
}

/// Whether `X_AB` vanishes for all `A`, `B`.
pub fn xab_identically_zero(l: &StructureTensor) -> bool {
    xab_form(l).is_zero()
}

/// Whether `(A x B).A` and `(A x B).B` both vanish for all `A`, `B`: that is,
/// `L_ijk = -L_kji` and `L_ijk = -L_ikj` for every index triple.
pub fn orthogonality_identically_zero(l: &StructureTensor) -> bool {
    let n = l.n();
    (1..=n).all(|i| {
        (1..=n).all(|j| {
            (1..=n).all(|k| {
                let c = l.coefficient(i, j, k);
                c == -l.coefficient(k, j, i) && c == -l.coefficient(i, k, j)
            })
        })
    })
}

/// A concrete integer pair with nonzero `X_AB`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub a: Vector<i64>,
    pub b: Vector<i64>,
}

impl fmt::Display for Witness {
    /// `a1,a2,...;b1,b2,...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &Vector<i64>| {
            v.components()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.a), join(&self.b))
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let syntax = |column: usize, message: String| Error::Syntax {
            line: 1,
            column,
            message,
        };
        let (lhs, rhs) = s
            .split_once(';')
            .ok_or_else(|| syntax(1, "expected `A;B`".into()))?;
        let parse = |part: &str, offset: usize| -> Result<Vector<i64>, Error> {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|e| syntax(offset + 1, format!("bad integer `{tok}`: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Vector::new)
        };
        let a = parse(lhs, 0)?;
        let b = parse(rhs, lhs.len() + 1)?;
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        Ok(Witness { a, b })
    }
}

/// Seeded random search over small-integer vectors for a pair with nonzero
/// `X_AB`. `stream` selects an independent ChaCha stream, so the result for
/// a given `(seed, stream)` does not depend on what else is searched.
pub fn find_witness(l: &StructureTensor, seed: u64, stream: u64) -> Option<Witness> {
    let n = l.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let draw = |rng: &mut ChaCha8Rng| {
        Vector::new(
            (0..n)
                .map(|_| rng.gen_range(-WITNESS_RANGE..=WITNESS_RANGE))
                .collect(),
        )
    };
    for _ in 0..WITNESS_TRIES {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        if xab_direct(l, &a, &b).expect("vectors sized to the tensor") != 0 {
            return Some(Witness { a, b });
        }
    }
    None
}
