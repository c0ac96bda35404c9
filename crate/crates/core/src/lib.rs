//! Generalized vector cross products in odd dimension `n = 2K + 1`.
//!
//! A cross product on `R^n` whose basis products are again basis vectors is
//! fixed by a *scheme*: every pair `{i, j}` is sent to one axis `k`, with the
//! `K` pairs under each axis forming a perfect matching of the other indices.
//! This crate enumerates those schemes, turns each into a signed structure
//! tensor `e_i x e_j = L_ijk e_k`, evaluates the product, and checks the two
//! classical axioms:
//!
//! - orthogonality, `(A x B).A = (A x B).B = 0`;
//! - the magnitude identity `|A x B|^2 = |A|^2 |B|^2 - (A.B)^2 + X_AB`, where
//!   the cross term `X_AB` vanishes for the 3D and octonionic 7D products.
//!
//! ```
//! use ncross::{build_tensor, cross, parse_scheme_text, xab_direct, Vector};
//!
//! let s = parse_scheme_text("24 35 / 13 45 / 14 25 / 15 23 / 12 34").unwrap();
//! let l = build_tensor(&s);
//! let a = Vector::new(vec![0, 1, 1, 0, 0]);
//! let b = Vector::new(vec![0, 0, 0, 1, 1]);
//! assert_eq!(cross(&l, &a, &b).unwrap().components(), &[2, 0, -1, 0, 1]);
//! assert_eq!(xab_direct(&l, &a, &b).unwrap(), 2);
//! ```

pub mod census;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod identity;
pub mod scheme;
pub mod tables;
pub mod tensor;
pub mod verify;

pub use census::{census, classify, write_census_csv, CensusOptions, CensusRecord, CensusSummary};
pub use enumerate::{enumerate_schemes, SchemeSpace, SchemeStream};
pub use error::{Error, Result};
pub use format::{emit_compact, emit_scheme_text, parse_compact, parse_scheme_text, scheme_jsonl};
pub use identity::{
    find_witness, orthogonality_identically_zero, xab_form, xab_identically_zero, QuarticForm,
    Witness,
};
pub use scheme::{
    enumerate_axis_matchings, feasibility, is_closed, validate_scheme, Dimension, IndexPair,
    Matching, Scheme,
};
pub use tables::{reference_scheme, reproduce_tables, TablesReport};
pub use tensor::{
    build_tensor, cross, orient_pair, pair_determinant, Entry, Scalar, Sign, StructureTensor,
    Vector,
};
pub use verify::{orthogonality_defect, xab_direct, xab_pairs, xab_tensor, DefectReport};
