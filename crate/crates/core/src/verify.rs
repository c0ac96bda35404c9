//! Axiom defects of the generalized cross product.
//!
//! The cross term `X_AB` is defined as the magnitude defect
//! `|A x B|^2 - |A|^2 |B|^2 + (A.B)^2`. It is computed three ways: straight
//! from that definition, by contracting the four-index tensor
//! `chi = T + delta delta - delta delta`, and as twice the sum of products of
//! pair determinants sharing an axis. On integer input all three agree
//! exactly.

use crate::error::{Error, Result};
use crate::scheme::Scheme;
use crate::tensor::{
    check_len, cross, orient_pair, pair_determinant, Scalar, Sign, StructureTensor, Vector,
};

/// `((A x B).A, (A x B).B)`; both vanish when the first axiom holds.
pub fn orthogonality_defect<T: Scalar>(
    l: &StructureTensor,
    a: &Vector<T>,
    b: &Vector<T>,
) -> Result<(T, T)> {
    let c = cross(l, a, b)?;
    Ok((c.dot(a), c.dot(b)))
}

/// `X_AB` from its definition as the magnitude defect.
pub fn xab_direct<T: Scalar>(l: &StructureTensor, a: &Vector<T>, b: &Vector<T>) -> Result<T> {
    let c = cross(l, a, b)?;
    let ab = a.dot(b);
    Ok(c.norm_sq() - a.norm_sq() * b.norm_sq() + ab * ab)
}

/// `X_AB = a_i b_j a_l b_m chi^{ij}_{lm}` summed over all index tuples, with
/// `T^{ij}_{lm} = sum_k L_ijk L_lmk` and
/// `chi = T + delta_im delta_jl - delta_il delta_jm`.
pub fn xab_tensor<T: Scalar>(l: &StructureTensor, a: &Vector<T>, b: &Vector<T>) -> Result<T> {
    let n = l.n();
    check_len(n, a)?;
    check_len(n, b)?;
    let mut total = T::zero();
    for i in 1..=n {
        for j in 1..=n {
            let lij = l.get(i, j);
            for p in 1..=n {
                for m in 1..=n {
                    let mut chi = 0i64;
                    if let (Some(x), Some(y)) = (lij, l.get(p, m)) {
                        if x.axis == y.axis {
                            chi += x.sign.as_i64() * y.sign.as_i64();
                        }
                    }
                    if i == m && j == p {
                        chi += 1;
                    }
                    if i == p && j == m {
                        chi -= 1;
                    }
                    if chi != 0 {
                        total = total + small::<T>(chi) * a[i] * b[j] * a[p] * b[m];
                    }
                }
            }
        }
    }
    Ok(total)
}

fn small<T: Scalar>(c: i64) -> T {
    let magnitude = (0..c.abs()).fold(T::zero(), |acc, _| acc + T::one());
    if c < 0 {
        -magnitude
    } else {
        magnitude
    }
}

/// `X_AB = 2 sum_k sum_{p<q under k} D_p D_q`, where `D_p` is the pair
/// determinant taken in the oriented order of pair `p`. `l` must be the
/// tensor built from `s`.
pub fn xab_pairs<T: Scalar>(
    l: &StructureTensor,
    a: &Vector<T>,
    b: &Vector<T>,
    s: &Scheme,
) -> Result<T> {
    let n = l.n();
    if s.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.n(),
        });
    }
    check_len(n, a)?;
    check_len(n, b)?;
    let mut total = T::zero();
    for m in s.matchings() {
        let axis = m.axis();
        let mut dets = Vec::with_capacity(m.pairs().len());
        for &pair in m.pairs() {
            let (first, second) = orient_pair(pair, axis)?;
            match l.get(first, second) {
                Some(e) if e.axis == axis && e.sign == Sign::Plus => {}
                _ => return Err(Error::SchemeTensorMismatch { pair, axis }),
            }
            dets.push(pair_determinant(a, b, first, second)?);
        }
        for (x, &dp) in dets.iter().enumerate() {
            for &dq in &dets[x + 1..] {
                total = total + dp * dq;
            }
        }
    }
    Ok(total + total)
}

/// Both axiom defects for one `(A, B)` with `X_AB` by all three routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectReport<T> {
    pub dot_with_a: T,
    pub dot_with_b: T,
    pub xab_direct: T,
    pub xab_tensor: T,
    pub xab_pairs: T,
}

impl<T: Scalar> DefectReport<T> {
    pub fn compute(l: &StructureTensor, s: &Scheme, a: &Vector<T>, b: &Vector<T>) -> Result<Self> {
        let (dot_with_a, dot_with_b) = orthogonality_defect(l, a, b)?;
        Ok(DefectReport {
            dot_with_a,
            dot_with_b,
            xab_direct: xab_direct(l, a, b)?,
            xab_tensor: xab_tensor(l, a, b)?,
            xab_pairs: xab_pairs(l, a, b, s)?,
        })
    }

    /// Exact agreement of the three `X_AB` routes.
    pub fn paths_agree(&self) -> bool {
        self.xab_direct == self.xab_tensor && self.xab_direct == self.xab_pairs
    }
}

impl DefectReport<f64> {
    /// Agreement within an absolute tolerance, for floating-point input.
    pub fn paths_agree_within(&self, tol: f64) -> bool {
        (self.xab_direct - self.xab_tensor).abs() <= tol
            && (self.xab_direct - self.xab_pairs).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::validate_scheme;
    use crate::tensor::build_tensor;

    fn row3() -> Scheme {
        validate_scheme(
            5,
            &[
                vec![(2, 4), (3, 5)],
                vec![(1, 3), (4, 5)],
                vec![(1, 4), (2, 5)],
                vec![(1, 5), (2, 3)],
                vec![(1, 2), (3, 4)],
            ],
        )
        .unwrap()
    }

    fn v(c: &[i64]) -> Vector<i64> {
        Vector::new(c.to_vec())
    }

    #[test]
    fn worked_5d_example() {
        let s = row3();
        let l = build_tensor(&s);
        let a = v(&[0, 1, 1, 0, 0]);
        let b = v(&[0, 0, 0, 1, 1]);
        let r = DefectReport::compute(&l, &s, &a, &b).unwrap();
        assert_eq!(r.xab_direct, 2);
        assert_eq!(r.xab_tensor, 2);
        assert_eq!(r.xab_pairs, 2);
    }

    #[test]
    fn orthogonality_counterexample_5d() {
        let l = build_tensor(&row3());
        let a = v(&[1, 1, 0, 0, 0]);
        let b = v(&[0, 0, 0, 1, 0]);
        assert_eq!(cross(&l, &a, &b).unwrap(), v(&[1, 0, -1, 0, 0]));
        assert_eq!(orthogonality_defect(&l, &a, &b).unwrap(), (1, 0));
    }

    #[test]
    fn basis_pairs_have_no_defect() {
        let s = row3();
        let l = build_tensor(&s);
        for i in 1..=5 {
            for j in (1..=5).filter(|&j| j != i) {
                let a = Vector::<i64>::basis(5, i);
                let b = Vector::basis(5, j);
                let r = DefectReport::compute(&l, &s, &a, &b).unwrap();
                assert_eq!((r.dot_with_a, r.dot_with_b), (0, 0));
                assert_eq!(r.xab_direct, 0);
                assert!(r.paths_agree());
            }
        }
    }

    #[test]
    fn mismatched_scheme_is_rejected() {
        let s = row3();
        let second = crate::enumerate::enumerate_schemes(s.dim())
            .unwrap()
            .find(|x| x != &s)
            .unwrap();
        let l = build_tensor(&second);
        let a = v(&[1, 2, 3, 4, 5]);
        assert!(matches!(
            xab_pairs(&l, &a, &a, &s),
            Err(Error::SchemeTensorMismatch { .. })
        ));
    }

    #[test]
    fn float_paths_agree() {
        let s = row3();
        let l = build_tensor(&s);
        let a = Vector::new(vec![0.3, -0.1, 0.7, 0.2, -0.6]);
        let b = Vector::new(vec![-0.5, 0.4, 0.1, 0.6, 0.45]);
        let r = DefectReport::compute(&l, &s, &a, &b).unwrap();
        assert!(r.paths_agree_within(1e-9));
    }

    #[test]
    fn dimension_mismatch() {
        let s = row3();
        let l = build_tensor(&s);
        let a = v(&[1, 2, 3]);
        let b = v(&[1, 2, 3, 4, 5]);
        assert!(orthogonality_defect(&l, &a, &b).is_err());
        assert!(xab_direct(&l, &a, &b).is_err());
        assert!(xab_tensor(&l, &b, &a).is_err());
        assert!(xab_pairs(&l, &a, &b, &s).is_err());
    }
}
