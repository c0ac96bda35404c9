//! Reference evaluation straight from a raw pair-to-axis assignment.
//!
//! Uses nothing from the library: the sign of `e_i x e_j` is the parity of
//! `(i, j, k)` as a permutation of its sorted order, counted by inversions.
#![allow(dead_code)]

pub fn parity(t: [usize; 3]) -> i64 {
    let mut inversions = 0;
    for x in 0..3 {
        for y in x + 1..3 {
            if t[x] > t[y] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `L_ijk` for `raw[k - 1]` listing the pairs sent to axis `k`.
pub fn coefficient(raw: &[Vec<(usize, usize)>], i: usize, j: usize, k: usize) -> i64 {
    let hit = raw[k - 1]
        .iter()
        .any(|&(a, b)| (a == i && b == j) || (a == j && b == i));
    if hit {
        parity([i, j, k])
    } else {
        0
    }
}

pub fn cross(raw: &[Vec<(usize, usize)>], a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = raw.len();
    (1..=n)
        .map(|k| {
            let mut c = 0;
            for i in 1..=n {
                for j in 1..=n {
                    c += a[i - 1] * b[j - 1] * coefficient(raw, i, j, k);
                }
            }
            c
        })
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `|A x B|^2 - |A|^2 |B|^2 + (A.B)^2`.
pub fn xab(raw: &[Vec<(usize, usize)>], a: &[i64], b: &[i64]) -> i64 {
    let c = cross(raw, a, b);
    let ab = dot(a, b);
    dot(&c, &c) - dot(a, a) * dot(b, b) + ab * ab
}

/// Classical 3D cross product.
pub fn cross3(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}
