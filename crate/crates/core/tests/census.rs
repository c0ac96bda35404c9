mod common;

use std::collections::BTreeSet;

use common::oracle;
use ncross::tables::{table_schemes, TABLE2, TABLE4};
use ncross::{
    build_tensor, census, emit_scheme_text, enumerate_schemes, feasibility, is_closed,
    orthogonality_defect, parse_scheme_text, validate_scheme, xab_direct, CensusOptions,
    CensusRecord, Scheme, SchemeSpace, Vector,
};

fn all(n: usize) -> Vec<Scheme> {
    enumerate_schemes(feasibility(n).unwrap())
        .unwrap()
        .collect()
}

fn records(n: usize, jobs: usize) -> Vec<CensusRecord> {
    census(
        feasibility(n).unwrap(),
        &CensusOptions {
            jobs,
            seed: 2013,
            ..Default::default()
        },
    )
    .unwrap()
    .collect()
}

#[test]
fn census_counts() {
    for (n, total, closed, xab_zero) in [(3, 1, 1, 1), (5, 6, 0, 0), (7, 6240, 30, 2)] {
        let rs = records(n, 4);
        assert_eq!(rs.len(), total, "n={n}");
        assert_eq!(rs.iter().filter(|r| r.closed).count(), closed, "n={n}");
        assert_eq!(rs.iter().filter(|r| r.xab_zero).count(), xab_zero, "n={n}");
        for (i, r) in rs.iter().enumerate() {
            assert_eq!(r.scheme_id, i as u64);
            assert_eq!(r.orthogonality_zero, r.closed, "n={n} id={i}");
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    assert_eq!(records(7, 1), records(7, 8));
    assert_eq!(records(5, 1), records(5, 3));
}

#[test]
fn witnesses_are_genuine() {
    for n in [5, 7] {
        let schemes = all(n);
        for r in records(n, 4) {
            let s = &schemes[r.scheme_id as usize];
            match (&r.witness, r.xab_zero) {
                (None, true) => {}
                (Some(w), false) => {
                    let value = xab_direct(&build_tensor(s), &w.a, &w.b).unwrap();
                    assert_ne!(value, 0);
                    assert_eq!(
                        value,
                        oracle::xab(&s.to_raw(), w.a.components(), w.b.components())
                    );
                    assert!(w
                        .a
                        .components()
                        .iter()
                        .chain(w.b.components())
                        .all(|x| x.abs() <= 2));
                }
                other => panic!("scheme {}: inconsistent record {other:?}", r.scheme_id),
            }
        }
    }
}

#[test]
fn orthogonality_failures_are_observable() {
    // A scheme that is not closed has some pair {i,j} -> k with {i,k} not -> j,
    // so A = e_i + e_k, B = e_j gives a nonzero (A x B).A.
    for s in all(7).iter().chain(&all(5)) {
        if is_closed(s) {
            continue;
        }
        let l = build_tensor(s);
        let n = s.n();
        let found = s.assignments().any(|(p, k)| {
            let (i, j) = (p.lo(), p.hi());
            let a = Vector::<i64>::basis(n, i).add(&Vector::basis(n, k));
            let b = Vector::basis(n, j);
            let a2 = Vector::<i64>::basis(n, j).add(&Vector::basis(n, k));
            let b2 = Vector::basis(n, i);
            orthogonality_defect(&l, &a, &b).unwrap() != (0, 0)
                || orthogonality_defect(&l, &a2, &b2).unwrap() != (0, 0)
        });
        assert!(found, "{}", emit_scheme_text(s));
    }
}

#[test]
fn closed_seven_dimensional_schemes_are_the_reference_rows() {
    let closed: BTreeSet<Scheme> = all(7).into_iter().filter(is_closed).collect();
    let rows: BTreeSet<Scheme> = table_schemes(TABLE4, 7)
        .unwrap()
        .into_iter()
        .map(|(_, s)| s)
        .collect();
    assert_eq!(closed.len(), 30);
    assert_eq!(closed, rows);
}

#[test]
fn five_dimensional_set_matches_reference() {
    let ours: BTreeSet<Scheme> = all(5).into_iter().collect();
    let rows: BTreeSet<Scheme> = table_schemes(TABLE2, 5)
        .unwrap()
        .into_iter()
        .map(|(_, s)| s)
        .collect();
    assert_eq!(ours, rows);
    assert!(ours.iter().all(|s| !is_closed(s)));
}

#[test]
fn every_scheme_validates_and_round_trips() {
    for n in [3, 5, 7] {
        for s in all(n) {
            assert_eq!(validate_scheme(n, &s.to_raw()).unwrap(), s);
            assert_eq!(parse_scheme_text(&emit_scheme_text(&s)).unwrap(), s);
            let pairs: BTreeSet<_> = s.assignments().map(|(p, _)| p).collect();
            assert_eq!(pairs.len(), n * (n - 1) / 2);
        }
    }
}

#[test]
fn nine_dimensional_stream_is_consistent() {
    let space = SchemeSpace::new(feasibility(9).unwrap()).unwrap();
    let head: Vec<Scheme> = space.stream().take(200).collect();
    for s in &head {
        assert_eq!(&validate_scheme(9, &s.to_raw()).unwrap(), s);
    }
    assert!(head.windows(2).all(|w| w[0] < w[1]));
    let first_partition: Vec<Scheme> = space.partitions().swap_remove(0).take(200).collect();
    assert_eq!(head, first_partition);
    let rs: Vec<_> = census(
        space.dim(),
        &CensusOptions {
            limit: Some(50),
            jobs: 2,
            ..Default::default()
        },
    )
    .unwrap()
    .collect();
    assert_eq!(rs.len(), 50);
}
