//! Enumeration counts, determinism and the planar area spectra.

use std::collections::BTreeSet;

use polyhull::constructions::construct;
use polyhull::enumeration::{
    area_spectrum, count_extremal, enum_fixed, enum_free, extremal_polyominoes, extremal_shapes,
    EnumerationTask, Mode,
};
use polyhull::formulas::{attainable_set_2d, c2_closed, max_m_2d};
use polyhull::rational::{frac, int};
use polyhull::Error;

#[test]
fn published_polyomino_counts() {
    let free = [1, 1, 2, 5, 12, 35, 108, 369, 1285, 4655, 17073, 63600];
    let fixed = [1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446, 135268, 505861];
    for n in 1..=12 {
        let task = EnumerationTask::new(n, 2, Mode::Free).unwrap().with_workers(4);
        assert_eq!(task.count(), free[n - 1], "free n={n}");
        let task = EnumerationTask::new(n, 2, Mode::Fixed).unwrap().with_workers(4);
        assert_eq!(task.count(), fixed[n - 1], "fixed n={n}");
    }
}

#[test]
fn published_polycube_counts() {
    let free = [1, 1, 2, 7, 23, 112, 607];
    for n in 1..=7 {
        assert_eq!(enum_free(n, 3).unwrap().len(), free[n - 1], "n={n}");
    }
}

#[test]
fn free_counts_match_fixed_dedupe() {
    for (d, n_max) in [(2, 8), (3, 5), (4, 4)] {
        for n in 1..=n_max {
            let classes: BTreeSet<_> = enum_fixed(n, d).unwrap().iter().map(|p| p.canonical_free()).collect();
            let free = enum_free(n, d).unwrap();
            assert_eq!(free.len(), classes.len(), "d={d} n={n}");
            assert_eq!(free.into_iter().collect::<BTreeSet<_>>(), classes);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let task = EnumerationTask::new(9, 2, Mode::Free).unwrap();
    let a = task.collect();
    assert_eq!(a, task.collect());
    assert_eq!(a, task.with_workers(2).collect());
    assert_eq!(a, task.with_workers(8).collect());
}

#[test]
fn spectra_equal_attainable_sets() {
    for n in 1..=12u64 {
        let s = area_spectrum(n as usize, 4).unwrap();
        s.validate().unwrap();
        assert_eq!(s.values(), attainable_set_2d(n).unwrap().values(), "n={n}");
    }
}

#[test]
fn unattainable_pairs_are_refused() {
    for n in 1..=12u64 {
        let spec = area_spectrum(n as usize, 4).unwrap().values();
        for m in 0..=max_m_2d(n) + 3 {
            let area = int(n as i64) + frac(m as i64, 2);
            match construct(n, m) {
                Ok(c) => assert!(spec.contains(&c.area)),
                Err(Error::Unachievable { .. }) => assert!(!spec.contains(&area), "n={n} m={m}"),
                Err(e) => panic!("n={n} m={m}: {e}"),
            }
        }
    }
}

#[test]
fn extremal_sets_match_shape_generation() {
    for n in 1..=12u64 {
        let enumerated: BTreeSet<_> = extremal_polyominoes(n as usize, 4).unwrap().into_iter().collect();
        let generated: BTreeSet<_> = extremal_shapes(n).into_iter().collect();
        assert_eq!(enumerated, generated, "n={n}");
        assert_eq!(enumerated.len() as u64, c2_closed(n));
    }
    assert_eq!(count_extremal(12, 4).unwrap(), 93);
}

#[test]
fn guard_is_a_hard_error() {
    assert!(matches!(enum_free(15, 2), Err(Error::ResourceLimit { .. })));
    assert!(matches!(enum_fixed(10, 3), Err(Error::ResourceLimit { .. })));
    assert!(matches!(area_spectrum(15, 1), Err(Error::ResourceLimit { .. })));
}
