//! Invariants over random polyominoes.

use std::collections::BTreeSet;

use polyhull::formulas::{fd, FdArguments};
use polyhull::hull::{hull_polygon_2d, hull_volume, simplicial_hull_volume};
use polyhull::lattice::{all_build_tuples, hyperoctahedral_group, is_connected};
use polyhull::rational::int;
use polyhull::{Cell, Polyomino};
use proptest::prelude::*;

/// Grows a polyomino from the origin: each step picks an existing cell and
/// a direction, skipping steps that land on an occupied cell.
fn grown(d: usize, steps: &[(usize, usize)]) -> Polyomino {
    let mut cells = vec![vec![0i32; d]];
    for &(pick, dir) in steps {
        let mut c = cells[pick % cells.len()].clone();
        let axis = (dir / 2) % d;
        c[axis] += if dir % 2 == 0 { 1 } else { -1 };
        if !cells.contains(&c) {
            cells.push(c);
        }
    }
    Polyomino::new(cells.iter().map(|c| Cell::new(c).unwrap())).unwrap()
}

fn polyomino(d: usize, max_steps: usize) -> impl Strategy<Value = Polyomino> {
    prop::collection::vec((0usize..64, 0usize..8), 0..max_steps).prop_map(move |s| grown(d, &s))
}

fn factorial(d: usize) -> i64 {
    (1..=d as i64).product()
}

/// Union-find connectivity on facet adjacency.
fn uf_connected(cells: &[Vec<i32>]) -> bool {
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..cells.len() {
        for j in 0..i {
            let diff: i32 = cells[i].iter().zip(&cells[j]).map(|(a, b)| (a - b).abs()).sum();
            if diff == 1 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..cells.len()).map(|i| find(&mut parent, i)).collect();
    roots.len() == 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_ignores_congruence(p in polyomino(3, 10), g in 0usize..48, shift in prop::array::uniform3(-5i32..5)) {
        let g = &hyperoctahedral_group(3)[g];
        let q = p.transform(g).unwrap().translate(&shift).unwrap();
        prop_assert_eq!(q.canonical_free(), p.canonical_free());
        prop_assert!(p.canonical_free().is_canonical_free());
    }

    #[test]
    fn hull_volume_is_invariant(p in polyomino(2, 12), g in 0usize..8, shift in prop::array::uniform2(-5i32..5)) {
        let g = &hyperoctahedral_group(2)[g];
        let q = p.transform(g).unwrap().translate(&shift).unwrap();
        prop_assert_eq!(hull_volume(&q).unwrap(), hull_volume(&p).unwrap());
    }

    #[test]
    fn hull_volume_is_invariant_3d(p in polyomino(3, 8), g in 0usize..48) {
        let q = p.transform(&hyperoctahedral_group(3)[g]).unwrap();
        prop_assert_eq!(hull_volume(&q).unwrap(), hull_volume(&p).unwrap());
    }

    #[test]
    fn hull_volume_bounds_and_grid(p in polyomino(3, 9)) {
        let v = hull_volume(&p).unwrap();
        prop_assert!(v >= int(p.size() as i64));
        prop_assert!((v * int(factorial(3))).is_integer());
    }

    #[test]
    fn planar_routes_agree(p in polyomino(2, 14)) {
        let v = hull_volume(&p).unwrap();
        prop_assert_eq!(simplicial_hull_volume(&p).unwrap(), v);
        prop_assert_eq!(hull_polygon_2d(&p).unwrap().area(), v);
        prop_assert!((v * int(2)).is_integer());
    }

    #[test]
    fn removing_a_cell_never_grows_the_hull(p in polyomino(2, 12), k in 0usize..32) {
        let cells = p.cells();
        let drop = k % cells.len();
        let rest: Vec<Cell> = cells.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, c)| *c).collect();
        if let Ok(q) = Polyomino::new(rest) {
            prop_assert!(hull_volume(&q).unwrap() <= hull_volume(&p).unwrap());
        }
    }

    #[test]
    fn connectivity_agrees_with_union_find(raw in prop::collection::vec(prop::array::uniform2(0i32..4), 1..10)) {
        let mut cells: Vec<Vec<i32>> = raw.iter().map(|c| c.to_vec()).collect();
        cells.sort();
        cells.dedup();
        let lattice: Vec<Cell> = cells.iter().map(|c| Cell::new(c).unwrap()).collect();
        prop_assert_eq!(is_connected(&lattice, 2).unwrap(), uf_connected(&cells));
    }

    #[test]
    fn normalize_keeps_differences(p in polyomino(3, 10), shift in prop::array::uniform3(-9i32..9)) {
        let q = p.translate(&shift).unwrap().normalize();
        prop_assert_eq!(q.size(), p.size());
        prop_assert_eq!(q.dim(), p.dim());
        prop_assert_eq!(q.normalize(), q.clone());
        let delta: Vec<i32> = (0..3).map(|i| p.cells()[0].coord(i) - q.cells()[0].coord(i)).collect();
        for (a, b) in p.cells().iter().zip(q.cells()) {
            for (i, x) in delta.iter().enumerate() {
                prop_assert_eq!(a.coord(i) - b.coord(i), *x);
            }
        }
    }

    #[test]
    fn build_tuples_satisfy_cell_count(p in polyomino(2, 8)) {
        for t in all_build_tuples(&p).unwrap() {
            prop_assert_eq!(t.cell_count(), p.size() as u64);
            prop_assert_eq!(&t.l, &p.bounding_box());
            let l = t.l.iter().map(|&x| x as i64).collect();
            let v = t.v.iter().map(|&x| x as i64).collect();
            prop_assert!(hull_volume(&p).unwrap() <= fd(&FdArguments::new(l, v).unwrap()));
        }
    }

    #[test]
    fn fd_is_symmetric_in_axes(l in prop::array::uniform4(1i64..8), v in prop::array::uniform4(0i64..5), perm in Just([2usize, 0, 3, 1])) {
        let a = fd(&FdArguments::new(l.to_vec(), v.to_vec()).unwrap());
        let b = fd(&FdArguments::new(perm.iter().map(|&i| l[i]).collect(), perm.iter().map(|&i| v[i]).collect()).unwrap());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn rectangles_are_their_own_hulls() {
    for s in 1..=20 {
        for t in 1..=20 / s {
            let cells: Vec<(i32, i32)> = (0..s).flat_map(|x| (0..t).map(move |y| (x, y))).collect();
            let p = Polyomino::from_xy(&cells).unwrap();
            assert_eq!(hull_volume(&p).unwrap(), int((s * t) as i64));
        }
    }
}
