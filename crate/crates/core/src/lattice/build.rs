//! Build tuples `(l_1..l_d, v_1..v_d)`.
//!
//! Growing a polyomino one cell at a time either extends the bounding box
//! along one axis or leaves it unchanged. In the latter case one counter
//! `v_i` is bumped, where `i` ranges over the axes along which the new cell
//! touches the cells already placed. Every reachable tuple satisfies
//! `n = 1 + sum(l_i - 1) + sum(v_i)`.

use std::collections::BTreeSet;
use std::fmt;

use super::{Cell, Polyomino, MAX_DIM};
use crate::error::{Error, Result};

/// Largest polyomino accepted by [`all_build_tuples`].
pub const BUILD_TUPLE_GUARD: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BuildTuple {
    pub l: Vec<u32>,
    pub v: Vec<u32>,
}

impl BuildTuple {
    pub fn dim(&self) -> usize {
        self.l.len()
    }

    /// `1 + sum(l_i - 1) + sum(v_i)`.
    pub fn cell_count(&self) -> u64 {
        1 + self.l.iter().map(|&l| l as u64 - 1).sum::<u64>()
            + self.v.iter().map(|&v| v as u64).sum::<u64>()
    }
}

impl fmt::Debug for BuildTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.l.iter().chain(&self.v).map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An insertion order of a polyomino's cells with every prefix connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOrder {
    cells: Vec<Cell>,
}

impl BuildOrder {
    pub fn new(p: &Polyomino, order: Vec<Cell>) -> Result<Self> {
        if order.len() != p.size() {
            return Err(Error::InvalidOrder(format!(
                "order has {} cells, polyomino has {}",
                order.len(),
                p.size()
            )));
        }
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != p.cells() {
            return Err(Error::InvalidOrder(
                "order is not a permutation of the polyomino's cells".into(),
            ));
        }
        for k in 1..order.len() {
            let c = &order[k];
            if !order[..k].iter().any(|x| x.is_facet_adjacent(c)) {
                return Err(Error::InvalidOrder(format!(
                    "cell {c} at position {k} does not touch the earlier cells"
                )));
            }
        }
        Ok(BuildOrder { cells: order })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }
}

type Counters = [u32; MAX_DIM];

fn tuple(l: &[u32], v: &Counters) -> BuildTuple {
    BuildTuple {
        l: l.to_vec(),
        v: v[..l.len()].to_vec(),
    }
}

/// All tuples reachable along one insertion order, branching over every
/// admissible choice of the incremented counter.
pub fn admissible_tuples(p: &Polyomino, order: &BuildOrder) -> BTreeSet<BuildTuple> {
    let d = p.dim();
    let cells = order.cells();
    let mut lo = cells[0].raw();
    let mut hi = cells[0].raw();
    let mut states: BTreeSet<Counters> = BTreeSet::from([[0; MAX_DIM]]);
    for k in 1..cells.len() {
        let c = cells[k].raw();
        let mut grows = false;
        for i in 0..d {
            if c[i] < lo[i] {
                lo[i] = c[i];
                grows = true;
            }
            if c[i] > hi[i] {
                hi[i] = c[i];
                grows = true;
            }
        }
        if grows {
            continue;
        }
        let axes = contact_axes(&cells[k], &cells[..k]);
        states = states
            .iter()
            .flat_map(|v| {
                axes.iter().map(move |&i| {
                    let mut w = *v;
                    w[i] += 1;
                    w
                })
            })
            .collect();
    }
    let l = p.bounding_box();
    states.iter().map(|v| tuple(&l, v)).collect()
}

fn contact_axes(c: &Cell, placed: &[Cell]) -> Vec<usize> {
    (0..c.dim())
        .filter(|&i| {
            placed
                .iter()
                .any(|x| x.is_facet_adjacent(c) && x.coord(i) != c.coord(i))
        })
        .collect()
}

/// Union of [`admissible_tuples`] over every build order.
///
/// Runs a dynamic program over connected cell subsets instead of listing
/// orders: the step from `S \ {c}` to `S` depends only on the subset.
pub fn all_build_tuples(p: &Polyomino) -> Result<BTreeSet<BuildTuple>> {
    let n = p.size();
    if n > BUILD_TUPLE_GUARD {
        return Err(Error::ResourceLimit {
            what: "all_build_tuples cell count",
            value: n,
            limit: BUILD_TUPLE_GUARD,
        });
    }
    let d = p.dim();
    let cells = p.cells();
    // adj[i][axis] bitmask of neighbours of cell i across that axis
    let mut adj = vec![[0u32; MAX_DIM]; n];
    for i in 0..n {
        for j in 0..n {
            if cells[i].is_facet_adjacent(&cells[j]) {
                let axis = (0..d).find(|&a| cells[i].coord(a) != cells[j].coord(a)).unwrap();
                adj[i][axis] |= 1 << j;
            }
        }
    }
    let full = (1u32 << n) - 1;
    let mut reach: Vec<Vec<Counters>> = vec![Vec::new(); 1 << n];
    for i in 0..n {
        reach[1 << i].push([0; MAX_DIM]);
    }
    for set in 1..=full {
        if set.count_ones() < 2 {
            continue;
        }
        let mut acc: BTreeSet<Counters> = BTreeSet::new();
        let mut bits = set;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = set & !(1 << c);
            if reach[prev as usize].is_empty() {
                continue;
            }
            let axes: Vec<usize> = (0..d).filter(|&a| adj[c][a] & prev != 0).collect();
            if axes.is_empty() {
                continue;
            }
            if extends_box(cells, prev, c, d) {
                acc.extend(reach[prev as usize].iter().copied());
            } else {
                for v in &reach[prev as usize] {
                    for &a in &axes {
                        let mut w = *v;
                        w[a] += 1;
                        acc.insert(w);
                    }
                }
            }
        }
        reach[set as usize] = acc.into_iter().collect();
    }
    let l = p.bounding_box();
    Ok(reach[full as usize].iter().map(|v| tuple(&l, v)).collect())
}

fn extends_box(cells: &[Cell], set: u32, c: usize, d: usize) -> bool {
    (0..d).any(|a| {
        let x = cells[c].coord(a);
        let mut below = false;
        let mut above = false;
        let mut bits = set;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let y = cells[j].coord(a);
            below |= y <= x;
            above |= y >= x;
        }
        !(below && above)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(w: i32, h: i32) -> Polyomino {
        let pts: Vec<(i32, i32)> = (0..w).flat_map(|x| (0..h).map(move |y| (x, y))).collect();
        Polyomino::from_xy(&pts).unwrap()
    }

    fn t(l: &[u32], v: &[u32]) -> BuildTuple {
        BuildTuple { l: l.to_vec(), v: v.to_vec() }
    }

    #[test]
    fn single_cell() {
        for d in 1..=4 {
            let p = Polyomino::new([Cell::new(&vec![0; d]).unwrap()]).unwrap();
            let all = all_build_tuples(&p).unwrap();
            assert_eq!(all, BTreeSet::from([t(&vec![1; d], &vec![0; d])]));
            let order = BuildOrder::new(&p, p.cells().to_vec()).unwrap();
            assert_eq!(admissible_tuples(&p, &order), all);
        }
    }

    #[test]
    fn rectangle_two_by_three() {
        let expected = BTreeSet::from([t(&[2, 3], &[2, 0]), t(&[2, 3], &[1, 1]), t(&[2, 3], &[0, 2])]);
        assert_eq!(all_build_tuples(&rect(2, 3)).unwrap(), expected);
    }

    #[test]
    fn bar_and_l() {
        let bar = rect(1, 3);
        for order in [vec![(0, 0), (0, 1), (0, 2)], vec![(0, 1), (0, 0), (0, 2)]] {
            let cells = order.iter().map(|&(x, y)| Cell::new(&[x, y]).unwrap()).collect();
            let o = BuildOrder::new(&bar, cells).unwrap();
            assert_eq!(admissible_tuples(&bar, &o), BTreeSet::from([t(&[1, 3], &[0, 0])]));
        }
        let l = Polyomino::from_xy(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(all_build_tuples(&l).unwrap(), BTreeSet::from([t(&[2, 2], &[0, 0])]));
    }

    #[test]
    fn invalid_orders() {
        let bar = rect(1, 3);
        let cells = |v: &[(i32, i32)]| v.iter().map(|&(x, y)| Cell::new(&[x, y]).unwrap()).collect::<Vec<_>>();
        assert!(matches!(
            BuildOrder::new(&bar, cells(&[(0, 0), (0, 2), (0, 1)])),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            BuildOrder::new(&bar, cells(&[(0, 0), (0, 1)])),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            BuildOrder::new(&bar, cells(&[(0, 0), (0, 1), (0, 5)])),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            all_build_tuples(&rect(1, BUILD_TUPLE_GUARD as i32 + 1)),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(all_build_tuples(&rect(3, 4)).is_ok());
    }

    #[test]
    fn order_simulation_agrees_with_subset_program() {
        // every order of the 2x3 rectangle, unioned
        let p = rect(2, 3);
        let mut union = BTreeSet::new();
        let cells = p.cells().to_vec();
        let mut idx: Vec<usize> = (0..cells.len()).collect();
        permute(&mut idx, 0, &mut |perm| {
            let order: Vec<Cell> = perm.iter().map(|&i| cells[i]).collect();
            if let Ok(o) = BuildOrder::new(&p, order) {
                union.extend(admissible_tuples(&p, &o));
            }
        });
        assert_eq!(union, all_build_tuples(&p).unwrap());
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }
}
