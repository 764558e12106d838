//! Redelmeier's untried-set enumeration of fixed lattice animals.
//!
//! Cells live on a padded box large enough for every animal anchored at the
//! origin. The origin is the least cell in the order that compares the last
//! axis first, so only cells with `(c_{d-1}, .., c_0) >= 0` lexicographically
//! may be added. Every fixed animal is produced exactly once.
//!
//! For parallel runs the search tree is cut at the shallowest depth that
//! yields enough subtrees; the subtrees are independent work units and their
//! outputs are concatenated in unit order, which reproduces the sequential
//! order exactly.

use rayon::prelude::*;

use crate::lattice::MAX_DIM;

type Coords = [i32; MAX_DIM];

/// Minimum number of work units before the tree is cut.
const TARGET_UNITS: usize = 256;

/// A translation-invariant lattice given by its neighbour offsets.
#[derive(Clone, Debug)]
pub struct LatticeGraph {
    dim: usize,
    offsets: Vec<Coords>,
}

impl LatticeGraph {
    /// Facet adjacency on `Z^d`.
    pub fn cubic(dim: usize) -> Self {
        let mut offsets = Vec::with_capacity(2 * dim);
        for axis in 0..dim {
            for s in [1, -1] {
                let mut o = [0; MAX_DIM];
                o[axis] = s;
                offsets.push(o);
            }
        }
        LatticeGraph { dim, offsets }
    }

    /// A custom lattice; every offset must have `|o_i| <= 1`.
    pub fn with_offsets(dim: usize, offsets: &[[i32; 2]]) -> Self {
        assert_eq!(dim, 2, "custom offsets are planar");
        let offsets = offsets
            .iter()
            .map(|o| {
                assert!(o.iter().all(|x| x.abs() <= 1));
                [o[0], o[1], 0, 0]
            })
            .collect();
        LatticeGraph { dim, offsets }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// A subtree of the search: the animal so far, the untried set, and the
/// reached mask at the moment of the cut.
#[derive(Clone)]
struct Unit {
    cells: Vec<usize>,
    untried: Vec<usize>,
    reached: Vec<bool>,
}

/// Enumerator for animals of one size on one lattice.
pub struct Engine {
    n: usize,
    coords: Vec<Coords>,
    allowed: Vec<bool>,
    neighbours: Vec<isize>,
    origin: usize,
}

impl Engine {
    pub fn new(graph: &LatticeGraph, n: usize) -> Self {
        assert!(n >= 1);
        let d = graph.dim;
        let span = n as i32 - 1;
        // padded extents: last axis [-1, n], others [-n, n]
        let mut lo = [0i32; MAX_DIM];
        let mut len = [1usize; MAX_DIM];
        for axis in 0..d {
            lo[axis] = if axis == d - 1 { -1 } else { -span - 1 };
            let hi = span + 1;
            len[axis] = (hi - lo[axis] + 1) as usize;
        }
        let mut stride = [0isize; MAX_DIM];
        let mut acc = 1isize;
        for axis in 0..d {
            stride[axis] = acc;
            acc *= len[axis] as isize;
        }
        let total = acc as usize;
        let mut coords = vec![[0; MAX_DIM]; total];
        let mut allowed = vec![false; total];
        for (idx, slot) in coords.iter_mut().enumerate() {
            let mut rest = idx;
            let mut c = [0; MAX_DIM];
            for axis in 0..d {
                c[axis] = lo[axis] + (rest % len[axis]) as i32;
                rest /= len[axis];
            }
            *slot = c;
            let inside = (0..d).all(|a| {
                let lim = if a == d - 1 { (0, span) } else { (-span, span) };
                (lim.0..=lim.1).contains(&c[a])
            });
            let positive = (0..d)
                .rev()
                .map(|a| c[a])
                .find(|&x| x != 0)
                .is_none_or(|x| x > 0);
            allowed[idx] = inside && positive;
        }
        let neighbours = graph
            .offsets
            .iter()
            .map(|o| (0..d).map(|a| o[a] as isize * stride[a]).sum())
            .collect();
        let origin = (0..d).map(|a| (-lo[a]) as isize * stride[a]).sum::<isize>() as usize;
        Engine {
            n,
            coords,
            allowed,
            neighbours,
            origin,
        }
    }

    fn root(&self) -> Unit {
        let mut reached = vec![false; self.coords.len()];
        reached[self.origin] = true;
        Unit {
            cells: Vec::new(),
            untried: vec![self.origin],
            reached,
        }
    }

    /// Pushes the unreached allowed neighbours of `c` onto `untried`.
    #[inline]
    fn extend(&self, c: usize, untried: &mut Vec<usize>, reached: &mut [bool]) {
        for &o in &self.neighbours {
            let nb = (c as isize + o) as usize;
            if self.allowed[nb] && !reached[nb] {
                reached[nb] = true;
                untried.push(nb);
            }
        }
    }

    fn walk<F: FnMut(&[Coords])>(
        &self,
        cells: &mut Vec<usize>,
        buf: &mut Vec<Coords>,
        mut untried: Vec<usize>,
        reached: &mut [bool],
        visit: &mut F,
    ) {
        while let Some(c) = untried.pop() {
            cells.push(c);
            buf.push(self.coords[c]);
            if cells.len() == self.n {
                visit(buf);
            } else {
                let mut next = untried.clone();
                let mark = next.len();
                self.extend(c, &mut next, reached);
                let fresh: Vec<usize> = next[mark..].to_vec();
                self.walk(cells, buf, next, reached, visit);
                for x in fresh {
                    reached[x] = false;
                }
            }
            cells.pop();
            buf.pop();
        }
    }

    /// All subtrees rooted at depth `depth` (cells placed), in search order.
    fn cut(&self, depth: usize) -> Vec<Unit> {
        fn rec(e: &Engine, depth: usize, cells: &mut Vec<usize>, mut untried: Vec<usize>, reached: &mut Vec<bool>, out: &mut Vec<Unit>) {
            while let Some(c) = untried.pop() {
                cells.push(c);
                let mut next = untried.clone();
                let mark = next.len();
                e.extend(c, &mut next, reached);
                let fresh: Vec<usize> = next[mark..].to_vec();
                if cells.len() == depth {
                    out.push(Unit {
                        cells: cells.clone(),
                        untried: next,
                        reached: reached.clone(),
                    });
                } else {
                    rec(e, depth, cells, next, reached, out);
                }
                for x in fresh {
                    reached[x] = false;
                }
                cells.pop();
            }
        }
        let root = self.root();
        let mut reached = root.reached;
        let mut out = Vec::new();
        rec(self, depth, &mut Vec::new(), root.untried, &mut reached, &mut out);
        out
    }

    /// Work units: the whole tree for tiny sizes, else the shallowest cut
    /// with at least `TARGET_UNITS` subtrees (but never at a leaf).
    fn units(&self) -> Vec<Unit> {
        let mut best = vec![self.root()];
        for depth in 1..self.n {
            best = self.cut(depth);
            if best.len() >= TARGET_UNITS {
                break;
            }
        }
        best
    }

    fn run_unit<F: FnMut(&[Coords])>(&self, unit: &Unit, visit: &mut F) {
        let mut cells = unit.cells.clone();
        let mut buf: Vec<Coords> = cells.iter().map(|&c| self.coords[c]).collect();
        let mut reached = unit.reached.clone();
        if cells.len() == self.n {
            visit(&buf);
            return;
        }
        self.walk(&mut cells, &mut buf, unit.untried.clone(), &mut reached, visit);
    }

    /// Sequential traversal; `visit` receives each animal's cells in
    /// insertion order.
    pub fn for_each<F: FnMut(&[Coords])>(&self, mut visit: F) {
        let root = self.root();
        self.run_unit(&root, &mut visit);
    }

    /// Folds every work unit into its own accumulator and returns them in
    /// unit order. With `workers == 1` everything runs on the calling
    /// thread.
    pub fn fold<T, I, V>(&self, workers: usize, init: I, visit: V) -> Vec<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, &[Coords]) + Sync,
    {
        let units = self.units();
        let one = |u: &Unit| {
            let mut acc = init();
            self.run_unit(u, &mut |cells: &[Coords]| visit(&mut acc, cells));
            acc
        };
        if workers <= 1 {
            return units.iter().map(one).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| units.par_iter().map(one).collect())
    }
}
