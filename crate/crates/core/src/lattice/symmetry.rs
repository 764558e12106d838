//! The hyperoctahedral group B_d of signed axis permutations.

use std::sync::OnceLock;

use super::{Coords, MAX_DIM};

/// `x -> y` with `y[i] = sign[i] * x[perm[i]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    dim: u8,
    perm: [u8; MAX_DIM],
    negate: [bool; MAX_DIM],
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        let mut perm = [0u8; MAX_DIM];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        SignedPermutation {
            dim: dim as u8,
            perm,
            negate: [false; MAX_DIM],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    /// Applies to a point.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.dim())
            .map(|i| {
                let v = x[self.perm[i] as usize];
                if self.negate[i] {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    /// Applies to a cell. Reflection maps `[c, c+1]` to `[-c-1, -c]`.
    pub(crate) fn apply_cell(&self, x: &Coords) -> Coords {
        let mut y = [0; MAX_DIM];
        for i in 0..self.dim() {
            let v = x[self.perm[i] as usize];
            y[i] = if self.negate[i] { -v - 1 } else { v };
        }
        y
    }
}

fn permutations(d: usize) -> Vec<Vec<u8>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (d - 1) as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn build_group(d: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity((1 << d) * (1..=d).product::<usize>());
    for p in permutations(d) {
        for mask in 0u32..(1 << d) {
            let mut g = SignedPermutation::identity(d);
            for i in 0..d {
                g.perm[i] = p[i];
                g.negate[i] = mask & (1 << i) != 0;
            }
            out.push(g);
        }
    }
    // identity first
    let id = out.iter().position(|g| g.is_identity()).unwrap();
    out.swap(0, id);
    out
}

/// All `2^d * d!` signed permutations; the identity comes first.
pub fn hyperoctahedral_group(d: usize) -> &'static [SignedPermutation] {
    static GROUPS: [OnceLock<Vec<SignedPermutation>>; MAX_DIM + 1] =
        [const { OnceLock::new() }; MAX_DIM + 1];
    GROUPS[d].get_or_init(|| build_group(d))
}

fn image_normalized(dim: usize, g: &SignedPermutation, cells: &[Coords], out: &mut Vec<Coords>) {
    out.clear();
    let mut lo = [i32::MAX; MAX_DIM];
    for c in cells {
        let y = g.apply_cell(c);
        for i in 0..dim {
            lo[i] = lo[i].min(y[i]);
        }
        out.push(y);
    }
    for y in out.iter_mut() {
        for i in 0..dim {
            y[i] -= lo[i];
        }
    }
    out.sort_unstable();
}

/// Least normalized image of `cells` over the group.
pub(crate) fn canonical_raw(dim: usize, cells: &[Coords]) -> Vec<Coords> {
    let group = hyperoctahedral_group(dim);
    let mut best = Vec::with_capacity(cells.len());
    image_normalized(dim, &group[0], cells, &mut best);
    let mut buf = Vec::with_capacity(cells.len());
    for g in &group[1..] {
        image_normalized(dim, g, cells, &mut buf);
        if buf < best {
            std::mem::swap(&mut best, &mut buf);
        }
    }
    best
}

/// Whether the normalized identity image is already the least one.
pub(crate) fn is_canonical_raw(dim: usize, cells: &[Coords]) -> bool {
    let group = hyperoctahedral_group(dim);
    let mut base = Vec::with_capacity(cells.len());
    image_normalized(dim, &group[0], cells, &mut base);
    let mut buf = Vec::with_capacity(cells.len());
    group[1..].iter().all(|g| {
        image_normalized(dim, g, cells, &mut buf);
        buf >= base
    })
}
