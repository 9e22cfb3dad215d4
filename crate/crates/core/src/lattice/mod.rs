//! Lattice geometry: coupling sets, finite boxes, and bond graphs.

mod boxes;
mod coupling;
mod graph;

pub use boxes::{BoxKind, SiteLattice};
pub use coupling::CouplingSet;
pub use graph::{BondGraph, BoundaryCondition, Edge, NeighborEntry, Target};

/// Maximum spatial dimension the lattice machinery supports.
pub const MAX_D: usize = 4;

/// Lattice coordinate; only the first `d` entries are meaningful.
pub type Coord = [i32; MAX_D];

pub(crate) fn coord_from_slice(v: &[i32]) -> Coord {
    let mut c = [0i32; MAX_D];
    c[..v.len()].copy_from_slice(v);
    c
}

pub(crate) fn add(a: &Coord, b: &Coord) -> Coord {
    let mut c = [0i32; MAX_D];
    for k in 0..MAX_D {
        c[k] = a[k] + b[k];
    }
    c
}

pub(crate) fn neg(a: &Coord) -> Coord {
    let mut c = [0i32; MAX_D];
    for k in 0..MAX_D {
        c[k] = -a[k];
    }
    c
}

pub(crate) fn sup_norm(a: &Coord) -> i32 {
    a.iter().map(|x| x.abs()).max().unwrap_or(0)
}

/// True when the first nonzero component is positive; picks one offset out of
/// every ± pair.
pub(crate) fn lex_positive(a: &Coord) -> bool {
    for &x in a.iter() {
        if x != 0 {
            return x > 0;
        }
    }
    false
}
