//! Bond graphs over finite boxes: interior, boundary, and ghost edges.

use crate::error::{Error, Result};

use super::{add, Coord, CouplingSet, SiteLattice, MAX_D};

/// The far endpoint of an edge whose near endpoint is a box site.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Target {
    /// Another box site.
    In(u32),
    /// A site outside the box (but inside the ambient domain); the
    /// coordinate is kept so boundary conditions can be resolved later.
    Out(Coord),
    /// The ghost vertex; payload is the layer index i_d ∈ 1..=r.
    Ghost(u8),
}

/// One edge: near endpoint, far endpoint, and the coupling carried.
/// Spin and boundary edges carry J; ghost edges carry |η_k|.
#[derive(Clone, Copy, Debug)]
pub struct Edge {
    pub a: u32,
    pub target: Target,
    pub coupling: f64,
}

impl Edge {
    pub fn is_interior(&self) -> bool {
        matches!(self.target, Target::In(_))
    }
    pub fn is_boundary(&self) -> bool {
        matches!(self.target, Target::Out(_))
    }
    pub fn is_ghost(&self) -> bool {
        matches!(self.target, Target::Ghost(_))
    }
}

/// Spin boundary condition on the complement of the box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryCondition {
    Plus,
    Minus,
    /// σ_i = sign((n⃗, i)) outside, with sign(0) = 1.
    PlusMinus { normal: [f64; MAX_D] },
    /// No boundary term at all.
    Free,
}

impl BoundaryCondition {
    pub fn plus_minus(normal: &[f64]) -> Self {
        let mut n = [0f64; MAX_D];
        n[..normal.len()].copy_from_slice(normal);
        BoundaryCondition::PlusMinus { normal: n }
    }

    /// Spin assigned to an outside site; 0 under free boundary conditions.
    pub fn outside_spin(&self, coord: &Coord) -> i8 {
        match self {
            BoundaryCondition::Plus => 1,
            BoundaryCondition::Minus => -1,
            BoundaryCondition::PlusMinus { normal } => {
                let dot: f64 = coord
                    .iter()
                    .zip(normal.iter())
                    .map(|(&c, &n)| n * c as f64)
                    .sum();
                if dot >= 0.0 {
                    1
                } else {
                    -1
                }
            }
            BoundaryCondition::Free => 0,
        }
    }
}

/// Per-site adjacency entry, precomputed from the edge list.
#[derive(Clone, Copy, Debug)]
pub enum NeighborEntry {
    Site { other: u32, j: f64 },
    Boundary { out: Coord, j: f64 },
    /// Signed field η_k acting on this site.
    Field { eta: f64 },
}

/// The edge set 𝓛 of a finite box: all J-positive pairs touching the box
/// (restricted to the ambient domain) plus ghost edges on the first r layers.
/// Immutable after construction; safe to share across threads.
#[derive(Clone, Debug)]
pub struct BondGraph {
    lattice: SiteLattice,
    coupling: CouplingSet,
    /// Signed boundary field per layer (length r; empty without a wall).
    eta: Vec<f64>,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<NeighborEntry>>,
    n_interior: usize,
    n_boundary: usize,
    n_ghost: usize,
}

impl BondGraph {
    /// Build the bond graph of `lattice` under coupling `j` with boundary
    /// field `eta` (one value per layer; required length = field depth).
    pub fn build(lattice: SiteLattice, j: CouplingSet, eta: &[f64]) -> Result<Self> {
        if j.dimension() != lattice.dimension() {
            return Err(Error::invalid(format!(
                "coupling dimension {} does not match box dimension {}",
                j.dimension(),
                lattice.dimension()
            )));
        }
        if !j.is_connected() {
            return Err(Error::invalid(
                "coupling set does not generate a connected graph on Z^d",
            ));
        }
        let r = lattice.field_depth();
        if eta.len() != r {
            return Err(Error::invalid(format!(
                "boundary field has {} components, box expects {r}",
                eta.len()
            )));
        }
        if eta.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("boundary field must be finite"));
        }

        let n = lattice.len();
        let mut edges = Vec::new();
        let mut neighbors: Vec<Vec<NeighborEntry>> = vec![Vec::new(); n];
        let (mut n_interior, mut n_boundary, mut n_ghost) = (0usize, 0usize, 0usize);

        for a in 0..n {
            let ca = *lattice.coord(a);
            for (off, jv) in j.all_offsets() {
                let cb = add(&ca, off);
                if let Some(b) = lattice.site_index(&cb) {
                    neighbors[a].push(NeighborEntry::Site {
                        other: b as u32,
                        j: *jv,
                    });
                    // Record each interior pair once, from its positive offset.
                    if super::lex_positive(off) {
                        edges.push(Edge {
                            a: a as u32,
                            target: Target::In(b as u32),
                            coupling: *jv,
                        });
                        n_interior += 1;
                    }
                } else if lattice.has_exterior() && lattice.in_domain(&cb) {
                    neighbors[a].push(NeighborEntry::Boundary { out: cb, j: *jv });
                    edges.push(Edge {
                        a: a as u32,
                        target: Target::Out(cb),
                        coupling: *jv,
                    });
                    n_boundary += 1;
                }
            }
            if r > 0 {
                let layer = lattice.layer(a);
                if layer >= 1 && (layer as usize) <= r {
                    let field = eta[layer as usize - 1];
                    neighbors[a].push(NeighborEntry::Field { eta: field });
                    edges.push(Edge {
                        a: a as u32,
                        target: Target::Ghost(layer as u8),
                        coupling: field.abs(),
                    });
                    n_ghost += 1;
                }
            }
        }
        Ok(BondGraph {
            lattice,
            coupling: j,
            eta: eta.to_vec(),
            edges,
            neighbors,
            n_interior,
            n_boundary,
            n_ghost,
        })
    }

    pub fn lattice(&self) -> &SiteLattice {
        &self.lattice
    }

    pub fn coupling(&self) -> &CouplingSet {
        &self.coupling
    }

    /// Signed boundary field per layer.
    pub fn eta(&self) -> &[f64] {
        &self.eta
    }

    /// +1 when every η_k ≥ 0, −1 when every η_k ≤ 0, error otherwise.
    pub fn eta_sign(&self) -> Result<i8> {
        if self.eta.iter().all(|&x| x >= 0.0) {
            Ok(1)
        } else if self.eta.iter().all(|&x| x <= 0.0) {
            Ok(-1)
        } else {
            Err(Error::invalid(
                "boundary field components must all have one sign",
            ))
        }
    }

    pub fn n_sites(&self) -> usize {
        self.lattice.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_counts(&self) -> (usize, usize, usize) {
        (self.n_interior, self.n_boundary, self.n_ghost)
    }

    pub fn neighbors(&self, site: usize) -> &[NeighborEntry] {
        &self.neighbors[site]
    }

    /// Local field at `site` given the rest of the configuration:
    /// Σ_b J σ_b + Σ_out J σ̄ + η. `exclude` drops one interior neighbor
    /// (used by exchange dynamics).
    pub fn local_field(
        &self,
        site: usize,
        spins: &[i8],
        bc: &BoundaryCondition,
        exclude: Option<usize>,
    ) -> f64 {
        let mut h = 0.0;
        for entry in &self.neighbors[site] {
            match *entry {
                NeighborEntry::Site { other, j } => {
                    if Some(other as usize) != exclude {
                        h += j * f64::from(spins[other as usize]);
                    }
                }
                NeighborEntry::Boundary { out, j } => {
                    h += j * f64::from(bc.outside_spin(&out));
                }
                NeighborEntry::Field { eta } => h += eta,
            }
        }
        h
    }
}
