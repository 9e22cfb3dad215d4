//! FK (random-cluster) configurations and the Edwards–Sokal coupling:
//! bond sampling given spins, cluster coloring including the ghost rules and
//! negative-field conditioning, Swendsen–Wang sweeps, and exact FK weights.

mod clusters;
mod weight;

pub use clusters::{find_clusters, ClusterInfo, ClusterLabeling, UnionFind};
pub use weight::{fk_weight, log_fk_weight};

pub(crate) use clusters::{union_open_edges, virtual_index, GHOST, OUT_POS};

use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{BondGraph, BoundaryCondition, Edge, Target, MAX_D};
use crate::spin::SpinConfig;

/// How the outside of the box is wired when clustering bond configurations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Wiring {
    /// All outside sites form one root (π ≡ 1).
    Wired,
    /// Open boundary edges are decorations; no outside merging (π ≡ 0).
    Free,
    /// Outside sites split into two roots by sign((n⃗, i)), sign(0) = 1.
    SignSplit { normal: [f64; MAX_D] },
}

impl Wiring {
    /// The wiring that matches a spin boundary condition under the
    /// Edwards–Sokal coupling.
    pub fn for_bc(bc: &BoundaryCondition) -> Wiring {
        match bc {
            BoundaryCondition::Plus | BoundaryCondition::Minus => Wiring::Wired,
            BoundaryCondition::PlusMinus { normal } => Wiring::SignSplit { normal: *normal },
            BoundaryCondition::Free => Wiring::Free,
        }
    }
}

/// ω ∈ {0,1}^edges over a graph's edge list.
#[derive(Clone, Debug, PartialEq)]
pub struct BondConfig {
    open: Vec<bool>,
}

impl BondConfig {
    pub fn all_closed(n_edges: usize) -> Self {
        BondConfig {
            open: vec![false; n_edges],
        }
    }

    pub fn all_open(n_edges: usize) -> Self {
        BondConfig {
            open: vec![true; n_edges],
        }
    }

    /// Decode the low `n_edges` bits of a mask (used by exact enumeration).
    pub fn from_mask(mask: u64, n_edges: usize) -> Self {
        BondConfig {
            open: (0..n_edges).map(|i| (mask >> i) & 1 == 1).collect(),
        }
    }

    pub fn from_flags(open: Vec<bool>) -> Self {
        BondConfig { open }
    }

    pub fn len(&self) -> usize {
        self.open.len()
    }

    pub fn is_empty(&self) -> bool {
        self.open.is_empty()
    }

    pub fn is_open(&self, edge: usize) -> bool {
        self.open[edge]
    }

    pub fn set(&mut self, edge: usize, open: bool) {
        self.open[edge] = open;
    }

    pub fn flags(&self) -> &[bool] {
        &self.open
    }

    pub fn n_open(&self) -> usize {
        self.open.iter().filter(|&&o| o).count()
    }
}

/// Percolation probability of an edge: 1 − e^{−2βJ} on spin edges,
/// 1 − e^{−2β|η_k|} on ghost edges (the edge stores |η_k|).
pub fn bond_probability(edge: &Edge, beta: f64) -> f64 {
    debug_assert!(beta >= 0.0);
    1.0 - (-2.0 * beta * edge.coupling).exp()
}

/// Spin value of the far endpoint of an edge: the other box spin, the
/// boundary-condition spin, or the ghost spin (sign of η; +1 when η = 0).
fn far_spin(
    edge: &Edge,
    sigma: &SpinConfig,
    bc: &BoundaryCondition,
    eta_sign: i8,
) -> i8 {
    match edge.target {
        Target::In(b) => sigma.get(b as usize),
        Target::Out(c) => bc.outside_spin(&c),
        Target::Ghost(_) => eta_sign,
    }
}

/// Sample ω given σ: an edge opens with probability p_β(b) iff its endpoint
/// spins agree (conditional Edwards–Sokal law). The ghost spin is +1 for
/// η ≥ 0 and −1 under the negative-field convention; a free boundary closes
/// boundary edges.
pub fn sample_bonds_given_spins(
    sigma: &SpinConfig,
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
    rng: &mut impl Rng,
) -> Result<BondConfig> {
    if sigma.len() != graph.n_sites() {
        return Err(Error::SizeMismatch(
            "spin field and graph cover different boxes".into(),
        ));
    }
    if !(beta >= 0.0) {
        return Err(Error::invalid("beta must be >= 0"));
    }
    let eta_sign = graph.eta_sign()?;
    let mut omega = BondConfig::all_closed(graph.n_edges());
    for (idx, edge) in graph.edges().iter().enumerate() {
        let sa = sigma.get(edge.a as usize);
        let sb = far_spin(edge, sigma, bc, eta_sign);
        if sa == sb {
            let p = bond_probability(edge, beta);
            if p > 0.0 && rng.gen::<f64>() < p {
                omega.set(idx, true);
            }
        }
    }
    Ok(omega)
}

/// True iff the ghost cluster does not touch the outside (the event J_N).
pub fn indicator_j_n(labels: &ClusterLabeling) -> bool {
    !labels
        .clusters()
        .iter()
        .any(|c| c.contains_ghost && (c.touches_out_pos || c.touches_out_neg))
}

/// Color the clusters of a labeling: clusters wired to the outside inherit
/// the boundary spin, the ghost cluster gets +1 for η ≥ 0 and −1 under the
/// negative-field convention, every other cluster an independent fair ±1.
///
/// Signals a violated precondition when constraints clash (ghost and outside
/// in one cluster with a negative field, or a cluster touching both signs of
/// a split boundary).
pub fn color_clusters(
    labels: &ClusterLabeling,
    bc: &BoundaryCondition,
    eta_sign: i8,
    rng: &mut impl Rng,
) -> Result<SpinConfig> {
    let ghost_spin: i8 = if eta_sign >= 0 { 1 } else { -1 };
    let mut colors = Vec::with_capacity(labels.n_clusters());
    for info in labels.clusters() {
        let mut forced: Option<i8> = None;
        let force = |spin: i8, forced: &mut Option<i8>| -> Result<()> {
            match *forced {
                Some(s) if s != spin => Err(Error::ConditioningViolated(
                    "cluster carries contradictory boundary/ghost constraints".into(),
                )),
                _ => {
                    *forced = Some(spin);
                    Ok(())
                }
            }
        };
        if info.touches_out_pos {
            let s = match bc {
                BoundaryCondition::Plus => 1,
                BoundaryCondition::Minus => -1,
                BoundaryCondition::PlusMinus { .. } => 1,
                BoundaryCondition::Free => {
                    return Err(Error::Internal(
                        "outside flag set under free wiring".into(),
                    ))
                }
            };
            force(s, &mut forced)?;
        }
        if info.touches_out_neg {
            force(-1, &mut forced)?;
        }
        if info.contains_ghost {
            force(ghost_spin, &mut forced)?;
        }
        let spin = match forced {
            Some(s) => s,
            None => {
                if rng.gen_bool(0.5) {
                    1
                } else {
                    -1
                }
            }
        };
        colors.push(spin);
    }
    let values = labels
        .site_clusters()
        .iter()
        .map(|&c| colors[c as usize])
        .collect();
    SpinConfig::from_values(values)
}

/// One Swendsen–Wang update: resample bonds given spins, then recolor the
/// clusters. Under a negative boundary field this runs as a rejection scheme
/// on the event J_N (the conditional bond law lands in J_N already, so the
/// loop exists only to honor the conditioning contract); `rejection_cap`
/// bounds the resampling attempts.
///
/// Returns the number of bond draws used.
pub fn sw_sweep(
    sigma: &mut SpinConfig,
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
    rng: &mut impl Rng,
    rejection_cap: u64,
) -> Result<u64> {
    let eta_sign = graph.eta_sign()?;
    let wiring = Wiring::for_bc(bc);
    let mut attempts = 0u64;
    loop {
        attempts += 1;
        if attempts > rejection_cap.max(1) {
            return Err(Error::RejectionOverflow(attempts - 1));
        }
        let omega = sample_bonds_given_spins(sigma, graph, bc, beta, rng)?;
        let labels = find_clusters(&omega, graph, wiring);
        if eta_sign < 0 && !indicator_j_n(&labels) {
            continue;
        }
        *sigma = color_clusters(&labels, bc, eta_sign, rng)?;
        return Ok(attempts);
    }
}
