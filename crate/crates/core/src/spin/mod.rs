//! Spin configurations, Hamiltonians with boundary fields, and local Markov
//! dynamics (heat bath, Kawasaki exchange).

mod dynamics;

pub use dynamics::{heat_bath_sweep, kawasaki_sweep};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::lattice::{BondGraph, BoundaryCondition, NeighborEntry, Target};

/// The chain RNG used everywhere: seedable and stream-splittable, so chain
/// `c` of seed `s` draws from an independent stream.
pub type ChainRng = ChaCha12Rng;

/// RNG for (seed, chain index); recorded in output headers.
pub fn chain_rng(seed: u64, chain: u64) -> ChainRng {
    let mut rng = ChainRng::seed_from_u64(seed);
    rng.set_stream(chain);
    rng
}

/// A ±1 spin field over the sites of a box, in site-index order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinConfig {
    values: Vec<i8>,
}

impl SpinConfig {
    pub fn constant(n_sites: usize, value: i8) -> Result<Self> {
        if value != 1 && value != -1 {
            return Err(Error::invalid("spin values must be ±1"));
        }
        Ok(SpinConfig {
            values: vec![value; n_sites],
        })
    }

    pub fn all_plus(n_sites: usize) -> Self {
        SpinConfig {
            values: vec![1; n_sites],
        }
    }

    pub fn random(n_sites: usize, rng: &mut impl Rng) -> Self {
        SpinConfig {
            values: (0..n_sites)
                .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
                .collect(),
        }
    }

    pub fn from_values(values: Vec<i8>) -> Result<Self> {
        if values.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::invalid("spin values must be ±1"));
        }
        Ok(SpinConfig { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn get(&self, site: usize) -> i8 {
        self.values[site]
    }

    pub fn set(&mut self, site: usize, value: i8) {
        debug_assert!(value == 1 || value == -1);
        self.values[site] = value;
    }

    pub fn flip(&mut self, site: usize) {
        self.values[site] = -self.values[site];
    }

    /// Global spin flip σ → −σ.
    pub fn flipped(&self) -> SpinConfig {
        SpinConfig {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Total spin Σσ_i as an integer.
    pub fn total_spin(&self) -> i64 {
        self.values.iter().map(|&v| i64::from(v)).sum()
    }
}

/// Energy −Σ_{⟨ij⟩⊂Λ} Jσ_iσ_j − Σ_boundary Jσ_iσ̄_j − Σ_k η_k Σ_{i_d=k} σ_i.
pub fn energy(sigma: &SpinConfig, graph: &BondGraph, bc: &BoundaryCondition) -> Result<f64> {
    if sigma.len() != graph.n_sites() {
        return Err(Error::SizeMismatch(format!(
            "spin field has {} sites, graph has {}",
            sigma.len(),
            graph.n_sites()
        )));
    }
    let mut e = 0.0;
    for edge in graph.edges() {
        let sa = f64::from(sigma.get(edge.a as usize));
        match edge.target {
            Target::In(b) => e -= edge.coupling * sa * f64::from(sigma.get(b as usize)),
            Target::Out(c) => e -= edge.coupling * sa * f64::from(bc.outside_spin(&c)),
            Target::Ghost(layer) => {
                // Field term carries the signed η of the layer.
                e -= graph.eta()[layer as usize - 1] * sa;
            }
        }
    }
    Ok(e)
}

/// M = |Λ|^{-1} Σ σ_i ∈ [−1, 1].
pub fn magnetization(sigma: &SpinConfig) -> f64 {
    if sigma.is_empty() {
        return 0.0;
    }
    sigma.total_spin() as f64 / sigma.len() as f64
}

/// Σ_b Jσ_b + Σ_out Jσ̄ + η at one site.
pub fn local_field(
    graph: &BondGraph,
    sigma: &SpinConfig,
    bc: &BoundaryCondition,
    site: usize,
) -> f64 {
    graph.local_field(site, sigma.values(), bc, None)
}

/// Mean spin on layer i_d = `layer` (half-space boxes).
pub fn layer_magnetization(sigma: &SpinConfig, graph: &BondGraph, layer: i32) -> f64 {
    let lat = graph.lattice();
    let mut sum = 0.0;
    let mut count = 0usize;
    for site in 0..lat.len() {
        if lat.layer(site) == layer {
            sum += f64::from(sigma.get(site));
            count += 1;
        }
    }
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}

/// Number of spin neighbors (interior + boundary) of a site.
pub fn coordination(graph: &BondGraph, site: usize) -> usize {
    graph
        .neighbors(site)
        .iter()
        .filter(|e| matches!(e, NeighborEntry::Site { .. } | NeighborEntry::Boundary { .. }))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{CouplingSet, SiteLattice};
    use approx::assert_abs_diff_eq;

    fn small_graph(eta: f64) -> BondGraph {
        let b = SiteLattice::half_space(2, 2, 1).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        BondGraph::build(b, j, &[eta]).unwrap()
    }

    #[test]
    fn all_plus_energy_is_minus_total_coupling() {
        // All-plus σ, plus b.c., η = 0: −(sum of interior + boundary couplings).
        let g = small_graph(0.0);
        let sigma = SpinConfig::all_plus(g.n_sites());
        let (ni, nb, _) = g.edge_counts();
        let e = energy(&sigma, &g, &BoundaryCondition::Plus).unwrap();
        assert_abs_diff_eq!(e, -((ni + nb) as f64), epsilon = 1e-12);
    }

    #[test]
    fn spin_flip_covariance() {
        // energy(σ; η, plus) == energy(−σ; −η, minus) exactly.
        let g_pos = small_graph(0.7);
        let g_neg = small_graph(-0.7);
        let mut rng = chain_rng(7, 0);
        for _ in 0..20 {
            let sigma = SpinConfig::random(g_pos.n_sites(), &mut rng);
            let e1 = energy(&sigma, &g_pos, &BoundaryCondition::Plus).unwrap();
            let e2 = energy(&sigma.flipped(), &g_neg, &BoundaryCondition::Minus).unwrap();
            assert_eq!(e1, e2);
        }
    }

    #[test]
    fn flipping_a_layer_site_moves_field_and_bond_terms() {
        let g = small_graph(0.6);
        let mut sigma = SpinConfig::all_plus(g.n_sites());
        let e_plus = energy(&sigma, &g, &BoundaryCondition::Free).unwrap();
        let site = (0..g.n_sites())
            .find(|&s| g.lattice().layer(s) == 1)
            .unwrap();
        let nb_sum: f64 = g
            .neighbors(site)
            .iter()
            .filter_map(|e| match e {
                NeighborEntry::Site { other, j } => {
                    Some(j * f64::from(sigma.get(*other as usize)))
                }
                _ => None,
            })
            .sum();
        sigma.flip(site);
        let e_minus = energy(&sigma, &g, &BoundaryCondition::Free).unwrap();
        assert_abs_diff_eq!(e_minus - e_plus, 2.0 * 0.6 + 2.0 * nb_sum, epsilon = 1e-12);
    }

    #[test]
    fn magnetization_trivials() {
        let mut sigma = SpinConfig::all_plus(8);
        assert_eq!(magnetization(&sigma), 1.0);
        for i in 0..8 {
            sigma.set(i, -1);
        }
        assert_eq!(magnetization(&sigma), -1.0);
        for i in 0..4 {
            sigma.set(i, 1);
        }
        assert_eq!(magnetization(&sigma), 0.0);
    }

    #[test]
    fn energy_rejects_size_mismatch() {
        let g = small_graph(0.0);
        let sigma = SpinConfig::all_plus(g.n_sites() + 1);
        assert!(energy(&sigma, &g, &BoundaryCondition::Plus).is_err());
    }
}
