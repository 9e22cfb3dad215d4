//! Exact unnormalized FK weights on small graphs.

use crate::error::{Error, Result};
use crate::lattice::BondGraph;

use super::{bond_probability, find_clusters, BondConfig, Wiring};

/// Number of open clusters contributing a factor 2: clusters meeting the
/// box, excluding the ghost cluster and clusters touching the wired outside
/// (those are infinite under the boundary condition).
pub fn free_cluster_count(omega: &BondConfig, graph: &BondGraph, wiring: Wiring) -> usize {
    let labels = find_clusters(omega, graph, wiring);
    labels
        .clusters()
        .iter()
        .filter(|c| {
            c.size > 0 && !c.contains_ghost && !c.touches_out_pos && !c.touches_out_neg
        })
        .count()
}

/// log of Π p^ω (1−p)^{1−ω} · 2^{c(ω)}. Returns −∞ when an edge with
/// percolation probability 0 is open (or 1 closed).
pub fn log_fk_weight(
    omega: &BondConfig,
    graph: &BondGraph,
    beta: f64,
    wiring: Wiring,
) -> Result<f64> {
    if omega.len() != graph.n_edges() {
        return Err(Error::SizeMismatch(
            "bond field and graph have different edge sets".into(),
        ));
    }
    if !(beta >= 0.0) {
        return Err(Error::invalid("beta must be >= 0"));
    }
    let mut log_w = 0.0;
    for (idx, edge) in graph.edges().iter().enumerate() {
        let p = bond_probability(edge, beta);
        let factor = if omega.is_open(idx) { p } else { 1.0 - p };
        if factor == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        log_w += factor.ln();
    }
    let c = free_cluster_count(omega, graph, wiring);
    Ok(log_w + (c as f64) * std::f64::consts::LN_2)
}

/// Linear-space FK weight; restricted to graphs with at most 40 edges (use
/// [`log_fk_weight`] beyond that).
pub fn fk_weight(
    omega: &BondConfig,
    graph: &BondGraph,
    beta: f64,
    wiring: Wiring,
) -> Result<f64> {
    if graph.n_edges() > 40 {
        return Err(Error::EnumerationCap(format!(
            "{} edges exceed the 40-edge linear-space cap; use log_fk_weight",
            graph.n_edges()
        )));
    }
    Ok(log_fk_weight(omega, graph, beta, wiring)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{CouplingSet, SiteLattice};
    use approx::assert_abs_diff_eq;

    fn two_site_graph() -> BondGraph {
        let b = SiteLattice::block(&[2, 1]).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        BondGraph::build(b, j, &[]).unwrap()
    }

    #[test]
    fn two_sites_one_edge_free() {
        let g = two_site_graph();
        let beta = 0.7;
        let p = 1.0 - (-2.0f64 * beta).exp();
        let closed = BondConfig::all_closed(1);
        let open = BondConfig::all_open(1);
        assert_abs_diff_eq!(
            fk_weight(&closed, &g, beta, Wiring::Free).unwrap(),
            (1.0 - p) * 4.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            fk_weight(&open, &g, beta, Wiring::Free).unwrap(),
            p * 2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn empty_bond_field_counts_all_sites() {
        let b = SiteLattice::block(&[2, 2]).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        let g = BondGraph::build(b, j, &[]).unwrap();
        let closed = BondConfig::all_closed(g.n_edges());
        let w = fk_weight(&closed, &g, 0.0, Wiring::Free).unwrap();
        // β = 0: every (1−p) = 1; weight = 2^{#sites}.
        assert_abs_diff_eq!(w, 16.0, epsilon = 1e-12);
    }

    #[test]
    fn all_open_wired_has_no_free_cluster() {
        let b = SiteLattice::half_space(2, 1, 1).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        let g = BondGraph::build(b, j, &[0.3]).unwrap();
        let open = BondConfig::all_open(g.n_edges());
        let beta = 0.5;
        let mut expect = 0.0;
        for e in g.edges() {
            expect += bond_probability(e, beta).ln();
        }
        // One cluster, wired and ghost-containing: factor 2^0.
        assert_abs_diff_eq!(
            log_fk_weight(&open, &g, beta, Wiring::Wired).unwrap(),
            expect,
            epsilon = 1e-12
        );
    }

    #[test]
    fn impossible_configuration_has_zero_weight() {
        // η = 0 ⇒ ghost edges have p = 0; opening one is impossible.
        let b = SiteLattice::half_space(2, 1, 1).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        let g = BondGraph::build(b, j, &[0.0]).unwrap();
        let open = BondConfig::all_open(g.n_edges());
        assert_eq!(
            log_fk_weight(&open, &g, 0.4, Wiring::Wired).unwrap(),
            f64::NEG_INFINITY
        );
    }
}
