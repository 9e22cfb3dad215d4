//! Exact enumeration on small systems: spin partition functions and Gibbs
//! vectors, FK normalizers and event probabilities, Edwards–Sokal marginals,
//! and exact Swendsen–Wang transition matrices.
//!
//! Enumeration runs parallel over configuration-index ranges with ordered
//! log-space reductions; every public sum has a sequential twin (`*_seq`).

use crate::error::{Error, Result};
use crate::exec::{self, LogSum};
use crate::fk::{union_open_edges, virtual_index, BondConfig, UnionFind, Wiring, GHOST, OUT_POS};
use crate::lattice::{BondGraph, BoundaryCondition, Target};

/// Hard cap on spins for partition-function enumeration.
pub const MAX_ENUM_SPINS: usize = 22;
/// Hard cap on active edges for FK enumeration.
pub const MAX_ENUM_EDGES: usize = 26;
/// Cap for full distribution vectors.
const MAX_DIST_SPINS: usize = 16;
/// Cap for exact transition matrices.
const MAX_MATRIX_SPINS: usize = 8;

fn check_spin_cap(graph: &BondGraph, cap: usize) -> Result<()> {
    if graph.n_sites() > cap {
        return Err(Error::EnumerationCap(format!(
            "{} spins exceed the cap of {cap}",
            graph.n_sites()
        )));
    }
    Ok(())
}

/// Energy of the spin state encoded as a bitmask (bit s set ⟺ σ_s = +1).
pub fn state_energy(graph: &BondGraph, bc: &BoundaryCondition, state: u64) -> f64 {
    let spin = |s: u32| -> f64 {
        if (state >> s) & 1 == 1 {
            1.0
        } else {
            -1.0
        }
    };
    let mut e = 0.0;
    for edge in graph.edges() {
        let sa = spin(edge.a);
        match edge.target {
            Target::In(b) => e -= edge.coupling * sa * spin(b),
            Target::Out(c) => e -= edge.coupling * sa * f64::from(bc.outside_spin(&c)),
            Target::Ghost(layer) => e -= graph.eta()[layer as usize - 1] * sa,
        }
    }
    e
}

fn log_partition_impl(
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
    parallel: bool,
) -> Result<f64> {
    check_spin_cap(graph, MAX_ENUM_SPINS)?;
    let total = 1u64 << graph.n_sites();
    let map = |lo: u64, hi: u64| {
        let mut acc = LogSum::new();
        for state in lo..hi {
            acc.add_log(-beta * state_energy(graph, bc, state));
        }
        acc
    };
    let fold = |mut a: LogSum, b: LogSum| {
        a.merge(b);
        a
    };
    let sum = if parallel {
        exec::fold_ranges(total, map, fold, LogSum::new())
    } else {
        exec::fold_ranges_seq(total, map, fold, LogSum::new())
    };
    Ok(sum.value())
}

/// log Z by full enumeration (≤ 22 spins).
pub fn log_partition(graph: &BondGraph, bc: &BoundaryCondition, beta: f64) -> Result<f64> {
    log_partition_impl(graph, bc, beta, true)
}

/// Sequential twin of [`log_partition`]; the bench suite compares the two.
pub fn log_partition_seq(graph: &BondGraph, bc: &BoundaryCondition, beta: f64) -> Result<f64> {
    log_partition_impl(graph, bc, beta, false)
}

/// The normalized Gibbs vector over all 2^n spin states (≤ 16 spins).
pub fn gibbs_distribution(
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
) -> Result<Vec<f64>> {
    check_spin_cap(graph, MAX_DIST_SPINS)?;
    let n_states = 1usize << graph.n_sites();
    let log_z = log_partition(graph, bc, beta)?;
    let probs = exec::map_indexed(n_states, |state| {
        (-beta * state_energy(graph, bc, state as u64) - log_z).exp()
    });
    Ok(probs)
}

/// ⟨σ_site⟩ by enumeration.
pub fn spin_expectation(
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
    site: usize,
) -> Result<f64> {
    check_spin_cap(graph, MAX_ENUM_SPINS)?;
    let total = 1u64 << graph.n_sites();
    let map = |lo: u64, hi: u64| {
        let mut pos = LogSum::new();
        let mut neg = LogSum::new();
        for state in lo..hi {
            let lw = -beta * state_energy(graph, bc, state);
            if (state >> site) & 1 == 1 {
                pos.add_log(lw);
            } else {
                neg.add_log(lw);
            }
        }
        (pos, neg)
    };
    let fold = |(mut ap, mut an): (LogSum, LogSum), (bp, bn): (LogSum, LogSum)| {
        ap.merge(bp);
        an.merge(bn);
        (ap, an)
    };
    let (pos, neg) = exec::fold_ranges(total, map, fold, (LogSum::new(), LogSum::new()));
    let log_z = exec::log_add_exp(pos.value(), neg.value());
    Ok((pos.value() - log_z).exp() - (neg.value() - log_z).exp())
}

/// log μ(M_Λ ≤ m) by enumeration; errors when the event is empty.
pub fn log_prob_magnetization_le(
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
    m: f64,
) -> Result<f64> {
    check_spin_cap(graph, MAX_ENUM_SPINS)?;
    let n = graph.n_sites();
    let total = 1u64 << n;
    let map = |lo: u64, hi: u64| {
        let mut all = LogSum::new();
        let mut event = LogSum::new();
        for state in lo..hi {
            let lw = -beta * state_energy(graph, bc, state);
            all.add_log(lw);
            let mag = (2.0 * state.count_ones() as f64 - n as f64) / n as f64;
            if mag <= m + 1e-12 {
                event.add_log(lw);
            }
        }
        (all, event)
    };
    let fold = |(mut aa, mut ae): (LogSum, LogSum), (ba, be): (LogSum, LogSum)| {
        aa.merge(ba);
        ae.merge(be);
        (aa, ae)
    };
    let (all, event) = exec::fold_ranges(total, map, fold, (LogSum::new(), LogSum::new()));
    if event.value() == f64::NEG_INFINITY {
        return Err(Error::EmptyEvent(format!(
            "no spin state has magnetization <= {m}"
        )));
    }
    Ok(event.value() - all.value())
}

/// Edge bookkeeping for FK enumeration: edges with percolation probability 0
/// are forced closed and drop out of the exponent.
struct ActiveEdges {
    /// Indices into the graph edge list.
    idx: Vec<usize>,
    ln_open: Vec<f64>,
    ln_closed: Vec<f64>,
}

impl ActiveEdges {
    fn build(graph: &BondGraph, beta: f64) -> Result<Self> {
        let mut idx = Vec::new();
        let mut ln_open = Vec::new();
        let mut ln_closed = Vec::new();
        for (i, edge) in graph.edges().iter().enumerate() {
            let p = crate::fk::bond_probability(edge, beta);
            if p > 0.0 {
                idx.push(i);
                ln_open.push(p.ln());
                ln_closed.push((1.0 - p).ln());
            }
        }
        if idx.len() > MAX_ENUM_EDGES {
            return Err(Error::EnumerationCap(format!(
                "{} active edges exceed the cap of {MAX_ENUM_EDGES}",
                idx.len()
            )));
        }
        Ok(ActiveEdges {
            idx,
            ln_open,
            ln_closed,
        })
    }

    fn log_bond_weight(&self, mask: u64) -> f64 {
        let mut lw = 0.0;
        for i in 0..self.idx.len() {
            lw += if (mask >> i) & 1 == 1 {
                self.ln_open[i]
            } else {
                self.ln_closed[i]
            };
        }
        lw
    }

    fn to_bond_config(&self, mask: u64, n_edges: usize) -> BondConfig {
        let mut omega = BondConfig::all_closed(n_edges);
        for (i, &e) in self.idx.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                omega.set(e, true);
            }
        }
        omega
    }
}

/// Root handles available to FK event predicates.
#[derive(Clone, Copy)]
pub struct FkRoots {
    n_sites: usize,
}

impl FkRoots {
    pub fn outside(&self) -> u32 {
        virtual_index(self.n_sites, OUT_POS)
    }
    pub fn ghost(&self) -> u32 {
        virtual_index(self.n_sites, GHOST)
    }
}

fn fk_unions_for_mask(
    uf: &mut UnionFind,
    active: &ActiveEdges,
    mask: u64,
    graph: &BondGraph,
    wiring: Wiring,
) {
    let omega = active.to_bond_config(mask, graph.n_edges());
    union_open_edges(uf, &omega, graph, wiring);
}

fn free_cluster_count_uf(uf: &mut UnionFind, graph: &BondGraph) -> usize {
    let n = graph.n_sites();
    let excluded: Vec<u32> = (0..3).map(|w| uf.find(virtual_index(n, w))).collect();
    let mut seen = vec![false; n + 3];
    let mut count = 0;
    for site in 0..n {
        let root = uf.find(site as u32);
        if !seen[root as usize] {
            seen[root as usize] = true;
            if !excluded.contains(&root) {
                count += 1;
            }
        }
    }
    count
}

fn fk_sums_impl<E>(
    graph: &BondGraph,
    beta: f64,
    wiring: Wiring,
    event: &E,
    parallel: bool,
) -> Result<(f64, f64)>
where
    E: Fn(&mut UnionFind, FkRoots) -> bool + Sync,
{
    let active = ActiveEdges::build(graph, beta)?;
    let n_active = active.idx.len();
    let total = 1u64 << n_active;
    let roots = FkRoots {
        n_sites: graph.n_sites(),
    };
    let map = |lo: u64, hi: u64| {
        let mut uf = UnionFind::new(graph.n_sites() + 3);
        let mut z = LogSum::new();
        let mut ev = LogSum::new();
        for mask in lo..hi {
            uf.reset(graph.n_sites() + 3);
            fk_unions_for_mask(&mut uf, &active, mask, graph, wiring);
            let c = free_cluster_count_uf(&mut uf, graph);
            let lw = active.log_bond_weight(mask) + c as f64 * std::f64::consts::LN_2;
            z.add_log(lw);
            if event(&mut uf, roots) {
                ev.add_log(lw);
            }
        }
        (z, ev)
    };
    let fold = |(mut az, mut ae): (LogSum, LogSum), (bz, be): (LogSum, LogSum)| {
        az.merge(bz);
        ae.merge(be);
        (az, ae)
    };
    let (z, ev) = if parallel {
        exec::fold_ranges(total, map, fold, (LogSum::new(), LogSum::new()))
    } else {
        exec::fold_ranges_seq(total, map, fold, (LogSum::new(), LogSum::new()))
    };
    Ok((z.value(), ev.value()))
}

/// (log Σ_ω W(ω), log Σ_{ω ∈ event} W(ω)) over all bond configurations.
pub fn fk_log_sums<E>(graph: &BondGraph, beta: f64, wiring: Wiring, event: E) -> Result<(f64, f64)>
where
    E: Fn(&mut UnionFind, FkRoots) -> bool + Sync,
{
    fk_sums_impl(graph, beta, wiring, &event, true)
}

/// Sequential twin of [`fk_log_sums`].
pub fn fk_log_sums_seq<E>(
    graph: &BondGraph,
    beta: f64,
    wiring: Wiring,
    event: E,
) -> Result<(f64, f64)>
where
    E: Fn(&mut UnionFind, FkRoots) -> bool + Sync,
{
    fk_sums_impl(graph, beta, wiring, &event, false)
}

/// Probability of an FK event under the finite-volume FK measure.
pub fn fk_event_probability<E>(
    graph: &BondGraph,
    beta: f64,
    wiring: Wiring,
    event: E,
) -> Result<f64>
where
    E: Fn(&mut UnionFind, FkRoots) -> bool + Sync,
{
    let (z, ev) = fk_log_sums(graph, beta, wiring, event)?;
    Ok((ev - z).exp())
}

/// The spin marginal induced by exact FK enumeration followed by the
/// coloring law: wired clusters inherit the boundary spin, the ghost cluster
/// gets sign(η), all other clusters fair ±1. With `condition_jn` the sum is
/// restricted to the event J_N and the ghost cluster is repainted to −1
/// (negative-field construction).
///
/// Returns the distribution over spin states (bit s ⟺ σ_s = +1).
pub fn es_spin_marginal(
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
    condition_jn: bool,
) -> Result<Vec<f64>> {
    check_spin_cap(graph, MAX_DIST_SPINS)?;
    let active = ActiveEdges::build(graph, beta)?;
    let n_sites = graph.n_sites();
    let n_states = 1usize << n_sites;
    let total = 1u64 << active.idx.len();
    let wiring = Wiring::for_bc(bc);
    let outside_spin: i8 = match bc {
        BoundaryCondition::Plus => 1,
        BoundaryCondition::Minus => -1,
        BoundaryCondition::PlusMinus { .. } => {
            return Err(Error::invalid(
                "split boundaries are not supported by the ES marginal",
            ))
        }
        BoundaryCondition::Free => 0,
    };
    let ghost_spin: i8 = if condition_jn { -1 } else { 1 };

    let map = |lo: u64, hi: u64| -> (Vec<f64>, Vec<f64>) {
        // Kahan-compensated accumulation per spin state.
        let mut dist = vec![0.0f64; n_states];
        let mut comp = vec![0.0f64; n_states];
        let kahan_add = |dist: &mut [f64], comp: &mut [f64], i: usize, x: f64| {
            let y = x - comp[i];
            let t = dist[i] + y;
            comp[i] = (t - dist[i]) - y;
            dist[i] = t;
        };
        let mut uf = UnionFind::new(n_sites + 3);
        for mask in lo..hi {
            uf.reset(n_sites + 3);
            fk_unions_for_mask(&mut uf, &active, mask, graph, wiring);
            let out_root = uf.find(virtual_index(n_sites, OUT_POS));
            let ghost_root = uf.find(virtual_index(n_sites, GHOST));
            if condition_jn && out_root == ghost_root {
                continue;
            }
            // Collect cluster structure: constrained spin per root, free
            // cluster list, and per-root site masks.
            let mut root_of_site = vec![0u32; n_sites];
            let mut roots: Vec<u32> = Vec::new();
            let mut site_mask: Vec<u64> = Vec::new();
            let mut forced: Vec<i8> = Vec::new();
            for site in 0..n_sites {
                let root = uf.find(site as u32);
                root_of_site[site] = root;
                let pos = roots.iter().position(|&r| r == root).unwrap_or_else(|| {
                    roots.push(root);
                    site_mask.push(0);
                    forced.push(0);
                    roots.len() - 1
                });
                site_mask[pos] |= 1u64 << site;
            }
            let mut consistent = true;
            for (pos, &root) in roots.iter().enumerate() {
                let mut f: i8 = 0;
                if outside_spin != 0 && root == out_root {
                    f = outside_spin;
                }
                if root == ghost_root && graph.edge_counts().2 > 0 {
                    // Only force the ghost color when ghost edges exist and
                    // some site actually joins the ghost root.
                    if f != 0 && f != ghost_spin {
                        consistent = false;
                        break;
                    }
                    f = ghost_spin;
                }
                forced[pos] = f;
            }
            if !consistent {
                continue;
            }
            let c = free_cluster_count_uf(&mut uf, graph);
            let w = (active.log_bond_weight(mask) + c as f64 * std::f64::consts::LN_2).exp();
            let free_ids: Vec<usize> =
                (0..roots.len()).filter(|&p| forced[p] == 0).collect();
            let mut base_state = 0u64;
            for (pos, &f) in forced.iter().enumerate() {
                if f == 1 {
                    base_state |= site_mask[pos];
                }
            }
            let n_free = free_ids.len();
            let per_assignment = w / (1u64 << n_free) as f64;
            for assign in 0u64..(1 << n_free) {
                let mut state = base_state;
                for (bit, &pos) in free_ids.iter().enumerate() {
                    if (assign >> bit) & 1 == 1 {
                        state |= site_mask[pos];
                    }
                }
                kahan_add(&mut dist, &mut comp, state as usize, per_assignment);
            }
        }
        (dist, comp)
    };
    let parts = {
        let ranges = exec::split_ranges(total, exec::default_chunks());
        exec::map_indexed(ranges.len(), |i| {
            let (lo, hi) = ranges[i];
            map(lo, hi)
        })
    };
    let mut dist = vec![0.0f64; n_states];
    for (part, _) in parts {
        for (i, x) in part.into_iter().enumerate() {
            dist[i] += x;
        }
    }
    let norm: f64 = dist.iter().sum();
    if norm <= 0.0 {
        return Err(Error::EmptyEvent(
            "conditioned FK sum has zero total weight".into(),
        ));
    }
    for x in &mut dist {
        *x /= norm;
    }
    Ok(dist)
}

/// Exact Swendsen–Wang transition matrix P(σ → σ′) on a small system
/// (≤ 8 spins): bond resampling given σ composed with the coloring law.
pub fn sw_transition_matrix(
    graph: &BondGraph,
    bc: &BoundaryCondition,
    beta: f64,
) -> Result<Vec<Vec<f64>>> {
    check_spin_cap(graph, MAX_MATRIX_SPINS)?;
    let eta_sign = graph.eta_sign()?;
    let ghost_spin: i8 = if eta_sign >= 0 { 1 } else { -1 };
    let outside_spin: i8 = match bc {
        BoundaryCondition::Plus => 1,
        BoundaryCondition::Minus => -1,
        BoundaryCondition::Free => 0,
        BoundaryCondition::PlusMinus { .. } => {
            return Err(Error::invalid(
                "split boundaries are not supported by the exact SW matrix",
            ))
        }
    };
    let n_sites = graph.n_sites();
    let n_states = 1usize << n_sites;
    let wiring = Wiring::for_bc(bc);

    let rows = exec::map_indexed(n_states, |sigma_state| {
        let spin = |s: u32| -> i8 {
            if (sigma_state >> s) & 1 == 1 {
                1
            } else {
                -1
            }
        };
        // Edges whose endpoints agree under σ may open with probability p.
        let mut agree_idx = Vec::new();
        let mut p_open = Vec::new();
        for (i, edge) in graph.edges().iter().enumerate() {
            let sa = spin(edge.a);
            let sb = match edge.target {
                Target::In(b) => spin(b),
                Target::Out(c) => bc.outside_spin(&c),
                Target::Ghost(_) => ghost_spin,
            };
            let p = crate::fk::bond_probability(edge, beta);
            if sa == sb && sa != 0 && p > 0.0 {
                agree_idx.push(i);
                p_open.push(p);
            }
        }
        let mut row = vec![0.0f64; n_states];
        let mut uf = UnionFind::new(n_sites + 3);
        for mask in 0u64..(1 << agree_idx.len()) {
            let mut prob = 1.0;
            let mut omega = BondConfig::all_closed(graph.n_edges());
            for (bit, &edge_idx) in agree_idx.iter().enumerate() {
                if (mask >> bit) & 1 == 1 {
                    prob *= p_open[bit];
                    omega.set(edge_idx, true);
                } else {
                    prob *= 1.0 - p_open[bit];
                }
            }
            uf.reset(n_sites + 3);
            union_open_edges(&mut uf, &omega, graph, wiring);
            let out_root = uf.find(virtual_index(n_sites, OUT_POS));
            let ghost_root = uf.find(virtual_index(n_sites, GHOST));
            let mut roots: Vec<u32> = Vec::new();
            let mut site_mask: Vec<u64> = Vec::new();
            let mut forced: Vec<i8> = Vec::new();
            for site in 0..n_sites {
                let root = uf.find(site as u32);
                let pos = roots.iter().position(|&r| r == root).unwrap_or_else(|| {
                    roots.push(root);
                    site_mask.push(0);
                    forced.push(0);
                    roots.len() - 1
                });
                site_mask[pos] |= 1u64 << site;
            }
            for (pos, &root) in roots.iter().enumerate() {
                let mut f = 0i8;
                if outside_spin != 0 && root == out_root {
                    f = outside_spin;
                }
                if root == ghost_root && graph.edge_counts().2 > 0 {
                    f = ghost_spin;
                }
                forced[pos] = f;
            }
            let free_ids: Vec<usize> =
                (0..roots.len()).filter(|&p| forced[p] == 0).collect();
            let mut base_state = 0u64;
            for (pos, &f) in forced.iter().enumerate() {
                if f == 1 {
                    base_state |= site_mask[pos];
                }
            }
            let per_assignment = prob / (1u64 << free_ids.len()) as f64;
            for assign in 0u64..(1 << free_ids.len()) {
                let mut state = base_state;
                for (bit, &pos) in free_ids.iter().enumerate() {
                    if (assign >> bit) & 1 == 1 {
                        state |= site_mask[pos];
                    }
                }
                row[state as usize] += per_assignment;
            }
        }
        row
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{CouplingSet, SiteLattice};
    use approx::assert_abs_diff_eq;

    fn block(dims: &[usize]) -> BondGraph {
        let b = SiteLattice::block(dims).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        BondGraph::build(b, j, &[]).unwrap()
    }

    #[test]
    fn free_two_site_partition_function() {
        // Z = Σ exp(βσ0σ1) = 2e^β·... : 2 agree states e^{β}, 2 disagree e^{−β}.
        let g = block(&[2, 1]);
        let beta = 0.37;
        let z = log_partition(&g, &BoundaryCondition::Free, beta).unwrap();
        let direct = (2.0 * (beta.exp() + (-beta).exp())).ln();
        assert_abs_diff_eq!(z, direct, epsilon = 1e-12);
    }

    #[test]
    fn parallel_equals_sequential_bitwise() {
        let g = block(&[3, 3]);
        let beta = 0.55;
        let a = log_partition(&g, &BoundaryCondition::Free, beta).unwrap();
        let b = log_partition_seq(&g, &BoundaryCondition::Free, beta).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn gibbs_distribution_normalized_and_positive() {
        let g = block(&[2, 2]);
        let dist = gibbs_distribution(&g, &BoundaryCondition::Free, 0.8).unwrap();
        assert_eq!(dist.len(), 16);
        assert!((dist.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(dist.iter().all(|&p| p > 0.0));
    }

    #[test]
    fn magnetization_probability_trivials() {
        let g = block(&[2, 2]);
        let bc = BoundaryCondition::Free;
        assert_abs_diff_eq!(
            log_prob_magnetization_le(&g, &bc, 0.5, 1.0).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        assert!(log_prob_magnetization_le(&g, &bc, 0.5, -1.5).is_err());
    }

    #[test]
    fn fk_normalizer_matches_spin_partition() {
        // ES identity on a wired half-space box with a ghost field:
        // Z_spin = e^{β·ΣJ + β·Σ|η|} Σ_ω W(ω) with plus b.c. and η ≥ 0.
        let b = SiteLattice::half_space(2, 1, 1).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        let g = BondGraph::build(b, j, &[0.3]).unwrap();
        let beta = 0.6;
        let log_z_spin = log_partition(&g, &BoundaryCondition::Plus, beta).unwrap();
        let (log_z_fk, _) = fk_log_sums(&g, beta, Wiring::Wired, |_, _| true).unwrap();
        let coupling_sum: f64 = g.edges().iter().map(|e| e.coupling).sum();
        assert_abs_diff_eq!(log_z_spin, log_z_fk + beta * coupling_sum, epsilon = 1e-10);
    }

    #[test]
    fn es_marginal_equals_gibbs_small_free_block() {
        let g = block(&[2, 2]);
        let beta = 0.45;
        let bc = BoundaryCondition::Free;
        let gibbs = gibbs_distribution(&g, &bc, beta).unwrap();
        let es = es_spin_marginal(&g, &bc, beta, false).unwrap();
        for (a, b) in gibbs.iter().zip(es.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn sw_matrix_rows_sum_to_one() {
        let g = block(&[2, 2]);
        let m = sw_transition_matrix(&g, &BoundaryCondition::Free, 0.6).unwrap();
        for row in &m {
            assert_abs_diff_eq!(row.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn caps_are_enforced() {
        let b = SiteLattice::block(&[5, 5]).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        let g = BondGraph::build(b, j, &[]).unwrap();
        assert!(matches!(
            log_partition(&g, &BoundaryCondition::Free, 0.5),
            Err(Error::EnumerationCap(_))
        ));
        assert!(matches!(
            sw_transition_matrix(&g, &BoundaryCondition::Free, 0.5),
            Err(Error::EnumerationCap(_))
        ));
    }
}
