//! Union-find cluster labeling of bond configurations.

use crate::lattice::{BondGraph, Coord, Target, MAX_D};

use super::{BondConfig, Wiring};

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n as u32);
        self.size.clear();
        self.size.resize(n, 1);
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = self.parent[x as usize];
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }

    pub fn same(&mut self, a: u32, b: u32) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Per-cluster summary: size counts box sites only; bounding boxes cover all
/// member box sites.
#[derive(Clone, Debug)]
pub struct ClusterInfo {
    pub size: u32,
    pub bbox_min: Coord,
    pub bbox_max: Coord,
    pub touches_out_pos: bool,
    pub touches_out_neg: bool,
    pub contains_ghost: bool,
}

/// A partition of the box sites into open clusters, plus connectivity flags
/// to the wired outside root(s) and the ghost vertex.
#[derive(Clone, Debug)]
pub struct ClusterLabeling {
    site_cluster: Vec<u32>,
    clusters: Vec<ClusterInfo>,
}

impl ClusterLabeling {
    pub fn cluster_of(&self, site: usize) -> u32 {
        self.site_cluster[site]
    }

    pub fn site_clusters(&self) -> &[u32] {
        &self.site_cluster
    }

    pub fn clusters(&self) -> &[ClusterInfo] {
        &self.clusters
    }

    pub fn n_clusters(&self) -> usize {
        self.clusters.len()
    }

    /// Cluster containing the ghost vertex, if any box site joins it.
    pub fn ghost_cluster(&self) -> Option<u32> {
        self.clusters
            .iter()
            .position(|c| c.contains_ghost)
            .map(|i| i as u32)
    }
}

/// Virtual root layout used while building labelings: box sites first, then
/// outside-plus, outside-minus, ghost.
pub(crate) const OUT_POS: usize = 0;
pub(crate) const OUT_NEG: usize = 1;
pub(crate) const GHOST: usize = 2;

pub(crate) fn virtual_index(n_sites: usize, which: usize) -> u32 {
    (n_sites + which) as u32
}

/// Merge the endpoints of every open edge into a union-find over the box
/// sites plus the three virtual roots, per the wiring rule.
pub(crate) fn union_open_edges(
    uf: &mut UnionFind,
    omega: &BondConfig,
    graph: &BondGraph,
    wiring: Wiring,
) {
    let n = graph.n_sites();
    for (idx, edge) in graph.edges().iter().enumerate() {
        if !omega.is_open(idx) {
            continue;
        }
        match edge.target {
            Target::In(b) => uf.union(edge.a, b),
            Target::Out(c) => match wiring {
                Wiring::Wired => uf.union(edge.a, virtual_index(n, OUT_POS)),
                Wiring::Free => {}
                Wiring::SignSplit { normal } => {
                    let dot: f64 = c
                        .iter()
                        .zip(normal.iter())
                        .map(|(&x, &nk)| nk * x as f64)
                        .sum();
                    let root = if dot >= 0.0 { OUT_POS } else { OUT_NEG };
                    uf.union(edge.a, virtual_index(n, root));
                }
            },
            Target::Ghost(_) => uf.union(edge.a, virtual_index(n, GHOST)),
        }
    }
}

/// Label the open clusters of `omega`. Outside-boundary edges merge into a
/// single wired root under `Wiring::Wired`, into sign-split roots under
/// `Wiring::SignSplit`, and are ignored under `Wiring::Free`; ghost edges
/// merge into the ghost root.
pub fn find_clusters(omega: &BondConfig, graph: &BondGraph, wiring: Wiring) -> ClusterLabeling {
    let n = graph.n_sites();
    let mut uf = UnionFind::new(n + 3);
    union_open_edges(&mut uf, omega, graph, wiring);

    let d = graph.lattice().dimension();
    let mut root_to_id: Vec<i32> = vec![-1; n + 3];
    let mut clusters: Vec<ClusterInfo> = Vec::new();
    let mut site_cluster = vec![0u32; n];

    for site in 0..n {
        let root = uf.find(site as u32) as usize;
        let id = if root_to_id[root] >= 0 {
            root_to_id[root] as usize
        } else {
            let id = clusters.len();
            root_to_id[root] = id as i32;
            clusters.push(ClusterInfo {
                size: 0,
                bbox_min: [i32::MAX; MAX_D],
                bbox_max: [i32::MIN; MAX_D],
                touches_out_pos: false,
                touches_out_neg: false,
                contains_ghost: false,
            });
            id
        };
        site_cluster[site] = id as u32;
        let info = &mut clusters[id];
        info.size += 1;
        let c = graph.lattice().coord(site);
        for k in 0..d {
            info.bbox_min[k] = info.bbox_min[k].min(c[k]);
            info.bbox_max[k] = info.bbox_max[k].max(c[k]);
        }
    }
    for (which, flag) in [(OUT_POS, 0), (OUT_NEG, 1), (GHOST, 2)] {
        let root = uf.find(virtual_index(n, which)) as usize;
        if root_to_id[root] >= 0 {
            let info = &mut clusters[root_to_id[root] as usize];
            match flag {
                0 => info.touches_out_pos = true,
                1 => info.touches_out_neg = true,
                _ => info.contains_ghost = true,
            }
        }
    }
    ClusterLabeling {
        site_cluster,
        clusters,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fk::BondConfig;
    use crate::lattice::{CouplingSet, SiteLattice};

    fn half_space_graph() -> BondGraph {
        let b = SiteLattice::half_space(2, 1, 1).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        BondGraph::build(b, j, &[0.5]).unwrap()
    }

    #[test]
    fn all_closed_every_site_alone() {
        let g = half_space_graph();
        let omega = BondConfig::all_closed(g.n_edges());
        let labels = find_clusters(&omega, &g, Wiring::Wired);
        assert_eq!(labels.n_clusters(), g.n_sites());
        assert!(labels.clusters().iter().all(|c| c.size == 1
            && !c.touches_out_pos
            && !c.contains_ghost));
    }

    #[test]
    fn all_open_single_flagged_cluster() {
        let g = half_space_graph();
        let omega = BondConfig::all_open(g.n_edges());
        let labels = find_clusters(&omega, &g, Wiring::Wired);
        assert_eq!(labels.n_clusters(), 1);
        let c = &labels.clusters()[0];
        assert!(c.touches_out_pos && c.contains_ghost);
        assert_eq!(c.size as usize, g.n_sites());
    }

    #[test]
    fn hand_built_two_open_edges() {
        // 2×2 block, open the two vertical edges: two 2-site clusters.
        let b = SiteLattice::block(&[2, 2]).unwrap();
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        let g = BondGraph::build(b, j, &[]).unwrap();
        let mut omega = BondConfig::all_closed(g.n_edges());
        // Edge list order is deterministic; find the (0,0)-(0,1) and
        // (1,0)-(1,1) edges by endpoints.
        for (idx, e) in g.edges().iter().enumerate() {
            if let Target::In(bidx) = e.target {
                let ca = g.lattice().coord(e.a as usize);
                let cb = g.lattice().coord(bidx as usize);
                if ca[0] == cb[0] {
                    omega.set(idx, true);
                }
            }
        }
        let labels = find_clusters(&omega, &g, Wiring::Free);
        assert_eq!(labels.n_clusters(), 2);
        let a = g.lattice().site_index(&crate::lattice::coord_from_slice(&[0, 0])).unwrap();
        let b1 = g.lattice().site_index(&crate::lattice::coord_from_slice(&[0, 1])).unwrap();
        let c = g.lattice().site_index(&crate::lattice::coord_from_slice(&[1, 0])).unwrap();
        assert_eq!(labels.cluster_of(a), labels.cluster_of(b1));
        assert_ne!(labels.cluster_of(a), labels.cluster_of(c));
    }

    #[test]
    fn bounding_boxes_cover_members() {
        let g = half_space_graph();
        let omega = BondConfig::all_open(g.n_edges());
        let labels = find_clusters(&omega, &g, Wiring::Free);
        for site in 0..g.n_sites() {
            let info = &labels.clusters()[labels.cluster_of(site) as usize];
            let c = g.lattice().coord(site);
            for k in 0..2 {
                assert!(info.bbox_min[k] <= c[k] && c[k] <= info.bbox_max[k]);
            }
        }
    }
}
