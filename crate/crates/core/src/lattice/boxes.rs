//! Finite site sets: half-space boxes, bulk boxes, tilted slabs, free blocks.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{coord_from_slice, Coord, MAX_D};

/// Which finite region of the lattice a [`SiteLattice`] covers.
#[derive(Clone, Debug, PartialEq)]
pub enum BoxKind {
    /// Λ_N = {i : −N < i_k ≤ N for k < d, 0 < i_d ≤ N} in the half-space
    /// {i_d ≥ 1}, with a boundary field acting on the first `r` layers.
    HalfSpace { n: i32, r: usize },
    /// Bulk box {i : |i_k| ≤ N} in the full lattice.
    Bulk { n: i32 },
    /// Lattice points of the parallelepiped {|x_k| ≤ l/2 (k < d),
    /// |(n⃗,x)| ≤ m/2} in the full lattice; used for surface-tension boxes.
    Slab { normal: [f64; MAX_D], l: f64, m: f64 },
    /// Free-standing block {0 ≤ i_k < dims_k}; used for small exactly
    /// enumerable systems.
    Block { dims: Vec<usize> },
}

/// An ordered finite set of lattice sites.
///
/// Sites are sorted lexicographically by (i_1, …, i_d), i.e. row-major with
/// i_d fastest. Immutable after construction and safe to share across
/// threads.
#[derive(Clone, Debug)]
pub struct SiteLattice {
    d: usize,
    kind: BoxKind,
    sites: Vec<Coord>,
    index: HashMap<Coord, u32>,
}

impl SiteLattice {
    fn from_sites(d: usize, kind: BoxKind, mut sites: Vec<Coord>) -> Self {
        sites.sort_unstable();
        let index = sites
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, i as u32))
            .collect();
        SiteLattice {
            d,
            kind,
            sites,
            index,
        }
    }

    /// Half-space box Λ_N with boundary-field depth `r`.
    pub fn half_space(d: usize, n: i32, r: usize) -> Result<Self> {
        if !(2..=MAX_D).contains(&d) {
            return Err(Error::invalid(format!("dimension {d} out of range")));
        }
        if n <= 0 {
            return Err(Error::invalid(format!("box parameter N must be > 0, got {n}")));
        }
        if r == 0 {
            return Err(Error::invalid("boundary-field depth r must be >= 1"));
        }
        let mut sites = Vec::new();
        let mut cursor = vec![0i32; d];
        collect_box(
            &mut sites,
            &mut cursor,
            0,
            &|k| if k + 1 == d { (1, n) } else { (-n + 1, n) },
        );
        Ok(Self::from_sites(d, BoxKind::HalfSpace { n, r }, sites))
    }

    /// Bulk box {|i_k| ≤ N}.
    pub fn bulk(d: usize, n: i32) -> Result<Self> {
        if !(2..=MAX_D).contains(&d) {
            return Err(Error::invalid(format!("dimension {d} out of range")));
        }
        if n <= 0 {
            return Err(Error::invalid(format!("box parameter N must be > 0, got {n}")));
        }
        let mut sites = Vec::new();
        let mut cursor = vec![0i32; d];
        collect_box(&mut sites, &mut cursor, 0, &|_| (-n, n));
        Ok(Self::from_sites(d, BoxKind::Bulk { n }, sites))
    }

    /// Free-standing block {0 ≤ i_k < dims_k}.
    pub fn block(dims: &[usize]) -> Result<Self> {
        let d = dims.len();
        if !(2..=MAX_D).contains(&d) {
            return Err(Error::invalid(format!("dimension {d} out of range")));
        }
        if dims.iter().any(|&x| x == 0) {
            return Err(Error::invalid("block dimensions must be positive"));
        }
        let mut sites = Vec::new();
        let mut cursor = vec![0i32; d];
        collect_box(&mut sites, &mut cursor, 0, &|k| (0, dims[k] as i32 - 1));
        Ok(Self::from_sites(d, BoxKind::Block { dims: dims.to_vec() }, sites))
    }

    /// Parallelepiped with base orthogonal to `normal`: lateral extents
    /// |x_k| ≤ l/2 for k < d and |(n⃗,x)| ≤ m/2 along the normal.
    pub fn slab(d: usize, normal: &[f64], l: f64, m: f64) -> Result<Self> {
        if !(2..=MAX_D).contains(&d) || normal.len() != d {
            return Err(Error::invalid("slab normal must have d components"));
        }
        if l <= 0.0 || m <= 0.0 {
            return Err(Error::invalid("slab extents must be positive"));
        }
        let norm: f64 = normal.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::invalid("slab normal must be nonzero"));
        }
        let mut nvec = [0f64; MAX_D];
        for k in 0..d {
            nvec[k] = normal[k] / norm;
        }
        let half_l = l / 2.0;
        let half_m = m / 2.0;
        // Bounding range along each axis.
        let reach = (half_l.max(half_m)).ceil() as i32 + 1;
        let mut sites = Vec::new();
        let mut cursor = vec![0i32; d];
        collect_filtered(&mut sites, &mut cursor, 0, reach, &|c: &[i32]| {
            let tol = 1e-9;
            for (k, ck) in c.iter().enumerate().take(d - 1) {
                let _ = k;
                if (*ck as f64).abs() > half_l + tol {
                    return false;
                }
            }
            let dot: f64 = c.iter().enumerate().map(|(k, &x)| nvec[k] * x as f64).sum();
            dot.abs() <= half_m + tol
        });
        if sites.is_empty() {
            return Err(Error::invalid("slab contains no lattice site"));
        }
        Ok(Self::from_sites(
            d,
            BoxKind::Slab { normal: nvec, l, m },
            sites,
        ))
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn kind(&self) -> &BoxKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn sites(&self) -> &[Coord] {
        &self.sites
    }

    pub fn coord(&self, site: usize) -> &Coord {
        &self.sites[site]
    }

    pub fn site_index(&self, coord: &Coord) -> Option<usize> {
        self.index.get(coord).map(|&i| i as usize)
    }

    /// True when the box lives in the half-space {i_d ≥ 1}; sites below the
    /// wall then do not exist at all.
    pub fn is_half_space(&self) -> bool {
        matches!(self.kind, BoxKind::HalfSpace { .. })
    }

    /// Boundary-field depth r (0 for boxes without a wall field).
    pub fn field_depth(&self) -> usize {
        match self.kind {
            BoxKind::HalfSpace { r, .. } => r,
            _ => 0,
        }
    }

    /// Layer index i_d of a site (only meaningful for half-space boxes).
    pub fn layer(&self, site: usize) -> i32 {
        self.sites[site][self.d - 1]
    }

    /// True when `coord` belongs to the ambient domain: the half-space
    /// {i_d ≥ 1} for half-space boxes, all of Z^d otherwise.
    pub fn in_domain(&self, coord: &Coord) -> bool {
        match self.kind {
            BoxKind::HalfSpace { .. } => coord[self.d - 1] >= 1,
            _ => true,
        }
    }

    /// True when the box is embedded in an infinite ambient lattice and
    /// therefore has boundary edges; free-standing blocks do not.
    pub fn has_exterior(&self) -> bool {
        !matches!(self.kind, BoxKind::Block { .. })
    }

    pub fn from_coords(d: usize, kind: BoxKind, coords: Vec<Coord>) -> Self {
        Self::from_sites(d, kind, coords)
    }
}

fn collect_box(
    out: &mut Vec<Coord>,
    cursor: &mut Vec<i32>,
    k: usize,
    bounds: &impl Fn(usize) -> (i32, i32),
) {
    let d = cursor.len();
    if k == d {
        out.push(coord_from_slice(cursor));
        return;
    }
    let (lo, hi) = bounds(k);
    for v in lo..=hi {
        cursor[k] = v;
        collect_box(out, cursor, k + 1, bounds);
    }
}

fn collect_filtered(
    out: &mut Vec<Coord>,
    cursor: &mut Vec<i32>,
    k: usize,
    reach: i32,
    keep: &impl Fn(&[i32]) -> bool,
) {
    let d = cursor.len();
    if k == d {
        if keep(cursor) {
            out.push(coord_from_slice(cursor));
        }
        return;
    }
    for v in -reach..=reach {
        cursor[k] = v;
        collect_filtered(out, cursor, k + 1, reach, keep);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_space_box_size() {
        // |Λ_N| = (2N)^{d−1}·N
        for d in [2usize, 3] {
            for n in [1i32, 2, 3] {
                let b = SiteLattice::half_space(d, n, 1).unwrap();
                let expect = (2 * n as usize).pow(d as u32 - 1) * n as usize;
                assert_eq!(b.len(), expect, "d={d} n={n}");
                assert!(b.sites().iter().all(|c| c[d - 1] >= 1));
            }
        }
    }

    #[test]
    fn half_space_n1_d2_sites() {
        let b = SiteLattice::half_space(2, 1, 1).unwrap();
        assert_eq!(b.sites(), &[coord_from_slice(&[0, 1]), coord_from_slice(&[1, 1])]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(SiteLattice::half_space(2, 0, 1).is_err());
        assert!(SiteLattice::half_space(2, -2, 1).is_err());
        assert!(SiteLattice::half_space(2, 2, 0).is_err());
        assert!(SiteLattice::block(&[0, 2]).is_err());
    }

    #[test]
    fn index_order_is_row_major_last_fastest() {
        let b = SiteLattice::block(&[2, 3]).unwrap();
        let coords: Vec<[i32; 2]> = b.sites().iter().map(|c| [c[0], c[1]]).collect();
        assert_eq!(
            coords,
            vec![[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]
        );
    }

    #[test]
    fn slab_axis_aligned_counts() {
        // normal e_2, l=2, m=2 → {|x1| ≤ 1, |x2| ≤ 1} = 9 sites in d=2.
        let s = SiteLattice::slab(2, &[0.0, 1.0], 2.0, 2.0).unwrap();
        assert_eq!(s.len(), 9);
    }
}
