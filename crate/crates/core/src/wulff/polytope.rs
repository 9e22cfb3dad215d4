//! Bounded convex polytopes from half-space intersections (d = 2, 3).

use crate::error::{Error, Result};

use super::{addv, cross, dot, norm, scale, sub, Vec3};

const VERTEX_TOL: f64 = 1e-9;
const INCIDENCE_TOL: f64 = 1e-8;

/// Half-space {x : (normal, x) ≤ offset}; the normal is a unit vector.
#[derive(Clone, Copy, Debug)]
pub struct HalfSpace {
    pub normal: Vec3,
    pub offset: f64,
}

/// One facet: supporting half-space, member vertex ids (ordered cycle in
/// d = 3, the two endpoints in d = 2), and its (d−1)-measure.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Vec3,
    pub offset: f64,
    pub vertices: Vec<usize>,
    pub area: f64,
}

/// A bounded convex polytope with both H- and V-representations.
#[derive(Clone, Debug)]
pub struct ConvexPolytope {
    d: usize,
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<Vec3>,
    facets: Vec<Facet>,
    volume: f64,
}

impl ConvexPolytope {
    /// Intersect half-spaces and enumerate vertices. Fails when the family
    /// is unbounded, infeasible, or not full-dimensional.
    pub fn from_halfspaces(d: usize, halfspaces: &[HalfSpace]) -> Result<Self> {
        if !(2..=3).contains(&d) {
            return Err(Error::invalid("polytopes support d = 2, 3 only"));
        }
        let mut hs: Vec<HalfSpace> = Vec::new();
        for h in halfspaces {
            let len = norm(&h.normal);
            if len < 1e-12 {
                return Err(Error::invalid("zero normal in half-space family"));
            }
            if d == 2 && h.normal[2].abs() > 1e-12 {
                return Err(Error::invalid("2d half-space with a third component"));
            }
            let unit = scale(&h.normal, 1.0 / len);
            let offset = h.offset / len;
            // Keep only the tightest of near-parallel duplicates.
            match hs
                .iter_mut()
                .find(|g| dot(&g.normal, &unit) > 1.0 - 1e-12)
            {
                Some(g) => g.offset = g.offset.min(offset),
                None => hs.push(HalfSpace {
                    normal: unit,
                    offset,
                }),
            }
        }
        if hs.len() < d + 1 {
            return Err(Error::Unbounded(
                "fewer half-spaces than needed to bound a body".into(),
            ));
        }
        if d == 2 {
            positive_span_2d(&hs)?;
        }

        let vertices = match d {
            2 => enumerate_vertices_2d(&hs),
            _ => enumerate_vertices_3d(&hs),
        };
        if vertices.len() < d + 1 {
            return Err(Error::invalid(
                "half-space intersection is empty or lower-dimensional",
            ));
        }
        let facets = match d {
            2 => facets_2d(&hs, &vertices),
            _ => facets_3d(&hs, &vertices),
        };
        // Minkowski closure Σ A_f n_f = 0 certifies boundedness (and catches
        // vertices missed by the accelerated 3d path).
        let mut closure = [0.0; 3];
        let mut total_area = 0.0;
        for f in &facets {
            closure = addv(&closure, &scale(&f.normal, f.area));
            total_area += f.area;
        }
        if total_area <= 0.0 || norm(&closure) > 1e-6 * total_area.max(1.0) {
            return Err(Error::Unbounded(format!(
                "facet closure defect {:.3e} (area {total_area:.3e})",
                norm(&closure)
            )));
        }
        let volume = match d {
            2 => polygon_area(&vertices),
            _ => volume_3d(&vertices, &facets),
        };
        if !(volume > 0.0) {
            return Err(Error::invalid("polytope has zero volume"));
        }
        Ok(ConvexPolytope {
            d,
            halfspaces: hs,
            vertices,
            facets,
            volume,
        })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Support function τ_P(n) = max_v (n, v).
    pub fn support(&self, n: &Vec3) -> f64 {
        self.vertices
            .iter()
            .map(|v| dot(n, v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains(&self, x: &Vec3, tol: f64) -> bool {
        self.halfspaces
            .iter()
            .all(|h| dot(&h.normal, x) <= h.offset + tol)
    }

    pub fn bbox(&self) -> (Vec3, Vec3) {
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for v in &self.vertices {
            for k in 0..3 {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        (lo, hi)
    }

    /// Dilate about the origin by s > 0.
    pub fn dilate(&self, s: f64) -> Result<ConvexPolytope> {
        if !(s > 0.0) {
            return Err(Error::invalid("dilation factor must be positive"));
        }
        let mut out = self.clone();
        for h in &mut out.halfspaces {
            h.offset *= s;
        }
        for v in &mut out.vertices {
            *v = scale(v, s);
        }
        for f in &mut out.facets {
            f.offset *= s;
            f.area *= s.powi(self.d as i32 - 1);
        }
        out.volume *= s.powi(self.d as i32);
        Ok(out)
    }

    pub fn translate(&self, t: &Vec3) -> ConvexPolytope {
        let mut out = self.clone();
        for h in &mut out.halfspaces {
            h.offset += dot(&h.normal, t);
        }
        for v in &mut out.vertices {
            *v = addv(v, t);
        }
        for f in &mut out.facets {
            f.offset += dot(&f.normal, t);
        }
        out
    }

    /// Facet centroid (mean of its vertices).
    pub fn facet_centroid(&self, facet: &Facet) -> Vec3 {
        let mut c = [0.0; 3];
        for &vi in &facet.vertices {
            c = addv(&c, &self.vertices[vi]);
        }
        scale(&c, 1.0 / facet.vertices.len() as f64)
    }

    /// Vertex centroid.
    pub fn centroid(&self) -> Vec3 {
        let mut c = [0.0; 3];
        for v in &self.vertices {
            c = addv(&c, v);
        }
        scale(&c, 1.0 / self.vertices.len() as f64)
    }
}

fn positive_span_2d(hs: &[HalfSpace]) -> Result<()> {
    let mut angles: Vec<f64> = hs.iter().map(|h| h.normal[1].atan2(h.normal[0])).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut max_gap: f64 = 0.0;
    for i in 0..angles.len() {
        let next = if i + 1 == angles.len() {
            angles[0] + 2.0 * std::f64::consts::PI
        } else {
            angles[i + 1]
        };
        max_gap = max_gap.max(next - angles[i]);
    }
    if max_gap >= std::f64::consts::PI - 1e-9 {
        return Err(Error::Unbounded(
            "normal directions leave a half-plane gap".into(),
        ));
    }
    Ok(())
}

fn satisfies_all(hs: &[HalfSpace], x: &Vec3) -> bool {
    hs.iter().all(|h| dot(&h.normal, x) <= h.offset + VERTEX_TOL)
}

fn push_dedup(vertices: &mut Vec<Vec3>, x: Vec3) {
    if !vertices
        .iter()
        .any(|v| norm(&sub(v, &x)) < 10.0 * VERTEX_TOL)
    {
        vertices.push(x);
    }
}

fn enumerate_vertices_2d(hs: &[HalfSpace]) -> Vec<Vec3> {
    let mut vertices = Vec::new();
    for i in 0..hs.len() {
        for j in (i + 1)..hs.len() {
            let (a, b) = (&hs[i], &hs[j]);
            let det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
            if det.abs() < 1e-10 {
                continue;
            }
            let x = (a.offset * b.normal[1] - b.offset * a.normal[1]) / det;
            let y = (a.normal[0] * b.offset - b.normal[0] * a.offset) / det;
            let cand = [x, y, 0.0];
            if satisfies_all(hs, &cand) {
                push_dedup(&mut vertices, cand);
            }
        }
    }
    vertices
}

fn solve_3x3(a: &Vec3, b: &Vec3, c: &Vec3, rhs: &Vec3) -> Option<Vec3> {
    let det = dot(a, &cross(b, c));
    if det.abs() < 1e-10 {
        return None;
    }
    // Cramer's rule with the constraint matrix rows a, b, c.
    let dx = rhs[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (rhs[1] * c[2] - b[2] * rhs[2])
        + a[2] * (rhs[1] * c[1] - b[1] * rhs[2]);
    let dy = a[0] * (rhs[1] * c[2] - b[2] * rhs[2]) - rhs[0] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * rhs[2] - rhs[1] * c[0]);
    let dz = a[0] * (b[1] * rhs[2] - rhs[1] * c[1]) - a[1] * (b[0] * rhs[2] - rhs[1] * c[0])
        + rhs[0] * (b[0] * c[1] - b[1] * c[0]);
    Some([dx / det, dy / det, dz / det])
}

/// Brute-force cutoff: above this many half-spaces the 3d enumerator only
/// tries triples of mutually near normals and relies on the Minkowski
/// closure check to certify completeness.
const BRUTE_FORCE_LIMIT: usize = 80;
const NEAR_NEIGHBORS: usize = 24;

fn enumerate_vertices_3d(hs: &[HalfSpace]) -> Vec<Vec3> {
    let m = hs.len();
    let mut vertices = Vec::new();
    let mut try_triple = |i: usize, j: usize, k: usize, vertices: &mut Vec<Vec3>| {
        let rhs = [hs[i].offset, hs[j].offset, hs[k].offset];
        if let Some(x) = solve_3x3(&hs[i].normal, &hs[j].normal, &hs[k].normal, &rhs) {
            if satisfies_all(hs, &x) {
                push_dedup(vertices, x);
            }
        }
    };
    if m <= BRUTE_FORCE_LIMIT {
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    try_triple(i, j, k, &mut vertices);
                }
            }
        }
    } else {
        // For fine families vertices come from mutually close normals.
        for i in 0..m {
            let mut near: Vec<(f64, usize)> = (0..m)
                .filter(|&j| j != i)
                .map(|j| (-dot(&hs[i].normal, &hs[j].normal), j))
                .collect();
            near.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            near.truncate(NEAR_NEIGHBORS);
            for a in 0..near.len() {
                for b in (a + 1)..near.len() {
                    let (j, k) = (near[a].1, near[b].1);
                    if j > i && k > i {
                        try_triple(i, j.min(k), j.max(k), &mut vertices);
                    }
                }
            }
        }
    }
    vertices
}

fn facets_2d(hs: &[HalfSpace], vertices: &[Vec3]) -> Vec<Facet> {
    let mut facets = Vec::new();
    for h in hs {
        let incident: Vec<usize> = (0..vertices.len())
            .filter(|&v| (dot(&h.normal, &vertices[v]) - h.offset).abs() < INCIDENCE_TOL)
            .collect();
        if incident.len() < 2 {
            continue;
        }
        let tangent = [-h.normal[1], h.normal[0], 0.0];
        let (mut lo, mut hi) = (incident[0], incident[0]);
        for &v in &incident {
            if dot(&tangent, &vertices[v]) < dot(&tangent, &vertices[lo]) {
                lo = v;
            }
            if dot(&tangent, &vertices[v]) > dot(&tangent, &vertices[hi]) {
                hi = v;
            }
        }
        let length = norm(&sub(&vertices[hi], &vertices[lo]));
        if length < 1e-12 {
            continue;
        }
        facets.push(Facet {
            normal: h.normal,
            offset: h.offset,
            vertices: vec![lo, hi],
            area: length,
        });
    }
    facets
}

fn facets_3d(hs: &[HalfSpace], vertices: &[Vec3]) -> Vec<Facet> {
    let mut facets = Vec::new();
    for h in hs {
        let incident: Vec<usize> = (0..vertices.len())
            .filter(|&v| (dot(&h.normal, &vertices[v]) - h.offset).abs() < INCIDENCE_TOL)
            .collect();
        if incident.len() < 3 {
            continue;
        }
        // In-plane frame (u, v) with u × v = normal.
        let seed = if h.normal[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let u0 = cross(&h.normal, &seed);
        let u = scale(&u0, 1.0 / norm(&u0));
        let v = cross(&h.normal, &u);
        let mut centroid = [0.0; 3];
        for &i in &incident {
            centroid = addv(&centroid, &vertices[i]);
        }
        centroid = scale(&centroid, 1.0 / incident.len() as f64);
        let mut ordered: Vec<(f64, usize)> = incident
            .iter()
            .map(|&i| {
                let rel = sub(&vertices[i], &centroid);
                (dot(&rel, &v).atan2(dot(&rel, &u)), i)
            })
            .collect();
        ordered.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let cycle: Vec<usize> = ordered.into_iter().map(|(_, i)| i).collect();
        // Shoelace in the facet plane; ordering around +normal gives a
        // positive (outward-oriented) area.
        let mut area2 = 0.0;
        for i in 0..cycle.len() {
            let a = sub(&vertices[cycle[i]], &centroid);
            let b = sub(&vertices[cycle[(i + 1) % cycle.len()]], &centroid);
            area2 += dot(&cross(&a, &b), &h.normal);
        }
        let area = area2 / 2.0;
        if area < 1e-12 {
            continue;
        }
        facets.push(Facet {
            normal: h.normal,
            offset: h.offset,
            vertices: cycle,
            area,
        });
    }
    facets
}

fn polygon_area(vertices: &[Vec3]) -> f64 {
    // Order by angle about the centroid (the vertex set is convex).
    let mut centroid = [0.0; 3];
    for v in vertices {
        centroid = addv(&centroid, v);
    }
    centroid = scale(&centroid, 1.0 / vertices.len() as f64);
    let mut ordered: Vec<&Vec3> = vertices.iter().collect();
    ordered.sort_by(|a, b| {
        let ta = (a[1] - centroid[1]).atan2(a[0] - centroid[0]);
        let tb = (b[1] - centroid[1]).atan2(b[0] - centroid[0]);
        ta.partial_cmp(&tb).unwrap()
    });
    let mut area2 = 0.0;
    for i in 0..ordered.len() {
        let a = ordered[i];
        let b = ordered[(i + 1) % ordered.len()];
        area2 += (a[0] - centroid[0]) * (b[1] - centroid[1])
            - (b[0] - centroid[0]) * (a[1] - centroid[1]);
    }
    area2.abs() / 2.0
}

fn volume_3d(vertices: &[Vec3], facets: &[Facet]) -> f64 {
    // Signed divergence over outward-oriented facet fans.
    let mut vol6 = 0.0;
    for f in facets {
        let v0 = &vertices[f.vertices[0]];
        for i in 1..f.vertices.len() - 1 {
            let a = &vertices[f.vertices[i]];
            let b = &vertices[f.vertices[i + 1]];
            vol6 += dot(v0, &cross(a, b));
        }
    }
    vol6 / 6.0
}
