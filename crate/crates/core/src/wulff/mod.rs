//! Equilibrium crystal-shape geometry: support functions, convex polytopes
//! from half-space intersections, Winterbottom truncation and scaling, the
//! surface-energy functional, polyhedral approximation, and competitor
//! sampling. Dimensions 2 and 3 are supported.

mod approx_shapes;
mod polytope;
mod sampling;
mod winterbottom;

pub use approx_shapes::{
    facet_covering, polyhedral_approx, ApproxOptions, CoverBox, FacetCovering, PolyhedralApprox,
};
pub use polytope::{ConvexPolytope, Facet, HalfSpace};
pub use sampling::{random_competitor, CompetitorOptions};
pub use winterbottom::{
    functional_energy, m_bar, scale_to_volume, surface_energy_free, v_of_m, volume_via_support,
    winterbottom_truncate, wulff_shape, Regime, WinterbottomShape,
};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Point/vector in up to three dimensions (unused trailing entries zero).
pub type Vec3 = [f64; 3];

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn scale(a: &Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub(crate) fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn addv(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// An evaluable anisotropic surface tension τ: S^{d−1} → R_+ with
/// τ(n) = τ(−n).
#[derive(Clone)]
pub enum SupportFunction {
    /// τ ≡ c (the Wulff body is the ball of radius c).
    Isotropic(f64),
    /// τ(n) = w·Σ|n_k|: the support function of the cube [−w, w]^d.
    Cube(f64),
    /// Values on a finite normal family only (measured tensions);
    /// evaluation off the family is an error.
    Table(Vec<(Vec3, f64)>),
    /// Arbitrary analytic form.
    Func(Arc<dyn Fn(&Vec3, usize) -> f64 + Send + Sync>),
}

impl fmt::Debug for SupportFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportFunction::Isotropic(c) => write!(f, "Isotropic({c})"),
            SupportFunction::Cube(w) => write!(f, "Cube({w})"),
            SupportFunction::Table(t) => write!(f, "Table({} normals)", t.len()),
            SupportFunction::Func(_) => write!(f, "Func(..)"),
        }
    }
}

impl SupportFunction {
    /// Build a table from (normal, value) pairs; normals are normalized and
    /// the table is symmetrized (τ(n) = τ(−n)). Conflicting duplicate
    /// entries or non-positive values are rejected.
    pub fn table(entries: &[(Vec3, f64)]) -> Result<Self> {
        let mut out: Vec<(Vec3, f64)> = Vec::new();
        for (n, v) in entries {
            if !(*v > 0.0) {
                return Err(Error::invalid(format!(
                    "support value must be positive, got {v}"
                )));
            }
            let len = norm(n);
            if len < 1e-12 {
                return Err(Error::invalid("zero normal in support table"));
            }
            let unit = scale(n, 1.0 / len);
            for cand in [unit, scale(&unit, -1.0)] {
                match out.iter().find(|(m, _)| dot(m, &cand) > 1.0 - 1e-10) {
                    Some((_, existing)) if (existing - v).abs() > 1e-9 => {
                        return Err(Error::invalid(
                            "conflicting support values for one normal (symmetry τ(n)=τ(−n))",
                        ));
                    }
                    Some(_) => {}
                    None => out.push((cand, *v)),
                }
            }
        }
        Ok(SupportFunction::Table(out))
    }

    pub fn from_fn(f: impl Fn(&Vec3, usize) -> f64 + Send + Sync + 'static) -> Self {
        SupportFunction::Func(Arc::new(f))
    }

    /// Evaluate at a unit direction.
    pub fn eval(&self, n: &Vec3, d: usize) -> Result<f64> {
        let value = match self {
            SupportFunction::Isotropic(c) => *c,
            SupportFunction::Cube(w) => {
                let mut s = 0.0;
                for nk in n.iter().take(d) {
                    s += nk.abs();
                }
                w * s
            }
            SupportFunction::Table(t) => t
                .iter()
                .find(|(m, _)| dot(m, n) > 1.0 - 1e-10)
                .map(|(_, v)| *v)
                .ok_or_else(|| {
                    Error::invalid(format!(
                        "support table has no value for direction {:?}",
                        &n[..d]
                    ))
                })?,
            SupportFunction::Func(f) => f(n, d),
        };
        if !(value > 0.0) {
            return Err(Error::invalid(format!(
                "support function must be positive, got {value} at {:?}",
                &n[..d]
            )));
        }
        Ok(value)
    }
}

/// The macroscopic vessel: the half-space box Λ_N rescaled by 1/(2N),
/// Q = [−1/2, 1/2]^{d−1} × [0, 1/2].
#[derive(Clone, Copy, Debug)]
pub struct BoxQ {
    pub d: usize,
}

impl BoxQ {
    pub fn new(d: usize) -> Result<Self> {
        if !(2..=3).contains(&d) {
            return Err(Error::invalid("macroscopic box supports d = 2, 3"));
        }
        Ok(BoxQ { d })
    }

    pub fn volume(&self) -> f64 {
        0.5
    }

    pub fn height(&self) -> f64 {
        0.5
    }

    pub fn lateral_half(&self) -> f64 {
        0.5
    }

    pub fn contains(&self, x: &Vec3, tol: f64) -> bool {
        for xk in x.iter().take(self.d - 1) {
            if xk.abs() > self.lateral_half() + tol {
                return false;
            }
        }
        x[self.d - 1] >= -tol && x[self.d - 1] <= self.height() + tol
    }

    /// H-representation of Q (lateral walls, floor, ceiling).
    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        let mut hs = Vec::new();
        for k in 0..self.d - 1 {
            let mut n = [0.0; 3];
            n[k] = 1.0;
            hs.push(HalfSpace {
                normal: n,
                offset: self.lateral_half(),
            });
            n[k] = -1.0;
            hs.push(HalfSpace {
                normal: n,
                offset: self.lateral_half(),
            });
        }
        let mut up = [0.0; 3];
        up[self.d - 1] = 1.0;
        hs.push(HalfSpace {
            normal: up,
            offset: self.height(),
        });
        let mut down = [0.0; 3];
        down[self.d - 1] = -1.0;
        hs.push(HalfSpace {
            normal: down,
            offset: 0.0,
        });
        hs
    }
}

/// Evenly covering unit-normal family (angles in d=2, Fibonacci sphere in
/// d=3) used for Wulff construction and refinement.
pub fn normal_family(d: usize, count: usize) -> Result<Vec<Vec3>> {
    if count < d + 1 {
        return Err(Error::invalid("normal family too small to bound a body"));
    }
    match d {
        2 => Ok((0..count)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
                [theta.cos(), theta.sin(), 0.0]
            })
            .collect()),
        3 => {
            let golden = (1.0 + 5f64.sqrt()) / 2.0;
            Ok((0..count)
                .map(|k| {
                    let z = 1.0 - (2.0 * k as f64 + 1.0) / count as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let phi = 2.0 * std::f64::consts::PI * (k as f64 / golden).fract();
                    [r * phi.cos(), r * phi.sin(), z]
                })
                .collect())
        }
        _ => Err(Error::invalid("normal families support d = 2, 3")),
    }
}

/// Axis-aligned unit normals ±e_1 … ±e_d.
pub fn axis_normals(d: usize) -> Vec<Vec3> {
    let mut out = Vec::with_capacity(2 * d);
    for k in 0..d {
        let mut n = [0.0; 3];
        n[k] = 1.0;
        out.push(n);
        n[k] = -1.0;
        out.push(n);
    }
    out
}
