//! Wulff bodies, wall truncation, scaling to volume, and surface energies.

use crate::error::{Error, Result};

use super::{dot, norm, scale, BoxQ, ConvexPolytope, HalfSpace, SupportFunction, Vec3};

/// Wetting regime of a truncated Wulff body.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Δ = τ(e_d): the droplet detaches; the shape is the full Wulff body.
    CompleteDrying,
    /// |Δ| < τ(e_d): a proper cap is removed.
    Partial,
    /// Δ = −τ(e_d): the truncation has volume zero.
    CompleteWetting,
}

/// The Wulff body intersected with {x_d ≥ −Δ}, with its regime tag.
#[derive(Clone, Debug)]
pub struct WinterbottomShape {
    d: usize,
    /// None exactly in the complete-wetting regime.
    poly: Option<ConvexPolytope>,
    delta: f64,
    tau_ed: f64,
    regime: Regime,
}

impl WinterbottomShape {
    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn polytope(&self) -> Option<&ConvexPolytope> {
        self.poly.as_ref()
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn tau_ed(&self) -> f64 {
        self.tau_ed
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Volume λ of the unnormalized shape (0 at complete wetting).
    pub fn lambda(&self) -> f64 {
        self.poly.as_ref().map_or(0.0, |p| p.volume())
    }
}

/// The Wulff body ⋂_n {x : (x, n) ≤ τ(n)} over a finite normal family.
pub fn wulff_shape(
    tau: &SupportFunction,
    normals: &[Vec3],
    d: usize,
) -> Result<ConvexPolytope> {
    let mut hs = Vec::with_capacity(normals.len());
    for n in normals {
        let len = norm(n);
        if len < 1e-12 {
            return Err(Error::invalid("zero normal in Wulff family"));
        }
        let unit = scale(n, 1.0 / len);
        hs.push(HalfSpace {
            normal: unit,
            offset: tau.eval(&unit, d)?,
        });
    }
    ConvexPolytope::from_halfspaces(d, &hs)
}

/// Intersect a Wulff body with the half-space {x_d ≥ −Δ} and tag the
/// regime. Rejects |Δ| > τ(e_d).
pub fn winterbottom_truncate(
    body: &ConvexPolytope,
    delta: f64,
    tau_ed: f64,
) -> Result<WinterbottomShape> {
    let d = body.dimension();
    if !(tau_ed > 0.0) {
        return Err(Error::invalid("τ(e_d) must be positive"));
    }
    if delta.abs() > tau_ed + 1e-12 {
        return Err(Error::invalid(format!(
            "|Δ| = {} exceeds τ(e_d) = {tau_ed}",
            delta.abs()
        )));
    }
    let regime = if (tau_ed - delta).abs() <= 1e-12 {
        Regime::CompleteDrying
    } else if (tau_ed + delta).abs() <= 1e-12 {
        Regime::CompleteWetting
    } else {
        Regime::Partial
    };
    let poly = match regime {
        Regime::CompleteDrying => Some(body.clone()),
        Regime::CompleteWetting => None,
        Regime::Partial => {
            let mut hs = body.halfspaces().to_vec();
            let mut down = [0.0; 3];
            down[d - 1] = -1.0;
            hs.push(HalfSpace {
                normal: down,
                offset: delta,
            });
            Some(ConvexPolytope::from_halfspaces(d, &hs)?)
        }
    };
    Ok(WinterbottomShape {
        d,
        poly,
        delta,
        tau_ed,
        regime,
    })
}

/// The equilibrium shape at volume v: (v/λ)^{1/d} (Δ e_d + K), resting on
/// the wall {x_d = 0}. Rejects the complete-wetting regime (volume zero,
/// not rescalable) and v ≤ 0.
pub fn scale_to_volume(shape: &WinterbottomShape, v: f64) -> Result<ConvexPolytope> {
    if shape.regime == Regime::CompleteWetting {
        return Err(Error::invalid(
            "complete-wetting shape has volume zero and cannot be rescaled",
        ));
    }
    if !(v > 0.0) {
        return Err(Error::invalid("target volume must be positive"));
    }
    let poly = shape.poly.as_ref().expect("non-wetting shape has a body");
    let lambda = poly.volume();
    let s = (v / lambda).powf(1.0 / shape.d as f64);
    let mut shift = [0.0; 3];
    shift[shape.d - 1] = shape.delta;
    let out = poly.translate(&shift).dilate(s)?;
    debug_assert!((out.volume() - v).abs() <= 1e-9 * v.max(1.0));
    Ok(out)
}

fn is_wall_facet(p: &ConvexPolytope, facet: &super::Facet) -> bool {
    let d = p.dimension();
    facet
        .vertices
        .iter()
        .all(|&vi| p.vertices()[vi][d - 1].abs() <= 1e-9)
}

/// Total surface energy W(P) = Σ_{facets off the wall} τ(n)·area
/// + Δ·(area of the facet in {x_d = 0}).
pub fn functional_energy(
    p: &ConvexPolytope,
    tau: &SupportFunction,
    delta: f64,
) -> Result<f64> {
    let d = p.dimension();
    let (lo, _) = p.bbox();
    if lo[d - 1] < -1e-9 {
        return Err(Error::invalid(
            "polytope must lie in the upper half-space {x_d >= 0}",
        ));
    }
    let mut energy = 0.0;
    for f in p.facets() {
        if is_wall_facet(p, f) {
            energy += delta * f.area;
        } else {
            energy += tau.eval(&f.normal, d)? * f.area;
        }
    }
    Ok(energy)
}

/// Surface integral Σ τ(n)·area over all facets (free body, no wall term).
pub fn surface_energy_free(p: &ConvexPolytope, tau: &SupportFunction) -> Result<f64> {
    let d = p.dimension();
    let mut energy = 0.0;
    for f in p.facets() {
        energy += tau.eval(&f.normal, d)? * f.area;
    }
    Ok(energy)
}

/// vol(P) = (1/d) Σ_facets τ_P(n_i)·area_i with τ_P the polytope's own
/// support function; an independent route to the volume.
pub fn volume_via_support(p: &ConvexPolytope) -> f64 {
    let d = p.dimension() as f64;
    let mut sum = 0.0;
    for f in p.facets() {
        sum += p.support(&f.normal) * f.area;
    }
    sum / d
}

/// v(m) = (m* − m)/(2m*): the minus-phase volume fraction forced by the
/// canonical constraint.
pub fn v_of_m(m: f64, m_star: f64) -> Result<f64> {
    if !(m_star > 0.0) {
        return Err(Error::invalid("m* must be positive"));
    }
    if m < -m_star - 1e-12 || m > m_star + 1e-12 {
        return Err(Error::invalid(format!(
            "m = {m} outside [−m*, m*] = [{}, {}]",
            -m_star, m_star
        )));
    }
    Ok(((m_star - m) / (2.0 * m_star)).clamp(0.0, 1.0))
}

/// Does the equilibrium shape at magnetization m fit inside Q? The droplet
/// volume is v(m)·vol(Q).
pub fn shape_fits_in_q(
    shape: &WinterbottomShape,
    m: f64,
    m_star: f64,
    q: &BoxQ,
) -> Result<bool> {
    let v = v_of_m(m, m_star)? * q.volume();
    if v == 0.0 {
        return Ok(true);
    }
    let scaled = scale_to_volume(shape, v)?;
    Ok(scaled
        .vertices()
        .iter()
        .all(|x| q.contains(x, 1e-9)))
}

/// m̄ = min { m : K(v(m)) ⊆ Q }, by bisection on the fits-in-Q predicate.
/// Returns −m* when every magnetization fits; errors when none does.
pub fn m_bar(shape: &WinterbottomShape, m_star: f64, q: &BoxQ) -> Result<f64> {
    if shape.regime() == Regime::CompleteWetting {
        return Err(Error::invalid(
            "complete wetting admits no droplet to fit",
        ));
    }
    let mut lo = -m_star; // may not fit
    let mut hi = m_star; // v → 0: always fits
    if shape_fits_in_q(shape, lo, m_star, q)? {
        return Ok(-m_star);
    }
    // A tiny droplet always fits; make sure of it before bisecting.
    if !shape_fits_in_q(shape, hi - 1e-9 * m_star.max(1.0), m_star, q)? {
        return Err(Error::invalid(
            "shape does not fit in Q at any magnetization",
        ));
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if shape_fits_in_q(shape, mid, m_star, q)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
