//! Finite-range ferromagnetic Ising models in a lattice half-space with
//! layered boundary fields, their FK (random-cluster) representation, and the
//! equilibrium crystal-shape geometry that describes droplets on a substrate.
//!
//! The crate is organized around the objects it simulates and analyzes:
//!
//! * [`lattice`] — coupling sets, boxes (half-space, bulk, tilted slabs),
//!   and bond graphs including ghost edges for the boundary field.
//! * [`spin`] — spin configurations, Hamiltonians with boundary conditions,
//!   heat-bath and Kawasaki dynamics.
//! * [`fk`] — bond configurations, the Edwards–Sokal coupling, union-find
//!   cluster labeling, Swendsen–Wang sweeps, and exact FK weights.
//! * [`enumerate`] — exact partition functions, Gibbs vectors, FK sums and
//!   Edwards–Sokal marginals on systems small enough to enumerate.
//! * [`coarse`] — mesoscopic partitions, magnetization profiles, good-block
//!   tests, phase labels, and L1 distances to target shapes.
//! * [`wulff`] — support functions, convex polytopes from half-space
//!   intersections, Winterbottom truncation and scaling, surface energies.
//! * [`estim`] — estimators for the spontaneous magnetization, the wall free
//!   energy, the anisotropic surface tension, and the predicted droplet rate.
//! * [`io`] — snapshot, label-field, and coupling-table file formats.
//!
//! Data-parallel inner loops (enumeration ranges, independent Monte Carlo
//! chains, competitor sampling) run on rayon when the default `parallel`
//! feature is enabled; every such entry point has a sequential twin used by
//! the bench suite and by builds with `--no-default-features`.

pub mod coarse;
pub mod enumerate;
pub mod error;
pub mod estim;
pub mod exec;
pub mod fk;
pub mod io;
pub mod lattice;
pub mod spin;
pub mod wulff;

pub use error::{Error, Result};
