//! Desk-scale incompressible 3D Euler toolkit: a pseudo-spectral solver on the
//! torus and the free-slip channel, a discrete calculus of tangential and
//! conormal derivatives with boundary-distance weights, and a monitor that
//! tracks classical and conormal continuation criteria (Beale-Kato-Majda,
//! deformation-tensor, vorticity-direction, tangential, mixed, conormal)
//! along simulated trajectories together with Gronwall-type consistency
//! audits of the vorticity growth.
//!
//! Layout:
//! - [`domain`]: domain catalogue, boundary-distance weights, conormal frames,
//!   compatible triplets, ball charts and atlases.
//! - [`grid`] / [`field`] / [`transform`]: structured grids, sampled fields,
//!   spectral and finite-difference derivative engines.
//! - [`calculus`]: curl/div/grad, weighted Sobolev norms, identity and
//!   inequality suites, normal-derivative reconstruction on charts.
//! - [`solver`]: the pseudo-spectral Euler integrator.
//! - [`monitor`]: criterion integrands, running integrals, Gronwall audits,
//!   CSV/JSON/SVG reporting.
//! - [`snapshot`]: the EULB binary snapshot format.

pub mod calculus;
pub mod domain;
pub mod error;
pub mod field;
pub mod grid;
pub mod monitor;
pub mod snapshot;
pub mod solver;
pub mod transform;

pub use error::{Error, Result};
pub use field::{ScalarField, VectorField};
pub use grid::{Axis, AxisKind, Grid3, Parity, Point};
