//! Phase-field dynamics of grain boundaries with a sphere-valued orientation
//! field.
//!
//! The crate couples a scalar order field `eta` with an orientation field `u`
//! taking values in the unit sphere of `R^M` (unit quaternions for `M = 4`).
//! The free energy combines a Dirichlet term for `eta`, a double-well style
//! potential, a weighted total-variation term `alpha(eta) f_eps(grad u)`, a
//! quadratic exchange term, an optional high-order regularization and a
//! Ginzburg-Landau penalty that relaxes the unit-norm constraint. Time
//! integrators realize the L2 gradient descent of that energy, and the
//! diagnostics module checks the structural properties the flow must keep:
//! energy dissipation, `|u| <= 1`, the O(sqrt(delta)) constraint residual and
//! the spherical-cap invariance of the orientation field.

pub mod diagnostics;
pub mod energy;
pub mod exterior;
pub mod flow;
pub mod grid;
pub mod model;
pub mod rotation;
pub mod suites;

pub use energy::{energy_convex_part, energy_total, flow_rhs, grad_check, EnergyBreakdown, FlowMode, FlowRhs};
pub use exterior::{KIndex, MultiVector};
pub use flow::{evolve, StepperConfig, Scheme, Trajectory};
pub use grid::{FieldPair, Grid, MatrixField, ScalarField, VectorField};
pub use model::{ModelFunctions, ModelParams, ModelVariant};
pub use rotation::{AxisAngle, RotationMatrix, SpherePoint, UnitQuaternion};
