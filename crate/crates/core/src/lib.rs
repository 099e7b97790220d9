//! Hydrogen radial wave functions in the momentum representation.
//!
//! The transform `ℋφ(p) = ∫ φ(r) e^{∓ipr/ħ} r dr` diagonalizes the radial
//! momentum operator `p̂_r = -iħ(∂_r + 1/r)`. This crate evaluates it for
//! hydrogenic states along several closed-form routes and by quadrature,
//! and checks the routes against each other.

pub mod error;
pub mod grid;
pub mod hydrogenic;
pub mod momentum;
pub mod quadrature;
pub mod specfun;
pub mod transform;
pub mod verification;

pub use error::{Error, Result};
pub use grid::{EvaluationGrid, GridKind};
pub use hydrogenic::{
    normalization_constant, radial_wavefunction, slater_expansion, PhysicalScale, QuantumState, SlaterExpansion,
    SlaterSeries, SlaterTerm,
};
pub use momentum::{
    angle_variables, distribution_max_l, evaluate, AngleVariables, DistributionFamily, MomentumAmplitude,
    MomentumForm,
};
pub use num_complex::Complex64;
pub use transform::{KernelSign, PhasePrefactor, QuadratureSpec, RadialTransform, TransformConvention};
pub use verification::{run_all, CheckResult, Suite, VerificationConfig, VerificationReport};
