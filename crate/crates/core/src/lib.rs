//! Numerical laboratory for the two-photon Kapitza-Dirac effect.
//!
//! An electron with initial momentum `(-ħk_L, 0, p₃)` scatters off a standing
//! light wave and picks up two photon momenta. The crate computes that
//! diffraction process four ways and lets them be compared against each
//! other:
//!
//! * [`dirac`]: direct integration of the Dirac equation in a plane-wave
//!   momentum basis, with switchable coupling blocks between the positive
//!   and negative energy sectors;
//! * [`perturbation`]: second-order perturbative amplitudes for the Dirac
//!   equation (split by intermediate energy sign) and the Schrödinger
//!   counterparts;
//! * [`classical`]: the point-electron picture, both the analytic
//!   ponderomotive force and a relativistic trajectory integrator;
//! * [`experiments`]: scenario runner producing CSV and JSON outputs.
//!
//! All internal quantities use natural units `ħ = m = c = 1`; see [`units`].

pub mod classical;
pub mod dirac;
pub mod error;
pub mod experiments;
pub mod field;
pub mod fit;
pub mod kinematics;
pub mod ode;
pub mod perturbation;
pub mod spinor;
pub mod units;

pub use error::{KdError, Result};
pub use field::LaserConfig;
pub use kinematics::{EnergySign, ModeGrid, Momentum, QuantumLabel, Spin};
pub use spinor::Bispinor;
