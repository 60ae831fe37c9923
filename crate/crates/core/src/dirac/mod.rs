//! Direct integration of the momentum-space Dirac equation.
//!
//! The state is expanded in plane waves `u^{γ,s}(p_n) e^{i p_n·x}` on a
//! [`ModeGrid`](crate::ModeGrid). Neighbouring modes are coupled through
//! `V_{n,n±1}(t) = −(eA₀ sin(ωt) ξ(t)/2) L_{n,n±1}`; the diagonal `±E_n`
//! phases are carried analytically (interaction picture), so the stepper only
//! resolves the coupling-induced phases.

mod convergence;
mod mask;
mod solver;
mod state;

pub use convergence::{convergence_check, ConvergenceReport};
pub use mask::ChannelMask;
pub use solver::{interaction_element, DiracRun, DiracSystem, IntegratorConfig};
pub use state::{diffraction_probability, AmplitudeState, Observables};
