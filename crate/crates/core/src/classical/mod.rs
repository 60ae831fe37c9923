//! Point-electron picture of the same scattering geometry.
//!
//! Positions are in `ħ/mc`, momenta in `mc`. Fields are returned already
//! multiplied by the electron charge, so the amplitude `eA₀` enters directly.

mod expansion;
mod fields;
mod ponderomotive;
mod trajectory;

pub use expansion::{expansion_terms, expansion_velocity, first_order_momentum, ExpansionPoint, ExpansionTerms};
pub use fields::{em_fields, vector_potential, EmFields};
pub use ponderomotive::{
    nonrel_ponderomotive, pond_matrix_element, pond_propagator, rel_ponderomotive_force, Ponderomotive,
    PonderomotiveModel,
};
pub use trajectory::{final_drift, integrate_trajectory, TrajectoryConfig, TrajectoryState};
