//! Second-order perturbative amplitudes for the two-photon process `0 → 2`.
//!
//! All propagators here assume a flat-top field (`ξ = 1`), keep only the
//! co-rotating photon absorption/emission pairs and drop the lower limit of
//! the inner time integral, so they grow linearly with the interaction time.

mod channels;
mod fcoeff;
mod lowp3;
mod schrodinger;

pub use channels::{
    channel_amplitudes, channel_probability, dirac_propagator_20, spin_preserving_amplitude, spin_preserving_root,
    ChannelAmplitude, PerturbativeResult,
};
pub use fcoeff::{f_closed_form, f_coefficient, FCoefficients};
pub use lowp3::{dirac_lowp3, rabi_parameters, LowP3Result, RabiParameters};
pub use schrodinger::{nonrel_energy, nonrel_f_plus, schrodinger_propagator_20, SchrodingerPropagator};

/// Index of an intermediate energy sign in `[γ'][…]` tables.
pub(crate) fn sign_slot(sign: crate::EnergySign) -> usize {
    match sign {
        crate::EnergySign::Positive => 0,
        crate::EnergySign::Negative => 1,
    }
}
