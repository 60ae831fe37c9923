//! Unit conventions.
//!
//! Everything inside the crate is expressed with `ħ = m = c = 1`: energies in
//! `mc²`, momenta and wave numbers in `mc` and `mc/ħ`, times in `ħ/mc²` and
//! lengths in `ħ/mc`. The coupling `eA₀` is carried as a single energy, so the
//! elementary charge never appears on its own.
//!
//! The only other unit used at the I/O boundary is the laser cycle `2π/ω`.

use std::f64::consts::TAU;

/// Angular laser frequency `ω = c k_L` for a wave number given in `mc/ħ`.
#[inline]
pub fn laser_frequency(wave_number: f64) -> f64 {
    wave_number
}

/// Length of one laser cycle `2π/ω` in `ħ/mc²`.
#[inline]
pub fn cycle_period(wave_number: f64) -> f64 {
    TAU / laser_frequency(wave_number)
}

#[inline]
pub fn cycles_to_time(cycles: f64, wave_number: f64) -> f64 {
    cycles * cycle_period(wave_number)
}

#[inline]
pub fn time_to_cycles(time: f64, wave_number: f64) -> f64 {
    time / cycle_period(wave_number)
}

/// Laser wavelength `λ = 2π/k_L` in `ħ/mc`.
#[inline]
pub fn wavelength(wave_number: f64) -> f64 {
    TAU / wave_number
}
