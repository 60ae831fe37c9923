//! C ABI for kdlab.
//!
//! Every function returns a [`KdStatus`]; on failure a message is stored per
//! thread and can be read with [`kd_last_error`]. Simulations and sampled
//! traces are opaque handles owned by the caller and released with their
//! `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kdlab::classical::{final_drift, TrajectoryConfig, TrajectoryState};
use kdlab::dirac::{AmplitudeState, ChannelMask, DiracSystem, IntegratorConfig, Observables};
use kdlab::perturbation::{dirac_propagator_20, rabi_parameters, schrodinger_propagator_20, spin_preserving_root};
use kdlab::{EnergySign, KdError, LaserConfig, ModeGrid, QuantumLabel, Spin};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfWindow = 3,
    Resonance = 4,
    NormDrift = 5,
    NonFinite = 6,
    Io = 7,
    Parse = 8,
    IndexOutOfRange = 9,
    Panic = 10,
}

/// Laser parameters; times in laser cycles.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct KdLaserParams {
    pub amplitude: f64,
    pub wave_number: f64,
    pub ramp_cycles: f64,
    pub total_cycles: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct KdObservables {
    pub t: f64,
    pub p0_up: f64,
    pub p0_down: f64,
    pub p2_up: f64,
    pub p2_down: f64,
    pub negative: f64,
    pub norm: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct KdPerturbative {
    pub probability: f64,
    /// `U^{+,↑;+,↑}` real and imaginary parts.
    pub up_re: f64,
    pub up_im: f64,
    /// `U^{+,↓;+,↑}` real and imaginary parts.
    pub down_re: f64,
    pub down_im: f64,
    /// Per-channel probabilities `[+↑, +↓, −↑, −↓]` (intermediate sign, final spin).
    pub channels: [f64; 4],
    /// 1 when the probability exceeds 0.5.
    pub outside_domain: i32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct KdRabi {
    pub frequency: f64,
    pub period: f64,
    pub period_cycles: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct KdTrajectoryPoint {
    pub t: f64,
    pub x: [f64; 3],
    pub p: [f64; 3],
    pub gamma: f64,
}

/// A Dirac system together with its current state.
pub struct KdSimulation {
    system: DiracSystem,
    state: AmplitudeState,
    integrator: IntegratorConfig,
}

/// Observables sampled by [`kd_simulation_run_trace`].
pub struct KdTrace {
    samples: Vec<KdObservables>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &KdError) -> KdStatus {
    match e {
        KdError::InvalidConfig { .. } => KdStatus::InvalidArgument,
        KdError::OutOfWindow { .. } => KdStatus::OutOfWindow,
        KdError::Resonance { .. } => KdStatus::Resonance,
        KdError::NormDrift { .. } => KdStatus::NormDrift,
        KdError::NonFinite { .. } => KdStatus::NonFinite,
        KdError::Io { .. } => KdStatus::Io,
        KdError::ConfigParse { .. } | KdError::Csv(_) | KdError::Json(_) => KdStatus::Parse,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), (KdStatus, String)>>(f: F) -> KdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KdStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside kdlab".into());
            KdStatus::Panic
        }
    }
}

fn lift<T>(r: kdlab::Result<T>) -> Result<T, (KdStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), (KdStatus, String)> {
    if p.is_null() {
        Err((KdStatus::NullPointer, format!("`{name}` is NULL")))
    } else {
        Ok(())
    }
}

unsafe fn laser_from(params: *const KdLaserParams) -> Result<LaserConfig, (KdStatus, String)> {
    non_null(params, "laser")?;
    let p = unsafe { *params };
    lift(LaserConfig::from_cycles(p.amplitude, p.wave_number, p.ramp_cycles, p.total_cycles))
}

fn sign_from(sign: i32) -> Result<EnergySign, (KdStatus, String)> {
    match sign {
        1 => Ok(EnergySign::Positive),
        -1 => Ok(EnergySign::Negative),
        other => Err((KdStatus::InvalidArgument, format!("energy sign must be +1 or -1, got {other}"))),
    }
}

fn spin_from(spin: i32) -> Result<Spin, (KdStatus, String)> {
    match spin {
        0 => Ok(Spin::Up),
        1 => Ok(Spin::Down),
        other => Err((KdStatus::InvalidArgument, format!("spin must be 0 (up) or 1 (down), got {other}"))),
    }
}

fn export(o: &Observables) -> KdObservables {
    KdObservables {
        t: o.t,
        p0_up: o.p0_up,
        p0_down: o.p0_down,
        p2_up: o.p2_up,
        p2_down: o.p2_down,
        negative: o.negative,
        norm: o.norm,
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn kd_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}

/// Creates a simulation over modes `n_min..=n_max` starting in `c₀^{+,↑} = 1`.
///
/// `mask_bits`: bit 0 `++`, bit 1 `−−`, bit 2 `+−`, bit 3 `−+`.
/// `steps_per_fast_period = 0` selects the default.
///
/// # Safety
/// `laser` must point to a valid `KdLaserParams`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_simulation_new(
    laser: *const KdLaserParams,
    n_min: i32,
    n_max: i32,
    p3: f64,
    mask_bits: u32,
    steps_per_fast_period: u32,
    out: *mut *mut KdSimulation,
) -> KdStatus {
    guard(|| {
        non_null(out, "out")?;
        let laser = unsafe { laser_from(laser)? };
        let grid = lift(ModeGrid::new(n_min, n_max, p3, laser.wave_number()))?;
        if mask_bits > 0xF {
            return Err((KdStatus::InvalidArgument, format!("mask bits {mask_bits:#x} outside 0x0..0xF")));
        }
        let mut integrator = IntegratorConfig::default();
        if steps_per_fast_period != 0 {
            integrator.steps_per_fast_period = steps_per_fast_period;
        }
        lift(integrator.validate())?;
        let sim = KdSimulation {
            system: DiracSystem::new(laser, grid, ChannelMask::from_bits(mask_bits)),
            state: AmplitudeState::initial(&grid),
            integrator,
        };
        unsafe { *out = Box::into_raw(Box::new(sim)) };
        Ok(())
    })
}

/// Releases a simulation. NULL is ignored.
///
/// # Safety
/// `sim` must come from [`kd_simulation_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kd_simulation_free(sim: *mut KdSimulation) {
    if !sim.is_null() {
        drop(unsafe { Box::from_raw(sim) });
    }
}

/// Evolves the state up to time `t_end` (in `ħ/mc²`).
///
/// # Safety
/// `sim` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kd_simulation_advance(sim: *mut KdSimulation, t_end: f64) -> KdStatus {
    guard(|| {
        non_null(sim, "sim")?;
        let sim = unsafe { &mut *sim };
        if !(t_end.is_finite() && t_end >= sim.state.t) {
            return Err((KdStatus::InvalidArgument, format!("t_end {t_end} before current time {}", sim.state.t)));
        }
        let next = lift(sim.system.evolve_to(sim.state.clone(), t_end, &sim.integrator))?;
        sim.state = next;
        Ok(())
    })
}

/// Current populations.
///
/// # Safety
/// `sim` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_simulation_observables(sim: *const KdSimulation, out: *mut KdObservables) -> KdStatus {
    guard(|| {
        non_null(sim, "sim")?;
        non_null(out, "out")?;
        unsafe { *out = export(&(*sim).state.observables()) };
        Ok(())
    })
}

/// `|c_n^{γ,s}|²` with `sign` ±1 and `spin` 0 (up) or 1 (down).
///
/// # Safety
/// `sim` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_simulation_probability(
    sim: *const KdSimulation,
    n: i32,
    sign: i32,
    spin: i32,
    out: *mut f64,
) -> KdStatus {
    guard(|| {
        non_null(sim, "sim")?;
        non_null(out, "out")?;
        let label = QuantumLabel::new(sign_from(sign)?, spin_from(spin)?);
        let p = lift(unsafe { &*sim }.state.probability(n, label))?;
        unsafe { *out = p };
        Ok(())
    })
}

/// Evolves to the end of the pulse, sampling every `sample_every_cycles`
/// laser cycles, and hands back the samples as a trace.
///
/// # Safety
/// `sim` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_simulation_run_trace(
    sim: *mut KdSimulation,
    sample_every_cycles: f64,
    out: *mut *mut KdTrace,
) -> KdStatus {
    guard(|| {
        non_null(sim, "sim")?;
        non_null(out, "out")?;
        if sample_every_cycles.is_nan() || sample_every_cycles <= 0.0 {
            return Err((KdStatus::InvalidArgument, "sample_every_cycles must be positive".into()));
        }
        let sim = unsafe { &mut *sim };
        let every = sample_every_cycles * sim.system.laser().cycle_period();
        let mut samples = vec![export(&sim.state.observables())];
        let last = lift(
            sim.system
                .evolve_with(sim.state.clone(), &sim.integrator, every, |s| samples.push(export(&s.observables()))),
        )?;
        sim.state = last;
        unsafe { *out = Box::into_raw(Box::new(KdTrace { samples })) };
        Ok(())
    })
}

/// Number of samples in a trace; 0 for NULL.
///
/// # Safety
/// `trace` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kd_trace_len(trace: *const KdTrace) -> usize {
    if trace.is_null() {
        0
    } else {
        unsafe { &*trace }.samples.len()
    }
}

/// # Safety
/// `trace` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_trace_get(trace: *const KdTrace, index: usize, out: *mut KdObservables) -> KdStatus {
    guard(|| {
        non_null(trace, "trace")?;
        non_null(out, "out")?;
        let samples = &unsafe { &*trace }.samples;
        let s = samples
            .get(index)
            .ok_or_else(|| (KdStatus::IndexOutOfRange, format!("index {index} ≥ length {}", samples.len())))?;
        unsafe { *out = *s };
        Ok(())
    })
}

/// Releases a trace. NULL is ignored.
///
/// # Safety
/// `trace` must come from [`kd_simulation_run_trace`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kd_trace_free(trace: *mut KdTrace) {
    if !trace.is_null() {
        drop(unsafe { Box::from_raw(trace) });
    }
}

/// Second-order Dirac propagator `0 → 2` over a flat-top time `time`.
///
/// # Safety
/// `laser` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_dirac_perturbative(
    laser: *const KdLaserParams,
    p3: f64,
    time: f64,
    out: *mut KdPerturbative,
) -> KdStatus {
    guard(|| {
        non_null(out, "out")?;
        let laser = unsafe { laser_from(laser)? };
        let grid = lift(ModeGrid::minimal(p3, laser.wave_number()))?;
        let r = lift(dirac_propagator_20(&grid, &laser, time))?;
        let c = r.channel_probabilities;
        unsafe {
            *out = KdPerturbative {
                probability: r.probability,
                up_re: r.propagator[0].re,
                up_im: r.propagator[0].im,
                down_re: r.propagator[1].re,
                down_im: r.propagator[1].im,
                channels: [c[0][0], c[0][1], c[1][0], c[1][1]],
                outside_domain: r.outside_domain as i32,
            }
        };
        Ok(())
    })
}

/// Non-relativistic propagator total `U` as real and imaginary parts.
///
/// # Safety
/// `laser` must be valid; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_schrodinger_propagator(
    laser: *const KdLaserParams,
    p3: f64,
    time: f64,
    re: *mut f64,
    im: *mut f64,
) -> KdStatus {
    guard(|| {
        non_null(re, "re")?;
        non_null(im, "im")?;
        let laser = unsafe { laser_from(laser)? };
        let grid = lift(ModeGrid::minimal(p3, laser.wave_number()))?;
        let u = schrodinger_propagator_20(&grid, &laser, time).total;
        unsafe {
            *re = u.re;
            *im = u.im;
        }
        Ok(())
    })
}

/// # Safety
/// `laser` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_rabi_parameters(laser: *const KdLaserParams, out: *mut KdRabi) -> KdStatus {
    guard(|| {
        non_null(out, "out")?;
        let laser = unsafe { laser_from(laser)? };
        let r = rabi_parameters(&laser);
        unsafe { *out = KdRabi { frequency: r.frequency, period: r.period, period_cycles: r.period_cycles } };
        Ok(())
    })
}

/// Transverse momentum at which the spin-preserving paths cancel, searched
/// in `[0.5, 1.5]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_spin_preserving_root(wave_number: f64, out: *mut f64) -> KdStatus {
    guard(|| {
        non_null(out, "out")?;
        let r = lift(spin_preserving_root(wave_number, 0.5, 1.5, 1e-6))?;
        unsafe { *out = r };
        Ok(())
    })
}

/// Point-electron state at the end of the pulse for a start at `x₁ = x0`
/// with momentum `p₃ ê₃`. `relativistic = 0` pins `γ` to 1.
///
/// # Safety
/// `laser` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kd_classical_drift(
    laser: *const KdLaserParams,
    x0: f64,
    p3: f64,
    steps_per_cycle: u32,
    relativistic: i32,
    out: *mut KdTrajectoryPoint,
) -> KdStatus {
    guard(|| {
        non_null(out, "out")?;
        let laser = unsafe { laser_from(laser)? };
        let cfg = TrajectoryConfig { steps_per_cycle, relativistic: relativistic != 0 };
        let s = lift(final_drift(TrajectoryState::new([x0, 0.0, 0.0], [0.0, 0.0, p3]), &laser, &cfg))?;
        unsafe { *out = KdTrajectoryPoint { t: s.t, x: s.x, p: s.p, gamma: s.gamma() } };
        Ok(())
    })
}
