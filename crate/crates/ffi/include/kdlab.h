#ifndef KDLAB_H
#define KDLAB_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KdStatus {
  KD_STATUS_OK = 0,
  KD_STATUS_NULL_POINTER = 1,
  KD_STATUS_INVALID_ARGUMENT = 2,
  KD_STATUS_OUT_OF_WINDOW = 3,
  KD_STATUS_RESONANCE = 4,
  KD_STATUS_NORM_DRIFT = 5,
  KD_STATUS_NON_FINITE = 6,
  KD_STATUS_IO = 7,
  KD_STATUS_PARSE = 8,
  KD_STATUS_INDEX_OUT_OF_RANGE = 9,
  KD_STATUS_PANIC = 10,
} KdStatus;

// A Dirac system together with its current state.
typedef struct KdSimulation KdSimulation;

// Observables sampled by [`kd_simulation_run_trace`].
typedef struct KdTrace KdTrace;

// Laser parameters; times in laser cycles.
typedef struct KdLaserParams {
  double amplitude;
  double wave_number;
  double ramp_cycles;
  double total_cycles;
} KdLaserParams;

typedef struct KdObservables {
  double t;
  double p0_up;
  double p0_down;
  double p2_up;
  double p2_down;
  double negative;
  double norm;
} KdObservables;

typedef struct KdPerturbative {
  double probability;
  // `U^{+,↑;+,↑}` real and imaginary parts.
  double up_re;
  double up_im;
  // `U^{+,↓;+,↑}` real and imaginary parts.
  double down_re;
  double down_im;
  // Per-channel probabilities `[+↑, +↓, −↑, −↓]` (intermediate sign, final spin).
  double channels[4];
  // 1 when the probability exceeds 0.5.
  int32_t outside_domain;
} KdPerturbative;

typedef struct KdRabi {
  double frequency;
  double period;
  double period_cycles;
} KdRabi;

typedef struct KdTrajectoryPoint {
  double t;
  double x[3];
  double p[3];
  double gamma;
} KdTrajectoryPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. The pointer stays
// valid until the next failing call on the same thread.
const char *kd_last_error(void);

// Library version as a static NUL-terminated string.
const char *kd_version(void);

// Creates a simulation over modes `n_min..=n_max` starting in `c₀^{+,↑} = 1`.
//
// `mask_bits`: bit 0 `++`, bit 1 `−−`, bit 2 `+−`, bit 3 `−+`.
// `steps_per_fast_period = 0` selects the default.
//
// # Safety
// `laser` must point to a valid `KdLaserParams`; `out` must be writable.
enum KdStatus kd_simulation_new(const struct KdLaserParams *laser,
                                int32_t n_min,
                                int32_t n_max,
                                double p3,
                                uint32_t mask_bits,
                                uint32_t steps_per_fast_period,
                                struct KdSimulation **out);

// Releases a simulation. NULL is ignored.
//
// # Safety
// `sim` must come from [`kd_simulation_new`] and not be used afterwards.
void kd_simulation_free(struct KdSimulation *sim);

// Evolves the state up to time `t_end` (in `ħ/mc²`).
//
// # Safety
// `sim` must be a live handle.
enum KdStatus kd_simulation_advance(struct KdSimulation *sim, double t_end);

// Current populations.
//
// # Safety
// `sim` must be a live handle; `out` must be writable.
enum KdStatus kd_simulation_observables(const struct KdSimulation *sim, struct KdObservables *out);

// `|c_n^{γ,s}|²` with `sign` ±1 and `spin` 0 (up) or 1 (down).
//
// # Safety
// `sim` must be a live handle; `out` must be writable.
enum KdStatus kd_simulation_probability(const struct KdSimulation *sim,
                                        int32_t n,
                                        int32_t sign,
                                        int32_t spin,
                                        double *out);

// Evolves to the end of the pulse, sampling every `sample_every_cycles`
// laser cycles, and hands back the samples as a trace.
//
// # Safety
// `sim` must be a live handle; `out` must be writable.
enum KdStatus kd_simulation_run_trace(struct KdSimulation *sim,
                                      double sample_every_cycles,
                                      struct KdTrace **out);

// Number of samples in a trace; 0 for NULL.
//
// # Safety
// `trace` must be NULL or a live handle.
size_t kd_trace_len(const struct KdTrace *trace);

// # Safety
// `trace` must be a live handle; `out` must be writable.
enum KdStatus kd_trace_get(const struct KdTrace *trace, size_t index, struct KdObservables *out);

// Releases a trace. NULL is ignored.
//
// # Safety
// `trace` must come from [`kd_simulation_run_trace`] and not be used afterwards.
void kd_trace_free(struct KdTrace *trace);

// Second-order Dirac propagator `0 → 2` over a flat-top time `time`.
//
// # Safety
// `laser` must be valid; `out` must be writable.
enum KdStatus kd_dirac_perturbative(const struct KdLaserParams *laser,
                                    double p3,
                                    double time,
                                    struct KdPerturbative *out);

// Non-relativistic propagator total `U` as real and imaginary parts.
//
// # Safety
// `laser` must be valid; `re` and `im` must be writable.
enum KdStatus kd_schrodinger_propagator(const struct KdLaserParams *laser,
                                        double p3,
                                        double time,
                                        double *re,
                                        double *im);

// # Safety
// `laser` must be valid; `out` must be writable.
enum KdStatus kd_rabi_parameters(const struct KdLaserParams *laser, struct KdRabi *out);

// Transverse momentum at which the spin-preserving paths cancel, searched
// in `[0.5, 1.5]`.
//
// # Safety
// `out` must be writable.
enum KdStatus kd_spin_preserving_root(double wave_number, double *out);

// Point-electron state at the end of the pulse for a start at `x₁ = x0`
// with momentum `p₃ ê₃`. `relativistic = 0` pins `γ` to 1.
//
// # Safety
// `laser` must be valid; `out` must be writable.
enum KdStatus kd_classical_drift(const struct KdLaserParams *laser,
                                 double x0,
                                 double p3,
                                 uint32_t steps_per_cycle,
                                 int32_t relativistic,
                                 struct KdTrajectoryPoint *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KDLAB_H */
