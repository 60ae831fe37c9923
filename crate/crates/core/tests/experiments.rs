use std::path::Path;

use kdlab::dirac::ChannelMask;
use kdlab::experiments::*;
use kdlab::LaserConfig;

/// Reference laser with a short pulse and a small window.
fn small(scenario: Scenario, cycles: f64, p3: P3Section) -> ExperimentConfig {
    let mut c = preset(scenario.default_preset()).unwrap();
    c.laser.total_cycles = cycles;
    c.grid = GridSection { n_min: -2, n_max: 4 };
    c.p3 = p3;
    c
}

fn csv_text(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn serial_and_parallel_scans_write_identical_files() {
    let cfg = small(Scenario::ScanP3, 20.0, P3Section::list(&[1.0, 0.0, 0.5]));
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    run(&cfg, a.path(), 1).unwrap();
    run(&cfg, b.path(), 3).unwrap();
    assert_eq!(csv_text(a.path(), "scan_p3.csv"), csv_text(b.path(), "scan_p3.csv"));
    let (header, rows) = read_csv(&a.path().join("scan_p3.csv")).unwrap();
    assert_eq!(header, SCAN_HEADER);
    let p3: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(p3, vec![0.0, 0.5, 1.0]);
}

#[test]
fn repeated_runs_are_bitwise_identical() {
    let cfg = small(Scenario::Rabi, 10.0, P3Section::list(&[0.3]));
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    run(&cfg, a.path(), 1).unwrap();
    run(&cfg, b.path(), 1).unwrap();
    assert_eq!(csv_text(a.path(), "rabi.csv"), csv_text(b.path(), "rabi.csv"));
}

#[test]
fn summary_round_trips() {
    let cfg = small(Scenario::Channels, 150.0, P3Section::range(0.0, 1.0, 0.25));
    let dir = tempfile::tempdir().unwrap();
    let s = run(&cfg, dir.path(), 1).unwrap();
    let back: RunSummary = read_summary(&dir.path().join("summary.json")).unwrap();
    assert_eq!(back, s);
    assert!(s.all_checks_passed(), "{:?}", s.checks);
    assert_eq!(s.outputs, vec!["channels.csv".to_string(), "summary.json".to_string()]);
}

#[test]
fn frozen_state_with_every_block_off() {
    let mut cfg = small(Scenario::Rabi, 10.0, P3Section::list(&[0.0]));
    cfg.mask = ChannelMask::NONE;
    let trace = dirac_trace(&cfg, 0.0, cfg.mask).unwrap();
    assert!(trace.iter().all(|o| o.p0_up == 1.0 && o.diffraction() == 0.0));
}

#[test]
fn short_run_is_flagged_unbracketed() {
    let cfg = small(Scenario::Rabi, 50.0, P3Section::list(&[0.0]));
    let dir = tempfile::tempdir().unwrap();
    let s = run(&cfg, dir.path(), 1).unwrap();
    assert!(s.flags.iter().any(|f| f == "period not bracketed"), "{:?}", s.flags);
    assert!(!s.derived.contains_key("fitted_period_cycles"));
}

#[test]
fn doubling_amplitude_quarters_period() {
    // eA₀ = 0.02 gives T_R = 400 cycles, eA₀ = 0.04 gives 100
    let fit = |amp: f64, cycles: f64, ramp: f64| {
        let mut cfg = small(Scenario::Rabi, cycles, P3Section::list(&[0.0]));
        cfg.laser.amplitude = amp;
        cfg.laser.ramp_cycles = ramp;
        let laser: LaserConfig = cfg.laser.build().unwrap();
        let r = fit_rabi_period(&dirac_trace(&cfg, 0.0, cfg.mask).unwrap(), &laser);
        r.period_cycles.expect("bracketed")
    };
    let slow = fit(0.02, 260.0, 5.0);
    let fast = fit(0.04, 80.0, 2.0);
    assert!((slow / fast - 4.0).abs() / 4.0 < 0.01, "{slow} vs {fast}");
    assert!((slow - 400.0).abs() / 400.0 < 0.02, "{slow}");
}

#[test]
fn ablation_outputs_and_checks() {
    let cfg = small(Scenario::Ablation, 40.0, P3Section::list(&[0.0]));
    let dir = tempfile::tempdir().unwrap();
    let s = run(&cfg, dir.path(), 1).unwrap();
    assert!(dir.path().join("ablation_cross_sign.csv").exists());
    assert!(dir.path().join("ablation_same_sign.csv").exists());
    assert!(s.all_checks_passed(), "{:?}", s.checks);
    assert!(s.derived["ratio_same_over_full"] < 1e-4);
}

#[test]
fn classical_scan_recovers_relativistic_coefficient() {
    let cfg = preset("classical").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let s = run(&cfg, dir.path(), 1).unwrap();
    let c = s.derived["quadratic_coefficient"];
    assert!((c + 2.5).abs() <= 0.2, "{c}");
    let ratios = &s.series["drift_over_analytic_force"];
    assert!(ratios.iter().all(|r| (r.unwrap() - 1.0).abs() < 0.03), "{ratios:?}");
    let (_, traj) = read_csv(&dir.path().join("classical_trajectory.csv")).unwrap();
    // initial state plus one sample per cycle, the last one at T
    assert_eq!(traj.len(), 151);
}

#[test]
fn nonrelativistic_drift_follows_schrodinger_shape() {
    // with γ pinned to 1 only the magnetic p₃ term survives: p₁ ∝ 1 − p₃²
    let mut cfg = preset("classical").unwrap();
    cfg.classical.relativistic = false;
    let p0 = classical_drift(&cfg, 0.0).unwrap().p[0];
    for p3 in [0.1, 0.2, 0.3] {
        let ratio = classical_drift(&cfg, p3).unwrap().p[0] / p0;
        assert!((ratio - (1.0 - p3 * p3)).abs() < 2e-3, "p3 = {p3}: {ratio}");
    }
}

#[test]
fn worker_count_from_environment() {
    // only this test touches the variable
    unsafe { std::env::set_var(WORKERS_ENV, "3") };
    assert_eq!(workers_from_env().unwrap(), 3);
    unsafe { std::env::set_var(WORKERS_ENV, "zero") };
    assert!(workers_from_env().is_err());
    unsafe { std::env::remove_var(WORKERS_ENV) };
    assert_eq!(workers_from_env().unwrap(), 1);
}

#[test]
fn out_of_range_window_is_rejected() {
    let mut cfg = small(Scenario::ScanP3, 10.0, P3Section::list(&[0.0]));
    cfg.grid = GridSection { n_min: 1, n_max: 4 };
    assert!(cfg.validate().is_err());
}

#[test]
fn readme_config_example_is_valid() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let start = readme.find("```toml\n").unwrap() + "```toml\n".len();
    let len = readme[start..].find("```").unwrap();
    let cfg = ExperimentConfig::from_toml(&readme[start..start + len]).unwrap();
    cfg.validate().unwrap();
    assert_eq!(cfg.scenario, Scenario::ScanP3);
    assert_eq!(cfg.integrator, kdlab::dirac::IntegratorConfig::default());
    assert_eq!(cfg.classical, ClassicalSection::default());
}
