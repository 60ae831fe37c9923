use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classical::TrajectoryConfig;
use crate::dirac::{ChannelMask, IntegratorConfig};
use crate::error::{KdError, Result};
use crate::field::LaserConfig;
use crate::kinematics::ModeGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Rabi,
    Ablation,
    ScanP3,
    Channels,
    ClassicalScan,
    Convergence,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Scenario::Rabi,
        Scenario::Ablation,
        Scenario::ScanP3,
        Scenario::Channels,
        Scenario::ClassicalScan,
        Scenario::Convergence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Rabi => "rabi",
            Scenario::Ablation => "ablation",
            Scenario::ScanP3 => "scan-p3",
            Scenario::Channels => "channels",
            Scenario::ClassicalScan => "classical-scan",
            Scenario::Convergence => "convergence",
        }
    }

    /// Preset used when a scenario is run without a config file.
    pub fn default_preset(self) -> &'static str {
        match self {
            Scenario::Rabi => "fig1a",
            Scenario::Ablation => "fig1bc",
            Scenario::ScanP3 => "fig2",
            Scenario::Channels => "fig3",
            Scenario::ClassicalScan => "classical",
            Scenario::Convergence => "convergence",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = KdError;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| KdError::config("scenario", format!("unknown scenario `{s}`")))
    }
}

/// Laser parameters with times given in laser cycles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaserSection {
    pub amplitude: f64,
    pub wave_number: f64,
    pub ramp_cycles: f64,
    pub total_cycles: f64,
}

impl LaserSection {
    pub fn build(&self) -> Result<LaserConfig> {
        LaserConfig::from_cycles(self.amplitude, self.wave_number, self.ramp_cycles, self.total_cycles)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridSection {
    pub n_min: i32,
    pub n_max: i32,
}

impl Default for GridSection {
    fn default() -> Self {
        Self { n_min: -4, n_max: 6 }
    }
}

/// Transverse momenta to visit: an explicit list, a uniform range, or both.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct P3Section {
    pub values: Vec<f64>,
    pub start: Option<f64>,
    pub stop: Option<f64>,
    pub step: Option<f64>,
}

impl P3Section {
    pub fn list(values: &[f64]) -> Self {
        Self { values: values.to_vec(), ..Default::default() }
    }

    pub fn range(start: f64, stop: f64, step: f64) -> Self {
        Self { start: Some(start), stop: Some(stop), step: Some(step), ..Default::default() }
    }

    /// Sorted, de-duplicated momenta.
    pub fn resolve(&self) -> Result<Vec<f64>> {
        let mut out = self.values.clone();
        match (self.start, self.stop, self.step) {
            (None, None, None) => {}
            (Some(a), Some(b), Some(h)) => {
                if h.is_nan() || h <= 0.0 || b < a {
                    return Err(KdError::config(
                        "p3.step",
                        format!("need step > 0 and stop ≥ start, got {a}..{b} by {h}"),
                    ));
                }
                let n = ((b - a) / h + 1e-9).floor() as usize;
                // round to the step's decimal grid so 0.1·3 prints as 0.3
                out.extend((0..=n).map(|i| ((a + i as f64 * h) * 1e9).round() / 1e9));
            }
            _ => return Err(KdError::config("p3", "start, stop and step must be given together")),
        }
        if out.is_empty() {
            return Err(KdError::config("p3", "no transverse momenta given"));
        }
        if let Some(bad) = out.iter().find(|v| !v.is_finite()) {
            return Err(KdError::config("p3.values", format!("non-finite value {bad}")));
        }
        out.sort_by(f64::total_cmp);
        out.dedup();
        Ok(out)
    }
}

/// Point-particle run parameters, kept apart from the quantum laser because
/// the classical comparison uses a weaker field and longer ramps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ClassicalSection {
    pub amplitude: f64,
    pub ramp_cycles: f64,
    pub total_cycles: f64,
    /// Initial `x₁` in wavelengths.
    pub x0_wavelengths: f64,
    pub steps_per_cycle: u32,
    pub relativistic: bool,
}

impl Default for ClassicalSection {
    fn default() -> Self {
        Self {
            amplitude: 1e-3,
            ramp_cycles: 10.0,
            total_cycles: 150.0,
            x0_wavelengths: 0.125,
            steps_per_cycle: 256,
            relativistic: true,
        }
    }
}

impl ClassicalSection {
    pub fn laser(&self, wave_number: f64) -> Result<LaserConfig> {
        LaserConfig::from_cycles(self.amplitude, wave_number, self.ramp_cycles, self.total_cycles)
    }

    pub fn trajectory(&self) -> TrajectoryConfig {
        TrajectoryConfig { steps_per_cycle: self.steps_per_cycle, relativistic: self.relativistic }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SamplingSection {
    pub every_cycles: f64,
}

impl Default for SamplingSection {
    fn default() -> Self {
        Self { every_cycles: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub scenario: Scenario,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    pub laser: LaserSection,
    #[serde(default)]
    pub grid: GridSection,
    #[serde(default)]
    pub p3: P3Section,
    #[serde(default)]
    pub mask: ChannelMask,
    #[serde(default)]
    pub integrator: IntegratorConfig,
    #[serde(default)]
    pub classical: ClassicalSection,
    #[serde(default)]
    pub sampling: SamplingSection,
    /// Free-form notes echoed into the summary.
    #[serde(default)]
    pub notes: Vec<String>,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> std::result::Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    /// Check every section and the combinations the scenario relies on.
    pub fn validate(&self) -> Result<()> {
        self.laser.build()?;
        self.grid_for(0.0)?;
        self.p3.resolve()?;
        self.integrator.validate()?;
        self.classical.trajectory().validate()?;
        self.classical.laser(self.laser.wave_number)?;
        if self.sampling.every_cycles.is_nan() || self.sampling.every_cycles <= 0.0 {
            return Err(KdError::config("sampling.every_cycles", "must be positive"));
        }
        if matches!(self.scenario, Scenario::Rabi | Scenario::Convergence) && self.mask.is_empty() {
            log::warn!("all coupling blocks are disabled; the state stays frozen");
        }
        Ok(())
    }

    pub fn grid_for(&self, p3: f64) -> Result<ModeGrid> {
        ModeGrid::new(self.grid.n_min, self.grid.n_max, p3, self.laser.wave_number)
    }
}

/// Reads and validates a TOML experiment file; unknown keys are rejected.
pub fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| KdError::io(path, e))?;
    let cfg = ExperimentConfig::from_toml(&text)
        .map_err(|e| KdError::ConfigParse { path: path.to_path_buf(), message: e.message().to_string() })?;
    cfg.validate()?;
    Ok(cfg)
}

fn reference_laser(total_cycles: f64) -> LaserSection {
    LaserSection { amplitude: 0.01, wave_number: 0.02, ramp_cycles: 5.0, total_cycles }
}

/// Default transverse-momentum grid: 0 to 2.5 in steps of
/// 0.1 plus a dense band around the spin-preserving cancellation.
pub fn scan_p3_grid() -> P3Section {
    let mut values: Vec<f64> = (0..=25).map(|i| i as f64 / 10.0).collect();
    values.extend((90..=110).map(|i| i as f64 / 100.0));
    P3Section::list(&values)
}

pub const PRESETS: [&str; 6] = ["fig1a", "fig1bc", "fig2", "fig3", "classical", "convergence"];

/// Built-in parameter set for each scenario.
pub fn preset(name: &str) -> Result<ExperimentConfig> {
    let base = |scenario, laser, p3| ExperimentConfig {
        scenario,
        output_dir: None,
        laser,
        grid: GridSection::default(),
        p3,
        mask: ChannelMask::ALL,
        integrator: IntegratorConfig::default(),
        classical: ClassicalSection::default(),
        sampling: SamplingSection::default(),
        notes: Vec::new(),
    };
    let cfg = match name {
        "fig1a" => base(Scenario::Rabi, reference_laser(1000.0), P3Section::list(&[0.0])),
        "fig1bc" => base(Scenario::Ablation, reference_laser(150.0), P3Section::list(&[0.0])),
        "fig2" => {
            let mut c = base(Scenario::ScanP3, reference_laser(150.0), scan_p3_grid());
            c.notes.push("p3 sample points are a chosen grid".into());
            c
        }
        "fig3" => {
            let mut c = base(Scenario::Channels, reference_laser(150.0), scan_p3_grid());
            c.notes.push("p3 sample points are a chosen grid".into());
            c
        }
        "classical" => base(Scenario::ClassicalScan, reference_laser(150.0), P3Section::range(0.0, 0.3, 0.025)),
        "convergence" => base(Scenario::Convergence, reference_laser(150.0), P3Section::list(&[0.0])),
        other => {
            return Err(KdError::config("preset", format!("unknown preset `{other}`; known: {}", PRESETS.join(", "))))
        }
    };
    Ok(cfg)
}
