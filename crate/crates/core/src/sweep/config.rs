use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nc::Orientation;
use crate::oracle::SolverSettings;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Isomagnetic,
    Isoenergetic,
}

impl CycleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleKind::Isomagnetic => "isomagnetic",
            CycleKind::Isoenergetic => "isoenergetic",
        }
    }
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CycleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "isomagnetic" => Ok(CycleKind::Isomagnetic),
            "isoenergetic" => Ok(CycleKind::Isoenergetic),
            other => Err(format!("unknown cycle `{other}` (expected isomagnetic or isoenergetic)")),
        }
    }
}

/// `count` evenly spaced values from `min` to `max`, both included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRange {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl AlphaRange {
    pub fn values(&self) -> Vec<f64> {
        let last = self.count - 1;
        (0..self.count)
            .map(|k| {
                if k == last {
                    self.max
                } else {
                    self.min + (self.max - self.min) * k as f64 / last as f64
                }
            })
            .collect()
    }
}

impl Default for AlphaRange {
    fn default() -> Self {
        AlphaRange {
            min: 1.0,
            max: 3.0,
            count: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub cycle: CycleKind,
    pub orientation: Orientation,
    pub n_phi0: Vec<f64>,
    pub theta_eta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub alpha: AlphaRange,
    pub hbar: f64,
    pub omega: f64,
    pub mass: f64,
    pub output: Option<PathBuf>,
    pub settings: SolverSettings,
}

impl SweepConfig {
    /// Defaults for everything except the cycle and the field list.
    pub fn new(cycle: CycleKind, n_phi0: Vec<f64>) -> Self {
        SweepConfig {
            cycle,
            orientation: Orientation::Positive,
            n_phi0,
            theta_eta: vec![0.0],
            gamma: vec![0.0],
            alpha: AlphaRange::default(),
            hbar: 1.0,
            omega: 1.0,
            mass: 1.0,
            output: None,
            settings: SolverSettings::default(),
        }
    }

    /// One curve per `(n_phi0, theta_eta, gamma)`.
    pub fn curve_count(&self) -> usize {
        self.n_phi0.len() * self.theta_eta.len() * self.gamma.len()
    }

    pub fn point_count(&self) -> usize {
        self.curve_count() * self.alpha.count
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::Validation(msg));
        for (name, list) in [("n_phi0", &self.n_phi0), ("theta_eta", &self.theta_eta), ("gamma", &self.gamma)] {
            if list.is_empty() {
                return invalid(format!("`{name}` must list at least one value"));
            }
            if let Some(v) = list.iter().find(|v| !v.is_finite()) {
                return invalid(format!("`{name}` contains non-finite value {v}"));
            }
        }
        let a = self.alpha;
        if a.count < 2 {
            return invalid(format!("alpha count must be at least 2, got {}", a.count));
        }
        if !(a.min < a.max) || !a.min.is_finite() || !a.max.is_finite() {
            return invalid(format!("alpha range needs min < max, got {} .. {}", a.min, a.max));
        }
        for (name, v) in [("hbar", self.hbar), ("omega", self.omega), ("mass", self.mass)] {
            if !(v > 0.0) || !v.is_finite() {
                return invalid(format!("`{name}` must be positive, got {v}"));
            }
        }
        let s = &self.settings;
        if !(s.root_tol > 0.0) || !(s.quadrature_tol > 0.0) || s.max_iterations == 0 {
            return invalid("solver tolerances must be positive".to_string());
        }
        Ok(())
    }
}

fn parse_list(value: &str) -> std::result::Result<Vec<f64>, String> {
    value
        .split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<f64>().map_err(|_| format!("`{item}` is not a number"))
        })
        .collect()
}

fn parse_scalar<T: FromStr>(value: &str) -> std::result::Result<T, String> {
    value.trim().parse::<T>().map_err(|_| format!("`{}` is not a valid value", value.trim()))
}

fn parse_alpha(value: &str) -> std::result::Result<AlphaRange, String> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err("alpha expects `min, max, count`".to_string());
    }
    Ok(AlphaRange {
        min: parse_scalar(parts[0])?,
        max: parse_scalar(parts[1])?,
        count: parse_scalar(parts[2])?,
    })
}

/// Parses the `key = value` sweep format. Lists are comma separated and
/// `#` starts a comment. `cycle` and `n_phi0` are required.
pub fn parse_config(text: &str) -> Result<SweepConfig> {
    let mut cycle = None;
    let mut n_phi0 = None;
    let mut config = SweepConfig::new(CycleKind::Isomagnetic, Vec::new());

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| parse_err(format!("expected `key = value`, got `{line}`")))?;
        let key = key.trim();
        let value = value.trim();
        if value.is_empty() {
            return Err(parse_err(format!("missing value for `{key}`")));
        }
        let outcome: std::result::Result<(), String> = (|| {
            match key {
                "cycle" => cycle = Some(value.parse::<CycleKind>()?),
                "orientation" => config.orientation = value.parse::<Orientation>()?,
                "n_phi0" => n_phi0 = Some(parse_list(value)?),
                "theta_eta" => config.theta_eta = parse_list(value)?,
                "gamma" => config.gamma = parse_list(value)?,
                "alpha" => config.alpha = parse_alpha(value)?,
                "hbar" => config.hbar = parse_scalar(value)?,
                "omega" => config.omega = parse_scalar(value)?,
                "mass" => config.mass = parse_scalar(value)?,
                "output" => config.output = Some(PathBuf::from(value)),
                "root_tol" => config.settings.root_tol = parse_scalar(value)?,
                "quadrature_tol" => config.settings.quadrature_tol = parse_scalar(value)?,
                "max_iterations" => config.settings.max_iterations = parse_scalar(value)?,
                other => return Err(format!("unknown key `{other}`")),
            }
            Ok(())
        })();
        outcome.map_err(parse_err)?;
    }

    config.cycle = cycle.ok_or_else(|| Error::Validation("`cycle` is required".to_string()))?;
    config.n_phi0 = n_phi0.ok_or_else(|| Error::Validation("`n_phi0` is required".to_string()))?;
    config.validate()?;
    Ok(config)
}
