use rayon::prelude::*;

use super::config::{CycleKind, SweepConfig};
use crate::error::{Error, Result};
use crate::isoenergetic::{efficiency_isoenergetic, IsoenergeticCycleSpec};
use crate::isomagnetic::{efficiency_isomagnetic, IsomagneticCycleSpec};
use crate::nc::{EffectiveField, NcParams, Orientation, SystemConfig};

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub cycle: CycleKind,
    pub orientation: Orientation,
    pub n_phi0: f64,
    pub theta_eta: f64,
    pub gamma: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    pub hbar: f64,
    pub omega: f64,
    pub mass: f64,
}

impl Default for Units {
    fn default() -> Self {
        Units {
            hbar: 1.0,
            omega: 1.0,
            mass: 1.0,
        }
    }
}

/// `status` is `ok` when `efficiency` is present and the error code otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub point: SweepPoint,
    pub efficiency: Option<f64>,
    pub status: &'static str,
}

impl SweepRow {
    fn from_result(point: SweepPoint, result: Result<f64>) -> Self {
        match result {
            Ok(e) => SweepRow {
                point,
                efficiency: Some(e),
                status: "ok",
            },
            Err(err) => SweepRow {
                point,
                efficiency: None,
                status: err.code(),
            },
        }
    }

    pub fn is_ok(&self) -> bool {
        self.efficiency.is_some()
    }
}

/// Efficiency of a single cycle. `θη` is split evenly between θ and η.
pub fn evaluate_point(point: &SweepPoint, units: &Units) -> Result<f64> {
    let nc = NcParams::from_product(point.theta_eta, units.hbar)?;
    let sigma = nc.sigma()?;
    let system = SystemConfig::new(units.mass, units.omega, 1.0)?;
    match point.cycle {
        CycleKind::Isomagnetic => {
            let hot = EffectiveField::from_flux_quanta(point.n_phi0, point.orientation, point.gamma, units.omega, sigma)?;
            let spec = IsomagneticCycleSpec::new(hot, point.alpha, units.hbar)?;
            Ok(efficiency_isomagnetic(&spec).efficiency)
        }
        CycleKind::Isoenergetic => {
            let spec = IsoenergeticCycleSpec::with_units(
                point.n_phi0,
                sigma,
                point.gamma,
                point.alpha,
                point.orientation,
                units.hbar,
                system,
            )?;
            Ok(efficiency_isoenergetic(&spec)?.efficiency)
        }
    }
}

/// Grid points in row order: lexicographic in `(n_phi0, theta_eta, gamma, alpha)`.
pub fn sweep_points(config: &SweepConfig) -> Vec<SweepPoint> {
    let sorted = |v: &[f64]| {
        let mut v = v.to_vec();
        v.sort_by(f64::total_cmp);
        v
    };
    let (ns, tes, gs, alphas) = (
        sorted(&config.n_phi0),
        sorted(&config.theta_eta),
        sorted(&config.gamma),
        config.alpha.values(),
    );
    let mut points = Vec::with_capacity(config.point_count());
    for &n_phi0 in &ns {
        for &theta_eta in &tes {
            for &gamma in &gs {
                for &alpha in &alphas {
                    points.push(SweepPoint {
                        cycle: config.cycle,
                        orientation: config.orientation,
                        n_phi0,
                        theta_eta,
                        gamma,
                        alpha,
                    });
                }
            }
        }
    }
    points
}

/// Evaluates every grid point, on `jobs` worker threads when given.
/// Per-point failures become error rows; the row order never depends on
/// the worker count.
pub fn run_sweep(config: &SweepConfig, jobs: Option<usize>) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let units = Units {
        hbar: config.hbar,
        omega: config.omega,
        mass: config.mass,
    };
    let points = sweep_points(config);
    let evaluate = || -> Vec<SweepRow> {
        points
            .par_iter()
            .map(|p| SweepRow::from_result(*p, evaluate_point(p, &units)))
            .collect()
    };
    match jobs {
        None => Ok(evaluate()),
        Some(0) => Err(Error::Validation("--jobs must be at least 1".to_string())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Validation(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(evaluate))
        }
    }
}
