//! Self-check: runs every oracle against the closed forms and tabulates
//! the outcome. The `ncq check` command is a thin wrapper around this.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::carnot::{carnot_efficiency, nc_invariance_scan, CarnotSpec, NcGrid};
use crate::error::Result;
use crate::isoenergetic::{
    alpha1_by_root, alpha3_by_root, alpha3_closed, efficiency_isoenergetic, ground_probability,
    heat_isoenergetic, IsoenergeticCycleSpec, IsoenergeticLeg,
};
use crate::isomagnetic::{efficiency_isomagnetic, IsomagneticCycleSpec};
use crate::nc::{
    effective_coefficients, sw_constants, EffectiveCoefficients, EffectiveField, NcParams, Orientation,
    SwConstants, SystemConfig,
};
use crate::oracle::{
    build_quadratic, heat_quadrature, symplectic_frequencies, verify_commutators, work_quadrature,
    SolverSettings, COMMUTATOR_TOLERANCE,
};
use crate::sweep::{figure_configs, run_sweep, FIGURE_N_PHI0, FIGURE_THETA_ETA};

pub const ROOT_AGREEMENT: f64 = 1e-9;
pub const LEVEL_FREQUENCY_AGREEMENT: f64 = 1e-12;
pub const SYMPLECTIC_AGREEMENT: f64 = 1e-9;
pub const HEAT_AGREEMENT: f64 = 1e-6;
pub const ASYMPTOTIC_AGREEMENT: f64 = 1e-3;
pub const SPOT_AGREEMENT: f64 = 1e-12;
pub const QUADRATURE_STEPS: usize = 2000;

/// γ values used by the oracle grids; 0 is added to the plotted values.
pub const CHECK_GAMMA: [f64; 3] = [0.0, 0.1, 0.5];
pub const CHECK_ALPHA: [f64; 5] = [1.1, 1.5, 2.0, 2.5, 3.0];

/// Replaceable pieces of the computation under test. Swapping one for a
/// perturbed version must make the check fail.
#[derive(Clone, Copy)]
pub struct CheckHooks {
    pub alpha1: fn(&IsoenergeticCycleSpec) -> Result<f64>,
}

impl Default for CheckHooks {
    fn default() -> Self {
        CheckHooks {
            alpha1: crate::isoenergetic::alpha1_closed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    /// Largest observed deviation, in the units of `tolerance`.
    pub worst: f64,
    pub tolerance: f64,
    pub elapsed: Duration,
    pub note: String,
}

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<28} {:>6} {:>7} {:>12} {:>10} {:>9}", "check", "result", "cases", "worst", "tolerance", "time");
        for o in &self.outcomes {
            let _ = write!(
                s,
                "{:<28} {:>6} {:>7} {:>12.3e} {:>10.1e} {:>7.0}ms",
                o.name,
                if o.passed { "PASS" } else { "FAIL" },
                o.cases,
                o.worst,
                o.tolerance,
                o.elapsed.as_secs_f64() * 1e3
            );
            if !o.note.is_empty() {
                let _ = write!(s, "  {}", o.note);
            }
            s.push('\n');
        }
        s
    }
}

/// Tracks the worst deviation and any hard failure of one check.
struct Tally {
    cases: usize,
    worst: f64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            worst: 0.0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, deviation: f64) {
        self.cases += 1;
        if deviation.is_nan() {
            self.worst = f64::NAN;
        } else if !self.worst.is_nan() {
            self.worst = self.worst.max(deviation);
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.failures.push(what);
    }

    fn finish(self, name: &'static str, tolerance: f64, started: Instant) -> CheckOutcome {
        let passed = self.failures.is_empty() && self.worst <= tolerance;
        let note = match self.failures.len() {
            0 => String::new(),
            1 => self.failures[0].clone(),
            n => format!("{} (and {} more)", self.failures[0], n - 1),
        };
        CheckOutcome {
            name,
            passed,
            cases: self.cases,
            worst: self.worst,
            tolerance,
            elapsed: started.elapsed(),
            note,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn orientations() -> [Orientation; 2] {
    [Orientation::Positive, Orientation::Reversed]
}

/// Isoenergetic specs over the oracle grid at a given α.
fn isoenergetic_grid(alpha: f64) -> Vec<IsoenergeticCycleSpec> {
    let mut out = Vec::new();
    for o in orientations() {
        for &n in &FIGURE_N_PHI0 {
            for &te in &FIGURE_THETA_ETA {
                for &g in &CHECK_GAMMA {
                    let sigma = (1.0 - te).sqrt();
                    out.push(IsoenergeticCycleSpec::new(n, sigma, g, alpha, o).expect("grid values are valid"));
                }
            }
        }
    }
    out
}

fn check_commutators() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for &hbar in &[1.0, 0.5, 2.0] {
        for &frac in &[0.0, 0.1, 0.5, 0.9, -0.3, -2.0] {
            let nc = NcParams::from_product(frac * hbar * hbar, hbar).expect("theta*eta < hbar^2");
            let sw = sw_constants(&nc).expect("invertible");
            t.record(verify_commutators(&sw, &nc).max_residual());
        }
    }
    // an unconstrained map must miss [q_i, p_i] by exactly θη/(4ħ)
    let nc = NcParams::new(0.5, 0.5, 1.0).expect("valid");
    let report = verify_commutators(&SwConstants { mu: 1.0, nu: 1.0 }, &nc);
    if report.passes() || (report.max_residual() - 0.0625).abs() > 1e-15 {
        t.fail(format!("unconstrained map residual {} (expected 0.0625)", report.max_residual()));
    }
    t.finish("commutators", COMMUTATOR_TOLERANCE, started)
}

/// `(ω_B, θη, coefficients)` over both orientations and a spread of fields.
fn coefficient_grid() -> Vec<(f64, NcParams, Result<EffectiveCoefficients>)> {
    let sys = SystemConfig::default();
    let mut out = Vec::new();
    for o in orientations() {
        for &n in &[0.0, 0.5, 4.0, 10.0, 100.0] {
            for &te in &FIGURE_THETA_ETA {
                let omega_b = o.sign() * 2.0 * n;
                let nc = NcParams::from_product(te, 1.0).expect("valid");
                let coeffs = sw_constants(&nc).and_then(|sw| effective_coefficients(&sw, &sys, omega_b, &nc));
                out.push((omega_b, nc, coeffs));
            }
        }
    }
    out
}

fn check_level_frequency() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for (omega_b, nc, coeffs) in coefficient_grid() {
        let outcome = coeffs.and_then(|c| {
            let field = EffectiveField::new(omega_b, c.gamma, 1.0, nc.sigma()?)?;
            Ok(rel(c.level_frequency(), field.level_spacing_frequency()))
        });
        match outcome {
            Ok(d) => t.record(d),
            Err(e) => t.fail(format!("omega_B = {omega_b}: {e}")),
        }
    }
    t.finish("level_frequency", LEVEL_FREQUENCY_AGREEMENT, started)
}

fn check_symplectic() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for (omega_b, _, coeffs) in coefficient_grid() {
        let outcome = coeffs.and_then(|c| {
            let (hi, lo) = symplectic_frequencies(&build_quadratic(&c, omega_b))?;
            Ok((hi, lo, c.level_frequency(), (omega_b / 2.0 + c.gamma).abs()))
        });
        match outcome {
            Ok((hi, lo, level, shift)) => {
                t.record(rel(hi, level + shift));
                t.record((lo - (level - shift)).abs() / (level + shift));
            }
            Err(e) => t.fail(format!("omega_B = {omega_b}: {e}")),
        }
    }
    t.finish("symplectic_frequencies", SYMPLECTIC_AGREEMENT, started)
}

fn check_alpha1(hooks: &CheckHooks, settings: &SolverSettings) -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for spec in isoenergetic_grid(2.0) {
        let closed = match (hooks.alpha1)(&spec) {
            Ok(v) => v,
            Err(_) => continue,
        };
        match alpha1_by_root(&spec, settings) {
            Ok(root) => t.record(rel(closed, root)),
            Err(e) => t.fail(format!("alpha1 root at N = {}: {e}", spec.n_phi0)),
        }
    }
    t.finish("alpha1_closed_vs_root", ROOT_AGREEMENT, started)
}

fn check_alpha3(hooks: &CheckHooks, settings: &SolverSettings) -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for &alpha in &CHECK_ALPHA {
        for spec in isoenergetic_grid(alpha) {
            let Ok(a1) = (hooks.alpha1)(&spec) else { continue };
            let Ok(closed) = alpha3_closed(&spec, alpha * a1) else { continue };
            match alpha3_by_root(&spec, alpha * a1, settings) {
                Ok(root) => t.record(rel(closed, root)),
                Err(e) => t.fail(format!("alpha3 root at N = {}, alpha = {alpha}: {e}", spec.n_phi0)),
            }
        }
    }
    t.finish("alpha3_closed_vs_root", ROOT_AGREEMENT, started)
}

fn check_heat(settings: &SolverSettings) -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for spec in isoenergetic_grid(2.0) {
        let Ok(r) = efficiency_isoenergetic(&spec) else { continue };
        let sp = spec.spectrum();
        let b1 = spec.b1();
        let b2 = b1 / r.alpha1.expect("isoenergetic").powi(2);
        let b3 = b2 / (spec.alpha * spec.alpha);
        let b4 = b3 / r.alpha3.expect("isoenergetic").powi(2);
        for (b_a, b_b, p0) in [(b1, b2, 1.0), (b3, b4, 0.0)] {
            let leg = IsoenergeticLeg { spectrum: sp, b_a, b_b, p00_a: p0 };
            let outcome = heat_isoenergetic(&sp, b_a, b_b, p0).and_then(|q| {
                let qq = heat_quadrature(&leg, b_a, b_b, QUADRATURE_STEPS, settings)?;
                let w = work_quadrature(&leg, b_a, b_b, QUADRATURE_STEPS, settings)?;
                Ok((q, qq, w))
            });
            match outcome {
                Ok((q, qq, w)) => {
                    t.record(rel(qq, q));
                    t.record(rel(-w, q));
                }
                Err(e) => t.fail(format!("heat leg at N = {}: {e}", spec.n_phi0)),
            }
        }
    }
    t.finish("heat_closed_vs_quadrature", HEAT_AGREEMENT, started)
}

fn check_probabilities() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for spec in isoenergetic_grid(2.0) {
        let Ok(r) = efficiency_isoenergetic(&spec) else { continue };
        let sp = spec.spectrum();
        let b1 = spec.b1();
        let b2 = b1 / r.alpha1.expect("isoenergetic").powi(2);
        let b3 = b2 / (spec.alpha * spec.alpha);
        let b4 = b3 / r.alpha3.expect("isoenergetic").powi(2);
        for (b_a, b_b, p0) in [(b1, b2, 1.0), (b3, b4, 0.0)] {
            for k in 0..=200 {
                let b = b_a + (b_b - b_a) * k as f64 / 200.0;
                if let Err(e) = ground_probability(&sp, b, b_a, p0) {
                    t.fail(e.to_string());
                    break;
                }
            }
            t.record(0.0);
        }
    }
    t.finish("probability_bounds", 0.0, started)
}

fn check_asymptote() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for o in orientations() {
        for &te in &FIGURE_THETA_ETA {
            for &g in &CHECK_GAMMA {
                let spec = IsoenergeticCycleSpec::new(1e6, (1.0 - te).sqrt(), g, 2.0, o).expect("valid");
                match efficiency_isoenergetic(&spec) {
                    Ok(r) => t.record((r.efficiency - 0.75).abs()),
                    Err(e) => t.fail(e.to_string()),
                }
            }
        }
    }
    t.finish("strong_field_limit", ASYMPTOTIC_AGREEMENT, started)
}

fn check_spot_values() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    let hot = EffectiveField::from_flux_quanta(4.0, Orientation::Positive, 0.0, 1.0, 1.0).expect("valid");
    let spec = IsomagneticCycleSpec::new(hot, 2.0, 1.0).expect("valid");
    t.record((efficiency_isomagnetic(&spec).efficiency - (1.0 - 2f64.sqrt() / 17f64.sqrt())).abs());
    t.finish("isomagnetic_spot_value", SPOT_AGREEMENT, started)
}

fn check_carnot() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    let grid = NcGrid {
        theta_eta: FIGURE_THETA_ETA.to_vec(),
        gamma: CHECK_GAMMA.to_vec(),
    };
    for &(tc, th) in &[(300.0, 600.0), (1.0, 1.0), (0.2, 7.0)] {
        let spec = CarnotSpec::new(tc, th).expect("valid");
        let report = nc_invariance_scan(&spec, &grid).expect("valid");
        if report.spread != 0.0 {
            t.fail(format!("spread {} at T_C = {tc}, T_H = {th}", report.spread));
        } else {
            t.record(0.0);
        }
    }
    let half = carnot_efficiency(&CarnotSpec::new(300.0, 600.0).expect("valid")).expect("valid");
    t.record((half - 0.5).abs());
    t.finish("carnot_invariance", 0.0, started)
}

fn check_efficiency_bound() -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for id in 2..=4 {
        for (name, config) in figure_configs(id).expect("known figure") {
            match run_sweep(&config, None) {
                Ok(rows) => {
                    for e in rows.iter().filter_map(|r| r.efficiency) {
                        if e < 1.0 {
                            t.record(0.0);
                        } else {
                            t.fail(format!("{name}: efficiency {e} >= 1"));
                        }
                    }
                }
                Err(e) => t.fail(format!("{name}: {e}")),
            }
        }
    }
    t.finish("efficiency_below_one", 0.0, started)
}

pub fn self_check(settings: &SolverSettings) -> CheckReport {
    self_check_with(settings, &CheckHooks::default())
}

pub fn self_check_with(settings: &SolverSettings, hooks: &CheckHooks) -> CheckReport {
    CheckReport {
        outcomes: vec![
            check_commutators(),
            check_level_frequency(),
            check_symplectic(),
            check_alpha1(hooks, settings),
            check_alpha3(hooks, settings),
            check_heat(settings),
            check_probabilities(),
            check_asymptote(),
            check_spot_values(),
            check_carnot(),
            check_efficiency_bound(),
        ],
    }
}
