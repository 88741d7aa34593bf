use super::SolverSettings;
use crate::error::{DomainCode, Error, Result};

/// Occupations and energies of the two engine levels along a field path.
pub trait TwoLevelTrajectory {
    fn energies(&self, b: f64) -> [f64; 2];
    fn energy_slopes(&self, b: f64) -> [f64; 2];
    fn populations(&self, b: f64) -> [f64; 2];
    fn population_slopes(&self, b: f64) -> [f64; 2];
}

/// Composite trapezoid on `[a, b]` starting from `steps` panels, doubled
/// until two successive Richardson extrapolants agree.
pub fn integrate<F>(f: F, a: f64, b: f64, steps: usize, settings: &SolverSettings) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    let mut n = steps.max(1);
    let h = (b - a) / n as f64;
    let interior: f64 = (1..n).map(|k| f(a + k as f64 * h)).sum();
    let mut trap = h * (0.5 * (f(a) + f(b)) + interior);
    let mut prev_extrap: Option<f64> = None;
    let mut last_change = f64::INFINITY;

    for _ in 0..=settings.max_refinements {
        let h_new = (b - a) / (2 * n) as f64;
        let mids: f64 = (0..n).map(|k| f(a + (2 * k + 1) as f64 * h_new)).sum();
        let refined = 0.5 * trap + h_new * mids;
        let extrap = (4.0 * refined - trap) / 3.0;
        if let Some(p) = prev_extrap {
            last_change = (extrap - p).abs();
            if last_change <= settings.quadrature_tol * extrap.abs().max(f64::MIN_POSITIVE) {
                return Ok(extrap);
            }
        }
        prev_extrap = Some(extrap);
        trap = refined;
        n *= 2;
    }
    Err(Error::Convergence {
        what: "trapezoid quadrature",
        iterations: settings.max_refinements,
        residual: last_change,
    })
}

fn check_leg(b_a: f64, b_b: f64, steps: usize) -> Result<()> {
    if !(b_a > 0.0) || !(b_b > 0.0) {
        return Err(Error::domain(
            DomainCode::NonPositiveParameter,
            format!("field endpoints must be positive, got {b_a} and {b_b}"),
        ));
    }
    if steps < 100 {
        return Err(Error::Validation(format!("quadrature needs at least 100 steps, got {steps}")));
    }
    Ok(())
}

/// Heat absorbed along a leg, `Σ_k ∫ E_k (dp_k/dB) dB`.
pub fn heat_quadrature<T>(traj: &T, b_a: f64, b_b: f64, steps: usize, settings: &SolverSettings) -> Result<f64>
where
    T: TwoLevelTrajectory + ?Sized,
{
    check_leg(b_a, b_b, steps)?;
    integrate(
        |b| {
            let e = traj.energies(b);
            let dp = traj.population_slopes(b);
            e[0] * dp[0] + e[1] * dp[1]
        },
        b_a,
        b_b,
        steps,
        settings,
    )
}

/// Work done on the system along a leg, `Σ_k ∫ p_k (dE_k/dB) dB`
/// (minus the integral of the magnetisation).
pub fn work_quadrature<T>(traj: &T, b_a: f64, b_b: f64, steps: usize, settings: &SolverSettings) -> Result<f64>
where
    T: TwoLevelTrajectory + ?Sized,
{
    check_leg(b_a, b_b, steps)?;
    integrate(
        |b| {
            let p = traj.populations(b);
            let de = traj.energy_slopes(b);
            p[0] * de[0] + p[1] * de[1]
        },
        b_a,
        b_b,
        steps,
        settings,
    )
}
