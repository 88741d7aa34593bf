use super::SolverSettings;
use crate::error::{Error, Result};

/// Bisection on `[lo, hi]`. Requires a sign change (or a zero) at the
/// endpoints; the result depends only on `f` and the inputs.
pub fn root_solve<F>(f: F, lo: f64, hi: f64, settings: &SolverSettings) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Bracket {
            lo,
            hi,
            f_lo,
            f_hi,
        });
    }

    for _ in 0..settings.max_iterations {
        let mid = lo + (hi - lo) / 2.0;
        let f_mid = f(mid);
        if f_mid == 0.0 || f_mid.abs() <= settings.root_f_tol {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if hi - lo <= settings.root_tol * mid.abs().max(1.0) {
            return Ok(lo + (hi - lo) / 2.0);
        }
    }
    Err(Error::Convergence {
        what: "bisection",
        iterations: settings.max_iterations,
        residual: hi - lo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root() {
        let x = root_solve(|x| x - 2.0, 0.0, 10.0, &SolverSettings::default()).unwrap();
        assert!((x - 2.0).abs() < 1e-13);
    }

    #[test]
    fn reversed_bracket_and_endpoint_roots() {
        let s = SolverSettings::default();
        let x = root_solve(|x| x * x - 2.0, 5.0, 0.0, &s).unwrap();
        assert!((x - 2f64.sqrt()).abs() < 1e-13);
        assert_eq!(root_solve(|x| x - 1.0, 1.0, 3.0, &s).unwrap(), 1.0);
    }

    #[test]
    fn no_sign_change() {
        let err = root_solve(|x| x * x + 1.0, -1.0, 1.0, &SolverSettings::default()).unwrap_err();
        assert!(matches!(err, Error::Bracket { .. }));
    }

    #[test]
    fn iteration_cap() {
        let s = SolverSettings {
            max_iterations: 5,
            ..SolverSettings::default()
        };
        let err = root_solve(|x| x - 0.3, 0.0, 1.0, &s).unwrap_err();
        assert!(matches!(err, Error::Convergence { iterations: 5, .. }));
    }

    #[test]
    fn deterministic() {
        let s = SolverSettings::default();
        let f = |x: f64| x.exp() - 3.0 * x;
        let a = root_solve(f, 0.0, 1.0, &s).unwrap();
        let b = root_solve(f, 0.0, 1.0, &s).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
