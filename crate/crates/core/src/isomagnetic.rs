//! Isomagnetic cycle: level transition at the hot field `B_I`, isoentropic
//! expansion to `B_III = B_I/α²` (Landau radius grows by α), level
//! transition back at `B_III`, isoentropic return.

use crate::cycle::{CycleResult, CycleWarning};
use crate::error::{DomainCode, Error, Result};
use crate::nc::{eigenenergy, EffectiveField, QuantumLevel};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsomagneticCycleSpec {
    /// Field on the hot isomagnetic leg (I → II). Its sign sets the orientation.
    pub field_hot: EffectiveField,
    /// Landau radius ratio `ℓ_{B_III} / ℓ_{B_I}`.
    pub alpha: f64,
    pub hbar: f64,
}

impl IsomagneticCycleSpec {
    pub fn new(field_hot: EffectiveField, alpha: f64, hbar: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(
                DomainCode::NonPositiveParameter,
                format!("expansion coefficient must be positive, got {alpha}"),
            ));
        }
        Ok(IsomagneticCycleSpec {
            field_hot,
            alpha,
            hbar,
        })
    }

    pub fn field_cold(&self) -> EffectiveField {
        self.field_hot.diluted(self.alpha)
    }
}

fn transition_gap(field: &EffectiveField, hbar: f64) -> f64 {
    eigenenergy(QuantumLevel::FIRST_EXCITED, field, hbar) - eigenenergy(QuantumLevel::GROUND, field, hbar)
}

/// Heat absorbed on I → II, `E_{1,0}(B_I) − E_{0,0}(B_I)`.
pub fn heat_hot(field_hot: &EffectiveField, hbar: f64) -> f64 {
    transition_gap(field_hot, hbar)
}

/// Heat exchanged on III → IV, `E_{0,0}(B_III) − E_{1,0}(B_III)` with
/// `ω_{B_III} = ω_{B_I}/α²`. Always negative.
pub fn heat_cold(field_hot: &EffectiveField, alpha: f64, hbar: f64) -> f64 {
    -transition_gap(&field_hot.diluted(alpha), hbar)
}

pub fn efficiency_isomagnetic(spec: &IsomagneticCycleSpec) -> CycleResult {
    let hot = spec.field_hot;
    let cold = spec.field_cold();
    let q_in = heat_hot(&hot, spec.hbar);
    let q_out = heat_cold(&hot, spec.alpha, spec.hbar);
    let efficiency = 1.0 - (q_out / q_in).abs();

    let mut warnings = Vec::new();
    if spec.alpha <= 1.0 {
        warnings.push(CycleWarning::CompressionRegime);
    }
    if efficiency < 0.0 {
        warnings.push(CycleWarning::NegativeEfficiency);
    }
    let (f_hot, f_cold) = (hot.flux_factor(), cold.flux_factor());
    CycleResult {
        q_in,
        q_out,
        work: q_in + q_out,
        efficiency,
        field_points: [hot.omega_b, hot.omega_b, cold.omega_b, cold.omega_b],
        flux_factors: [f_hot, f_hot, f_cold, f_cold],
        alpha1: None,
        alpha3: None,
        warnings,
    }
}

/// `δS_gen = δQ/T − δQ/T_H`.
pub fn entropy_generation(q_absorbed: f64, t_system: f64, t_hot: f64) -> Result<f64> {
    if !(t_system > 0.0) || !(t_hot > 0.0) {
        return Err(Error::domain(
            DomainCode::NonPositiveTemperature,
            format!("temperatures must be positive (T = {t_system}, T_H = {t_hot})"),
        ));
    }
    Ok(q_absorbed / t_system - q_absorbed / t_hot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isoenergetic::isoentropic_work_between;
    use crate::nc::Orientation;

    fn hot(n_phi0: f64, gamma: f64, theta_eta: f64, orientation: Orientation) -> EffectiveField {
        EffectiveField::from_flux_quanta(n_phi0, orientation, gamma, 1.0, (1.0 - theta_eta).sqrt()).unwrap()
    }

    fn eff(n: f64, g: f64, te: f64, alpha: f64, o: Orientation) -> f64 {
        efficiency_isomagnetic(&IsomagneticCycleSpec::new(hot(n, g, te, o), alpha, 1.0).unwrap()).efficiency
    }

    #[test]
    fn hot_heat_values() {
        assert_eq!(heat_hot(&hot(0.0, 0.0, 0.0, Orientation::Positive), 1.0), 2.0);
        let q = heat_hot(&hot(4.0, 0.0, 0.0, Orientation::Positive), 1.0);
        assert!((q - 2.0 * 17f64.sqrt()).abs() < 1e-13);
        assert!((q - 8.246_211_3).abs() < 1e-7);

        // γ = 0.1, θη = 0.1: 2 sqrt(σ²ω² + (4 + 0.1)²)
        let q = heat_hot(&hot(4.0, 0.1, 0.1, Orientation::Positive), 1.0);
        assert!((q - 2.0 * (0.9f64 + 16.81).sqrt()).abs() < 1e-13);
    }

    #[test]
    fn cold_heat_values() {
        let f = hot(4.0, 0.0, 0.0, Orientation::Positive);
        assert_eq!(heat_cold(&f, 1.0, 1.0), -heat_hot(&f, 1.0));
        assert!((heat_cold(&f, 2.0, 1.0) + 2.0 * 2f64.sqrt()).abs() < 1e-13);
        assert!((heat_cold(&f, 1e6, 1.0) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn efficiency_spot_values() {
        let p = Orientation::Positive;
        assert_eq!(eff(4.0, 0.0, 0.0, 1.0, p), 0.0);
        let expected = 1.0 - 2f64.sqrt() / 17f64.sqrt();
        assert!((eff(4.0, 0.0, 0.0, 2.0, p) - expected).abs() < 1e-15);
        assert!((expected - 0.657_002_8).abs() < 1e-7);
        let limit = 1.0 - 1.0 / 17f64.sqrt();
        assert!((eff(4.0, 0.0, 0.0, 1e5, p) - limit).abs() < 1e-12);
        assert!((limit - 0.757_464_4).abs() < 1e-7);
    }

    #[test]
    fn first_law_over_the_cycle() {
        // the two isoentropic legs carry all the work; isomagnetic legs none
        let spec = IsomagneticCycleSpec::new(hot(10.0, 0.1, 0.1, Orientation::Positive), 2.0, 1.0).unwrap();
        let r = efficiency_isomagnetic(&spec);
        let b_hot = spec.field_hot.omega_b;
        let b_cold = spec.field_cold().omega_b;
        let f = |wb: f64| spec.field_hot.with_omega_b(wb);
        let w_expand = isoentropic_work_between(&f(b_hot), &f(b_cold), [0.0, 1.0], 1.0);
        let w_return = isoentropic_work_between(&f(b_cold), &f(b_hot), [1.0, 0.0], 1.0);
        assert!(((w_expand + w_return) + r.work).abs() < 1e-12);
        assert!(r.work > 0.0);
        assert!(r.q_in > 0.0 && r.q_out < 0.0);
        assert!((r.efficiency - r.efficiency_from_heats()).abs() == 0.0);
    }

    #[test]
    fn compression_regime_is_flagged() {
        let spec = IsomagneticCycleSpec::new(hot(4.0, 0.1, 0.0, Orientation::Positive), 0.8, 1.0).unwrap();
        let r = efficiency_isomagnetic(&spec);
        assert!(r.efficiency < 0.0);
        assert_eq!(r.warnings, vec![CycleWarning::CompressionRegime, CycleWarning::NegativeEfficiency]);
        assert!(IsomagneticCycleSpec::new(spec.field_hot, 0.0, 1.0).is_err());
    }

    #[test]
    fn efficiency_increases_with_alpha_and_theta_eta() {
        let p = Orientation::Positive;
        for &n in &[4.0, 10.0, 100.0] {
            for &g in &[0.1, 0.5] {
                let mut prev = -1.0;
                for k in 0..=40 {
                    let a = 1.0 + 0.05 * k as f64;
                    let e = eff(n, g, 0.1, a, p);
                    assert!(e >= prev);
                    assert!(e < 1.0);
                    prev = e;
                    assert!(eff(n, g, 0.0, a, p) <= eff(n, g, 0.1, a, p));
                    assert!(eff(n, g, 0.1, a, p) <= eff(n, g, 0.5, a, p));
                }
            }
        }
    }

    #[test]
    fn gamma_lowers_efficiency_for_positive_orientation() {
        // η = 1 − sqrt(s + (x/α² + γ)²)/sqrt(s + (x + γ)²) falls with γ once x/α² + γ > σω
        let p = Orientation::Positive;
        assert!(eff(4.0, 0.5, 0.0, 2.0, p) < eff(4.0, 0.1, 0.0, 2.0, p));
        assert!((eff(4.0, 0.5, 0.0, 2.0, p) - (1.0 - 3.25f64.sqrt() / 21.25f64.sqrt())).abs() < 1e-15);
        let r = Orientation::Reversed;
        assert!(eff(4.0, 0.5, 0.0, 2.0, r) > eff(4.0, 0.1, 0.0, 2.0, r));
    }

    #[test]
    fn nc_effect_suppressed_at_strong_field() {
        for &o in &[Orientation::Positive, Orientation::Reversed] {
            for &g in &[0.0, 0.1, 0.5] {
                for k in 0..=38 {
                    let a = 1.1 + 0.05 * k as f64;
                    let d4 = (eff(4.0, g, 0.5, a, o) - eff(4.0, g, 0.0, a, o)).abs();
                    let d100 = (eff(100.0, g, 0.5, a, o) - eff(100.0, g, 0.0, a, o)).abs();
                    assert!(d100 < d4);
                }
            }
        }
    }

    #[test]
    fn entropy_generation_values() {
        assert_eq!(entropy_generation(2.0, 1.5, 1.5).unwrap(), 0.0);
        assert_eq!(entropy_generation(2.0, 1.0, 2.0).unwrap(), 1.0);
        assert_eq!(entropy_generation(0.0, 1.0, 2.0).unwrap(), 0.0);
        assert!(entropy_generation(1.0, 0.0, 2.0).is_err());
        assert!(entropy_generation(1.0, 1.0, -2.0).is_err());
    }
}
