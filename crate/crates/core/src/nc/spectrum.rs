use super::params::{Orientation, SystemConfig};
use crate::error::{DomainCode, Error, Result};

/// Radial and angular quantum numbers `(κ, ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumLevel {
    pub kappa: u32,
    pub ell: i32,
}

impl QuantumLevel {
    pub const GROUND: QuantumLevel = QuantumLevel { kappa: 0, ell: 0 };
    pub const FIRST_EXCITED: QuantumLevel = QuantumLevel { kappa: 1, ell: 0 };

    pub fn new(kappa: u32, ell: i32) -> Self {
        QuantumLevel { kappa, ell }
    }

    /// `2κ + |ℓ| + 1`.
    pub fn degeneracy_factor(&self) -> f64 {
        f64::from(2 * self.kappa + self.ell.unsigned_abs() + 1)
    }
}

/// Everything the spectrum depends on. `omega_b` is signed: a negative value
/// is the reversed field orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveField {
    pub omega_b: f64,
    pub gamma: f64,
    pub omega: f64,
    pub sigma: f64,
}

impl EffectiveField {
    pub fn new(omega_b: f64, gamma: f64, omega: f64, sigma: f64) -> Result<Self> {
        if !(gamma >= 0.0) || !gamma.is_finite() {
            return Err(Error::domain(
                DomainCode::NonPositiveParameter,
                format!("gamma must be non-negative, got {gamma}"),
            ));
        }
        if !(omega > 0.0) || !(sigma > 0.0) || !omega_b.is_finite() {
            return Err(Error::domain(
                DomainCode::NonPositiveParameter,
                format!("need omega > 0 and sigma > 0 (omega = {omega}, sigma = {sigma}, omega_B = {omega_b})"),
            ));
        }
        Ok(EffectiveField {
            omega_b,
            gamma,
            omega,
            sigma,
        })
    }

    /// Field with `|ω_B| = 2ω N_Φ⁽⁰⁾` in the given orientation.
    pub fn from_flux_quanta(
        n_phi0: f64,
        orientation: Orientation,
        gamma: f64,
        omega: f64,
        sigma: f64,
    ) -> Result<Self> {
        if !(n_phi0 >= 0.0) {
            return Err(Error::domain(
                DomainCode::NonPositiveParameter,
                format!("n_phi0 must be non-negative, got {n_phi0}"),
            ));
        }
        EffectiveField::new(orientation.sign() * 2.0 * omega * n_phi0, gamma, omega, sigma)
    }

    pub fn n_phi0(&self) -> f64 {
        self.omega_b.abs() / (2.0 * self.omega)
    }

    pub fn orientation(&self) -> Orientation {
        if self.omega_b < 0.0 {
            Orientation::Reversed
        } else {
            Orientation::Positive
        }
    }

    /// Same γ, ω, σ at another (signed) cyclotron frequency.
    pub fn with_omega_b(&self, omega_b: f64) -> Self {
        EffectiveField { omega_b, ..*self }
    }

    /// Field after the Landau radius grows by `x`, i.e. `ω_B → ω_B / x²`.
    pub fn diluted(&self, x: f64) -> Self {
        self.with_omega_b(self.omega_b / (x * x))
    }

    /// `ω_B/2 + γ` with signed ω_B; the combination that shifts the spectrum.
    pub fn shifted_half_frequency(&self) -> f64 {
        self.omega_b / 2.0 + self.gamma
    }

    pub fn flux_factor(&self) -> f64 {
        flux_factor(self)
    }

    /// `σω sqrt(1 + F_Φ²)`.
    pub fn level_spacing_frequency(&self) -> f64 {
        self.sigma * self.omega * (1.0 + flux_factor(self)).sqrt()
    }
}

/// `F_Φ² = (ω_B²/4 ± γ|ω_B| + γ²) / σ²ω²`, the sign following the field
/// orientation. Written as a perfect square so it is never negative and
/// vanishes exactly at `ω_B = −2γ`.
pub fn flux_factor(field: &EffectiveField) -> f64 {
    let shifted = field.shifted_half_frequency() / (field.sigma * field.omega);
    shifted * shifted
}

/// `E_{κ,ℓ} = σħω sqrt(1 + F_Φ²)(2κ + |ℓ| + 1) − ħ(ω_B/2 + γ)ℓ`.
pub fn eigenenergy(level: QuantumLevel, field: &EffectiveField, hbar: f64) -> f64 {
    hbar * field.level_spacing_frequency() * level.degeneracy_factor()
        - hbar * field.shifted_half_frequency() * f64::from(level.ell)
}

/// `∂E_{κ,ℓ}/∂ω_B` at fixed γ, ω, σ.
pub fn eigenenergy_slope(level: QuantumLevel, field: &EffectiveField, hbar: f64) -> f64 {
    let root = (field.sigma * field.sigma * field.omega * field.omega
        + field.shifted_half_frequency().powi(2))
    .sqrt();
    hbar * (level.degeneracy_factor() * field.shifted_half_frequency() / (2.0 * root)
        - 0.5 * f64::from(level.ell))
}

/// The two levels `(0,0)` and `(1,0)` as functions of the field strength
/// `B ≥ 0` along a fixed orientation. The engine cycles only ever move
/// between these two states, so ℓ is conserved by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelSpectrum {
    pub gamma: f64,
    pub omega: f64,
    pub sigma: f64,
    pub orientation: Orientation,
    pub system: SystemConfig,
    pub hbar: f64,
}

impl TwoLevelSpectrum {
    pub fn new(template: &EffectiveField, orientation: Orientation, system: SystemConfig, hbar: f64) -> Self {
        TwoLevelSpectrum {
            gamma: template.gamma,
            omega: template.omega,
            sigma: template.sigma,
            orientation,
            system,
            hbar,
        }
    }

    pub fn field_at(&self, b: f64) -> EffectiveField {
        EffectiveField {
            omega_b: self.orientation.sign() * self.system.cyclotron_frequency(b),
            gamma: self.gamma,
            omega: self.omega,
            sigma: self.sigma,
        }
    }

    /// Field strength that realises `N_Φ⁽⁰⁾`.
    pub fn field_for_flux_quanta(&self, n_phi0: f64) -> f64 {
        self.system.field_for_frequency(2.0 * self.omega * n_phi0)
    }

    /// `[E_{0,0}(B), E_{1,0}(B)]`.
    pub fn energies(&self, b: f64) -> [f64; 2] {
        let f = self.field_at(b);
        [
            eigenenergy(QuantumLevel::GROUND, &f, self.hbar),
            eigenenergy(QuantumLevel::FIRST_EXCITED, &f, self.hbar),
        ]
    }

    /// `[∂E_{0,0}/∂B, ∂E_{1,0}/∂B]`; the magnetisations are their negatives.
    pub fn energy_slopes(&self, b: f64) -> [f64; 2] {
        let f = self.field_at(b);
        let dw_db = self.orientation.sign() * self.system.charge / self.system.mass;
        [
            eigenenergy_slope(QuantumLevel::GROUND, &f, self.hbar) * dw_db,
            eigenenergy_slope(QuantumLevel::FIRST_EXCITED, &f, self.hbar) * dw_db,
        ]
    }

    /// `E_{1,0}(B) − E_{0,0}(B)`.
    pub fn gap(&self, b: f64) -> f64 {
        let [e0, e1] = self.energies(b);
        e1 - e0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(omega_b: f64, gamma: f64) -> EffectiveField {
        EffectiveField::new(omega_b, gamma, 1.0, 1.0).unwrap()
    }

    #[test]
    fn flux_factor_reduces_to_flux_quanta() {
        let f = field(8.0, 0.0);
        assert_eq!(f.flux_factor(), f.n_phi0().powi(2));
        assert_eq!(f.flux_factor(), 16.0);
    }

    #[test]
    fn flux_factor_cancels_for_reversed_field() {
        for &g in &[0.1, 0.37, 0.5, 3.0] {
            let f = field(-2.0 * g, g);
            assert_eq!(f.orientation(), Orientation::Reversed);
            assert_eq!(f.flux_factor(), 0.0);
            assert!(field(-2.0 * g * 1.001, g).flux_factor() > 0.0);
            assert!(field(2.0 * g, g).flux_factor() > 0.0);
        }
    }

    #[test]
    fn flux_factor_value() {
        assert!((field(8.0, 0.1).flux_factor() - 16.81).abs() < 1e-12);
        // reversed orientation flips the cross term
        assert!((field(-8.0, 0.1).flux_factor() - (16.0 - 0.8 + 0.01)).abs() < 1e-12);
    }

    #[test]
    fn eigenenergy_values() {
        assert_eq!(eigenenergy(QuantumLevel::GROUND, &field(0.0, 0.0), 1.0), 1.0);
        let f = field(8.0, 0.0);
        let e00 = eigenenergy(QuantumLevel::GROUND, &f, 1.0);
        let e10 = eigenenergy(QuantumLevel::FIRST_EXCITED, &f, 1.0);
        assert!((e00 - 17f64.sqrt()).abs() < 1e-14);
        assert!((e10 - 3.0 * 17f64.sqrt()).abs() < 1e-14);
        assert!((e00 - 4.123_105_6).abs() < 1e-7);
        assert!((e10 - 12.369_316_9).abs() < 1e-7);
    }

    #[test]
    fn angular_term_follows_orientation() {
        let level = QuantumLevel::new(0, 1);
        let pos = eigenenergy(level, &field(8.0, 0.25), 1.0);
        let rev = eigenenergy(level, &field(-8.0, 0.25), 1.0);
        let fp = field(8.0, 0.25);
        let fr = field(-8.0, 0.25);
        assert!((pos - (2.0 * fp.level_spacing_frequency() - 4.25)).abs() < 1e-13);
        assert!((rev - (2.0 * fr.level_spacing_frequency() + 3.75)).abs() < 1e-13);
    }

    #[test]
    fn slope_matches_central_difference() {
        let h = 1e-6;
        for &(wb, g, l) in &[(3.0, 0.2, 0), (-3.0, 0.4, 2), (0.7, 0.0, -1)] {
            let level = QuantumLevel::new(1, l);
            let f = field(wb, g);
            let fd = (eigenenergy(level, &f.with_omega_b(wb + h), 1.0)
                - eigenenergy(level, &f.with_omega_b(wb - h), 1.0))
                / (2.0 * h);
            assert!((eigenenergy_slope(level, &f, 1.0) - fd).abs() < 1e-8);
        }
    }

    #[test]
    fn two_level_spectrum_tracks_field() {
        let sys = SystemConfig::new(2.0, 1.0, 0.5).unwrap();
        let template = field(0.0, 0.1);
        let spec = TwoLevelSpectrum::new(&template, Orientation::Reversed, sys, 1.0);
        let b = spec.field_for_flux_quanta(4.0);
        assert_eq!(spec.field_at(b).omega_b, -8.0);
        let [e0, e1] = spec.energies(b);
        assert!((e1 - 3.0 * e0).abs() < 1e-13);
        assert!((spec.gap(b) - 2.0 * e0).abs() < 1e-13);
    }

    #[test]
    fn rejects_invalid_field() {
        assert!(EffectiveField::new(1.0, -0.1, 1.0, 1.0).is_err());
        assert!(EffectiveField::new(1.0, 0.1, 0.0, 1.0).is_err());
        assert!(EffectiveField::new(1.0, 0.1, 1.0, 0.0).is_err());
        assert!(EffectiveField::from_flux_quanta(-1.0, Orientation::Positive, 0.0, 1.0, 1.0).is_err());
    }
}
