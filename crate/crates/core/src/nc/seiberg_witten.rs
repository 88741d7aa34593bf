//! Seiberg–Witten map from the deformed algebra onto ordinary canonical
//! operators, and the coefficients of the resulting commutative Hamiltonian
//!
//! ```text
//! H = α̃² (Q1² + Q2²) + β̃² (Π1² + Π2²) + (ω_B/2 + γ)(Π1 Q2 − Π2 Q1)
//! ```

use super::params::{compute_sigma, NcParams, SystemConfig};
use crate::error::{DomainCode, Error, Result};

/// Map constants in
/// `q1 = ν Q1 − θ/(2νħ) Π2`, `q2 = ν Q2 + θ/(2νħ) Π1`,
/// `p1 = μ Π1 + η/(2μħ) Q2`, `p2 = μ Π2 − η/(2μħ) Q1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwConstants {
    pub mu: f64,
    pub nu: f64,
}

impl SwConstants {
    /// `μν + θη/(4μνħ²)`; must equal 1 for `[q_i, p_j] = iħδ_ij`.
    pub fn canonical_defect(&self, nc: &NcParams) -> f64 {
        let mn = self.mu * self.nu;
        mn + nc.theta_eta() / (4.0 * mn * nc.hbar * nc.hbar) - 1.0
    }
}

/// Symmetric constrained map constants, `μ = ν = sqrt((1 + σ)/2)`.
///
/// `μν` is the root of `x² − x + θη/(4ħ²) = 0` that tends to 1 in the
/// commutative limit.
pub fn sw_constants(nc: &NcParams) -> Result<SwConstants> {
    let sigma = compute_sigma(nc)?;
    let m = ((1.0 + sigma) / 2.0).sqrt();
    Ok(SwConstants { mu: m, nu: m })
}

/// `γ = θ m Ω² / (2ħ) + η / (2 m ħ)`.
pub fn gamma_effective(nc: &NcParams, sys: &SystemConfig, big_omega: f64) -> f64 {
    nc.theta * sys.mass * big_omega * big_omega / (2.0 * nc.hbar) + nc.eta / (2.0 * sys.mass * nc.hbar)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCoefficients {
    pub alpha_tilde_sq: f64,
    pub beta_tilde_sq: f64,
    pub gamma: f64,
}

impl EffectiveCoefficients {
    /// `2 α̃ β̃`, the oscillator frequency of the ℓ = 0 tower.
    pub fn level_frequency(&self) -> f64 {
        2.0 * (self.alpha_tilde_sq * self.beta_tilde_sq).sqrt()
    }
}

/// Coefficients of the commutative Hamiltonian for a (signed) cyclotron
/// frequency `omega_b`. `Ω² = ω_B²/4 + ω²` is formed internally.
pub fn effective_coefficients(
    sw: &SwConstants,
    sys: &SystemConfig,
    omega_b: f64,
    nc: &NcParams,
) -> Result<EffectiveCoefficients> {
    let SwConstants { mu, nu } = *sw;
    let NcParams { theta, eta, hbar } = *nc;
    let m = sys.mass;
    let big_omega_sq = sys.effective_frequency_sq(omega_b);

    let alpha_tilde_sq = nu * nu * m * big_omega_sq / 2.0
        + eta * eta / (8.0 * m * mu * mu * hbar * hbar)
        + (nu / mu) * omega_b * eta / (4.0 * hbar);
    let beta_tilde_sq = mu * mu / (2.0 * m)
        + m * big_omega_sq * theta * theta / (8.0 * nu * nu * hbar * hbar)
        + (mu / nu) * omega_b * theta / (4.0 * hbar);
    let gamma = gamma_effective(nc, sys, big_omega_sq.sqrt());

    if !(alpha_tilde_sq > 0.0) || !(beta_tilde_sq > 0.0) {
        return Err(Error::domain(
            DomainCode::NonPositiveCoefficient,
            format!("alpha~^2 = {alpha_tilde_sq}, beta~^2 = {beta_tilde_sq}"),
        ));
    }
    Ok(EffectiveCoefficients {
        alpha_tilde_sq,
        beta_tilde_sq,
        gamma,
    })
}
