use crate::error::{DomainCode, Error, Result};

/// Noncommutative deformation of the planar Heisenberg–Weyl algebra:
/// `[q1, q2] = iθ`, `[p1, p2] = iη`, `[q_i, p_j] = iħ δ_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NcParams {
    pub theta: f64,
    pub eta: f64,
    pub hbar: f64,
}

impl NcParams {
    pub fn new(theta: f64, eta: f64, hbar: f64) -> Result<Self> {
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::domain(
                DomainCode::NonPositiveParameter,
                format!("hbar must be positive, got {hbar}"),
            ));
        }
        let nc = NcParams { theta, eta, hbar };
        compute_sigma(&nc)?;
        Ok(nc)
    }

    /// Undeformed algebra with the given ħ.
    pub fn commutative(hbar: f64) -> Self {
        NcParams {
            theta: 0.0,
            eta: 0.0,
            hbar,
        }
    }

    /// Builds parameters from the product θη alone, splitting it evenly
    /// (`θ = sqrt|θη|`, `η = ±sqrt|θη|`). Only σ depends on the product,
    /// which is all the cycle code needs.
    pub fn from_product(theta_eta: f64, hbar: f64) -> Result<Self> {
        let root = theta_eta.abs().sqrt();
        NcParams::new(root, root.copysign(theta_eta), hbar)
    }

    pub fn theta_eta(&self) -> f64 {
        self.theta * self.eta
    }

    pub fn sigma(&self) -> Result<f64> {
        compute_sigma(self)
    }

    /// `Σ_ij = δ_ij + θ_ik η_kj / ħ²` for the antisymmetric 2D matrices
    /// `θ_ij = θ ε_ij`, `η_ij = η ε_ij`. Reduces to `σ² δ_ij`.
    pub fn sigma_matrix(&self) -> Result<[[f64; 2]; 2]> {
        let eps = [[0.0, 1.0], [-1.0, 0.0]];
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = if i == j { 1.0 } else { 0.0 };
                for k in 0..2 {
                    acc += self.theta * eps[i][k] * self.eta * eps[k][j] / (self.hbar * self.hbar);
                }
                out[i][j] = acc;
            }
        }
        let det = out[0][0] * out[1][1] - out[0][1] * out[1][0];
        if det <= 0.0 {
            return Err(Error::domain(
                DomainCode::NonInvertibleDeformation,
                format!("Sigma matrix is singular (det = {det})"),
            ));
        }
        Ok(out)
    }
}

/// `σ = sqrt(1 − θη/ħ²)`.
pub fn compute_sigma(nc: &NcParams) -> Result<f64> {
    let ratio = nc.theta * nc.eta / (nc.hbar * nc.hbar);
    if !(ratio < 1.0) {
        return Err(Error::domain(
            DomainCode::NonInvertibleDeformation,
            format!("theta*eta/hbar^2 = {ratio} must be below 1"),
        ));
    }
    Ok((1.0 - ratio).sqrt())
}

/// Particle and trap. `ω_B = qB/m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    pub mass: f64,
    pub omega: f64,
    pub charge: f64,
}

impl Default for SystemConfig {
    fn default() -> Self {
        SystemConfig {
            mass: 1.0,
            omega: 1.0,
            charge: 1.0,
        }
    }
}

impl SystemConfig {
    pub fn new(mass: f64, omega: f64, charge: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("omega", omega), ("charge", charge)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::domain(
                    DomainCode::NonPositiveParameter,
                    format!("{name} must be positive, got {v}"),
                ));
            }
        }
        Ok(SystemConfig {
            mass,
            omega,
            charge,
        })
    }

    /// Magnitude of the cyclotron frequency for field strength `b`.
    pub fn cyclotron_frequency(&self, b: f64) -> f64 {
        self.charge * b / self.mass
    }

    pub fn field_for_frequency(&self, omega_b: f64) -> f64 {
        omega_b * self.mass / self.charge
    }

    /// `Ω² = ω_B²/4 + ω²`.
    pub fn effective_frequency_sq(&self, omega_b: f64) -> f64 {
        omega_b * omega_b / 4.0 + self.omega * self.omega
    }
}

/// Orientation of the applied field relative to the NC shift γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Positive,
    Reversed,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Positive => 1.0,
            Orientation::Reversed => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Positive => "positive",
            Orientation::Reversed => "reversed",
        }
    }
}

impl std::str::FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "positive" | "+" => Ok(Orientation::Positive),
            "reversed" | "negative" | "-" => Ok(Orientation::Reversed),
            other => Err(format!("unknown orientation `{other}`")),
        }
    }
}

/// Magnetic length `ℓ_B = sqrt(ħ / (m ω_B))`.
pub fn landau_radius(omega_b: f64, sys: &SystemConfig, hbar: f64) -> Result<f64> {
    if !(omega_b > 0.0) {
        return Err(Error::domain(
            DomainCode::NonPositiveParameter,
            format!("Landau radius needs omega_B > 0, got {omega_b}"),
        ));
    }
    Ok((hbar / (sys.mass * omega_b)).sqrt())
}
