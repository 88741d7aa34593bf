use nalgebra::{Matrix4, SymmetricEigen};

use crate::error::{DomainCode, Error, Result};
use crate::nc::EffectiveCoefficients;

/// `H = xᵀ A x` over `x = (Q1, Q2, Π1, Π2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticHamiltonian {
    a: Matrix4<f64>,
}

impl QuadraticHamiltonian {
    pub fn from_matrix(m: [[f64; 4]; 4]) -> Result<Self> {
        let a = Matrix4::from_fn(|i, j| m[i][j]);
        let scale = a.amax().max(1.0);
        if (a - a.transpose()).amax() > 1e-14 * scale {
            return Err(Error::Validation("quadratic form is not symmetric".into()));
        }
        Ok(QuadraticHamiltonian { a })
    }

    pub fn matrix(&self) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.a[(i, j)];
            }
        }
        out
    }

    pub fn evaluate(&self, x: [f64; 4]) -> f64 {
        let v = nalgebra::Vector4::from(x);
        v.dot(&(self.a * v))
    }
}

/// Quadratic form of `α̃²Q² + β̃²Π² + (ω_B/2 + γ)(Π1Q2 − Π2Q1)`.
pub fn build_quadratic(coeffs: &EffectiveCoefficients, omega_b: f64) -> QuadraticHamiltonian {
    let a = coeffs.alpha_tilde_sq;
    let b = coeffs.beta_tilde_sq;
    let half = (omega_b / 2.0 + coeffs.gamma) / 2.0;
    #[rustfmt::skip]
    let m = Matrix4::new(
        a,     0.0,  0.0,  -half,
        0.0,   a,    half, 0.0,
        0.0,   half, b,    0.0,
        -half, 0.0,  0.0,  b,
    );
    QuadraticHamiltonian { a: m }
}

/// Normal-mode frequencies `(ω₊, ω₋)`, `ω₊ ≥ ω₋ > 0`, of `H = xᵀAx`.
///
/// These are the moduli of the eigenvalues of `J·2A`. With `2A = LLᵀ` the
/// matrix `S = LᵀJL` is similar to `J·2A` and antisymmetric, so `SᵀS` has
/// the squared frequencies as doubly degenerate eigenvalues. The smaller
/// frequency is taken from `ω₊ω₋ = sqrt(det 2A)` to keep its relative
/// accuracy when the two modes are far apart.
pub fn symplectic_frequencies(h: &QuadraticHamiltonian) -> Result<(f64, f64)> {
    let m = h.a * 2.0;
    let chol = m.cholesky().ok_or_else(|| {
        Error::domain(
            DomainCode::NotPositiveDefinite,
            "quadratic form is not positive definite",
        )
    })?;
    let l = chol.l();
    #[rustfmt::skip]
    let j = Matrix4::new(
        0.0,  0.0,  1.0, 0.0,
        0.0,  0.0,  0.0, 1.0,
        -1.0, 0.0,  0.0, 0.0,
        0.0,  -1.0, 0.0, 0.0,
    );
    let s = l.transpose() * j * l;
    let k = s.transpose() * s;
    let eig = SymmetricEigen::new(k);
    let mut lambdas: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    lambdas.sort_by(f64::total_cmp);
    let omega_plus = ((lambdas[2] + lambdas[3]) / 2.0).sqrt();
    let sqrt_det: f64 = l.diagonal().iter().product();
    let omega_minus = sqrt_det / omega_plus;
    Ok((omega_plus, omega_minus))
}
