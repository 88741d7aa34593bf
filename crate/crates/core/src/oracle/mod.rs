//! Independent numerical checks for the closed-form results: commutator
//! expansion of the Seiberg–Witten map, normal-mode frequencies of the
//! effective quadratic Hamiltonian, a bracketing root solver and
//! Richardson-extrapolated quadrature.

mod commutator;
mod quadrature;
mod roots;
mod symplectic;

pub use commutator::{
    commutator_matrix, mapped_operators, target_commutator_matrix, verify_commutators,
    CommutatorReport, COMMUTATOR_TOLERANCE,
};
pub use quadrature::{heat_quadrature, integrate, work_quadrature, TwoLevelTrajectory};
pub use roots::root_solve;
pub use symplectic::{build_quadratic, symplectic_frequencies, QuadraticHamiltonian};

/// Tolerances and iteration caps shared by the root solver and the
/// quadrature. The defaults are fixed so results are reproducible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSettings {
    /// Bisection stops once the bracket is narrower than `root_tol · max(1, |x|)`.
    pub root_tol: f64,
    /// Bisection also stops when `|f(x)| <= root_f_tol`. Zero disables it.
    pub root_f_tol: f64,
    pub max_iterations: usize,
    /// Relative agreement required between successive Richardson extrapolants.
    pub quadrature_tol: f64,
    /// Number of step doublings after the base grid.
    pub max_refinements: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            root_tol: 1e-14,
            root_f_tol: 0.0,
            max_iterations: 200,
            quadrature_tol: 1e-6,
            max_refinements: 6,
        }
    }
}

impl SolverSettings {
    pub fn with_root_tol(self, root_tol: f64) -> Self {
        SolverSettings { root_tol, ..self }
    }
}
