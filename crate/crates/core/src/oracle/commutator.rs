use crate::nc::{NcParams, SwConstants};

pub const COMMUTATOR_TOLERANCE: f64 = 1e-12;

/// Coefficients of the mapped operators `(q1, q2, p1, p2)` over the
/// canonical basis `(Q1, Q2, Π1, Π2)`.
pub fn mapped_operators(sw: &SwConstants, nc: &NcParams) -> [[f64; 4]; 4] {
    let SwConstants { mu, nu } = *sw;
    let t = nc.theta / (2.0 * nu * nc.hbar);
    let e = nc.eta / (2.0 * mu * nc.hbar);
    [
        [nu, 0.0, 0.0, -t],
        [0.0, nu, t, 0.0],
        [0.0, e, mu, 0.0],
        [-e, 0.0, 0.0, mu],
    ]
}

/// `[u, v] = iħ (u_Q·v_Π − u_Π·v_Q)` for linear combinations of the basis.
fn bracket(u: &[f64; 4], v: &[f64; 4], hbar: f64) -> f64 {
    hbar * (u[0] * v[2] - u[2] * v[0] + u[1] * v[3] - u[3] * v[1])
}

/// `c_ij` with `[x_i, x_j] = i c_ij` for `x = (q1, q2, p1, p2)` under the map.
pub fn commutator_matrix(sw: &SwConstants, nc: &NcParams) -> [[f64; 4]; 4] {
    let ops = mapped_operators(sw, nc);
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = bracket(&ops[i], &ops[j], nc.hbar);
        }
    }
    out
}

/// The deformed algebra the map has to reproduce.
pub fn target_commutator_matrix(nc: &NcParams) -> [[f64; 4]; 4] {
    let (t, e, h) = (nc.theta, nc.eta, nc.hbar);
    [
        [0.0, t, h, 0.0],
        [-t, 0.0, 0.0, h],
        [-h, 0.0, 0.0, e],
        [0.0, -h, -e, 0.0],
    ]
}

/// Absolute deviations of the mapped commutators from the deformed algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorReport {
    pub q1_q2: f64,
    pub p1_p2: f64,
    pub q1_p1: f64,
    pub q1_p2: f64,
    pub q2_p1: f64,
    pub q2_p2: f64,
}

impl CommutatorReport {
    pub fn residuals(&self) -> [f64; 6] {
        [self.q1_q2, self.p1_p2, self.q1_p1, self.q1_p2, self.q2_p1, self.q2_p2]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals().into_iter().fold(0.0, f64::max)
    }

    pub fn passes(&self) -> bool {
        self.max_residual() <= COMMUTATOR_TOLERANCE
    }
}

pub fn verify_commutators(sw: &SwConstants, nc: &NcParams) -> CommutatorReport {
    let got = commutator_matrix(sw, nc);
    let want = target_commutator_matrix(nc);
    let r = |i: usize, j: usize| (got[i][j] - want[i][j]).abs();
    CommutatorReport {
        q1_q2: r(0, 1),
        p1_p2: r(2, 3),
        q1_p1: r(0, 2),
        q1_p2: r(0, 3),
        q2_p1: r(1, 2),
        q2_p2: r(1, 3),
    }
}
