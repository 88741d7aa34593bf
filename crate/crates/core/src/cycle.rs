/// Non-fatal observations about an evaluated cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleWarning {
    /// `alpha <= 1`: the isoentropic leg compresses instead of expanding.
    CompressionRegime,
    /// The cycle consumes work rather than producing it.
    NegativeEfficiency,
}

/// Signed heats (absorbed > 0), net work output and efficiency of one
/// evaluated cycle, with the corner data used to get there.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleResult {
    pub q_in: f64,
    pub q_out: f64,
    /// Net work delivered per cycle, `q_in + q_out`.
    pub work: f64,
    pub efficiency: f64,
    /// Signed cyclotron frequencies at the four corners.
    pub field_points: [f64; 4],
    /// `F_Φ²` at the four corners.
    pub flux_factors: [f64; 4],
    pub alpha1: Option<f64>,
    pub alpha3: Option<f64>,
    pub warnings: Vec<CycleWarning>,
}

impl CycleResult {
    /// `1 − |q_out / q_in|` from the stored heats.
    pub fn efficiency_from_heats(&self) -> f64 {
        1.0 - (self.q_out / self.q_in).abs()
    }
}
