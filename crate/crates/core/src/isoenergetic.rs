//! Isoenergetic cycle.
//!
//! 1 → 2: isoenergetic expansion from the ground state, `ℓ_{B2} = α₁ ℓ_{B1}`,
//!        ending in the excited level.
//! 2 → 3: isoentropic expansion, `ℓ_{B3} = α ℓ_{B2}`.
//! 3 → 4: isoenergetic compression back to the ground level,
//!        `ℓ_{B4} = α₃ ℓ_{B3}` with `α₃ < 1`.
//! 4 → 1: isoentropic return.
//!
//! The closed forms for α₁ and α₃ are the first-crossing solutions of
//! `E_{0,0}(B1) = E_{1,0}(B2)` and `E_{1,0}(B3) = E_{0,0}(B4)`. For the
//! reversed orientation they follow from `γ → −γ`.

use crate::cycle::{CycleResult, CycleWarning};
use crate::error::{DomainCode, Error, Result};
use crate::nc::{
    eigenenergy, EffectiveField, NcParams, Orientation, QuantumLevel, SystemConfig, TwoLevelSpectrum,
};
use crate::oracle::{root_solve, SolverSettings, TwoLevelTrajectory};

const PROBABILITY_SLACK: f64 = 1e-12;

/// Brackets for the root-solver versions of α₁ and α₃.
pub const ALPHA1_BRACKET: (f64, f64) = (1.0, 1e3);
pub const ALPHA3_BRACKET: (f64, f64) = (1e-3, 1.0);

/// Populations of the `(0,0)` and `(1,0)` levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccupationState {
    pub p00: f64,
    pub p10: f64,
}

impl OccupationState {
    pub const GROUND: OccupationState = OccupationState { p00: 1.0, p10: 0.0 };
    pub const EXCITED: OccupationState = OccupationState { p00: 0.0, p10: 1.0 };

    pub fn from_ground(p00: f64) -> Self {
        OccupationState { p00, p10: 1.0 - p00 }
    }

    pub fn as_array(&self) -> [f64; 2] {
        [self.p00, self.p10]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoenergeticCycleSpec {
    /// `N_Φ⁽⁰⁾ = |ω_{B1}| / 2ω` at point 1.
    pub n_phi0: f64,
    pub gamma: f64,
    pub sigma: f64,
    /// Isoentropic expansion coefficient α.
    pub alpha: f64,
    pub orientation: Orientation,
    pub hbar: f64,
    pub system: SystemConfig,
}

impl IsoenergeticCycleSpec {
    /// Natural units, `ħ = ω = m = q = 1`.
    pub fn new(n_phi0: f64, sigma: f64, gamma: f64, alpha: f64, orientation: Orientation) -> Result<Self> {
        IsoenergeticCycleSpec::with_units(n_phi0, sigma, gamma, alpha, orientation, 1.0, SystemConfig::default())
    }

    pub fn from_nc(n_phi0: f64, nc: &NcParams, gamma: f64, alpha: f64, orientation: Orientation) -> Result<Self> {
        IsoenergeticCycleSpec::with_units(n_phi0, nc.sigma()?, gamma, alpha, orientation, nc.hbar, SystemConfig::default())
    }

    pub fn with_units(
        n_phi0: f64,
        sigma: f64,
        gamma: f64,
        alpha: f64,
        orientation: Orientation,
        hbar: f64,
        system: SystemConfig,
    ) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() || !(hbar > 0.0) {
            return Err(Error::domain(
                DomainCode::NonPositiveParameter,
                format!("need alpha > 0 and hbar > 0 (alpha = {alpha}, hbar = {hbar})"),
            ));
        }
        // validates n_phi0, gamma, sigma and omega
        EffectiveField::from_flux_quanta(n_phi0, orientation, gamma, system.omega, sigma)?;
        Ok(IsoenergeticCycleSpec {
            n_phi0,
            gamma,
            sigma,
            alpha,
            orientation,
            hbar,
            system,
        })
    }

    pub fn omega(&self) -> f64 {
        self.system.omega
    }

    pub fn field1(&self) -> EffectiveField {
        EffectiveField {
            omega_b: self.orientation.sign() * 2.0 * self.omega() * self.n_phi0,
            gamma: self.gamma,
            omega: self.omega(),
            sigma: self.sigma,
        }
    }

    pub fn spectrum(&self) -> TwoLevelSpectrum {
        TwoLevelSpectrum::new(&self.field1(), self.orientation, self.system, self.hbar)
    }

    /// Field strength at point 1.
    pub fn b1(&self) -> f64 {
        self.spectrum().field_for_flux_quanta(self.n_phi0)
    }

    /// γ with the orientation sign folded in.
    fn signed_gamma(&self) -> f64 {
        self.orientation.sign() * self.gamma
    }
}

/// `p_{0,0}(B)` along the isoenergetic path through `(b_a, p00_a)`.
fn ground_probability_raw(spectrum: &TwoLevelSpectrum, b: f64, b_a: f64, p00_a: f64) -> f64 {
    let [e00_a, e10_a] = spectrum.energies(b_a);
    let [e00, e10] = spectrum.energies(b);
    let gap = e00 - e10;
    (e10_a - e10) / gap + (e00_a - e10_a) / gap * p00_a
}

/// Occupations at `b` on the isoenergetic trajectory starting from
/// `p00_a` at `b_a`. Fails if the path leaves the probability simplex.
pub fn ground_probability(spectrum: &TwoLevelSpectrum, b: f64, b_a: f64, p00_a: f64) -> Result<OccupationState> {
    let p00 = ground_probability_raw(spectrum, b, b_a, p00_a);
    if !(-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&p00) {
        return Err(Error::domain(
            DomainCode::ProbabilityOutOfRange,
            format!("p00 = {p00} at B = {b} (start B = {b_a}, p00 = {p00_a})"),
        ));
    }
    Ok(OccupationState::from_ground(p00))
}

/// `Σ_k p_k [E_k(b) − E_k(a)]` with frozen populations.
pub fn isoentropic_work_between(field_a: &EffectiveField, field_b: &EffectiveField, populations: [f64; 2], hbar: f64) -> f64 {
    [QuantumLevel::GROUND, QuantumLevel::FIRST_EXCITED]
        .iter()
        .zip(populations)
        .map(|(&lvl, p)| p * (eigenenergy(lvl, field_b, hbar) - eigenenergy(lvl, field_a, hbar)))
        .sum()
}

/// Work done on the system by changing the field from `b_a` to `b_b` at
/// frozen occupations.
pub fn isoentropic_work(spectrum: &TwoLevelSpectrum, start: OccupationState, b_a: f64, b_b: f64) -> f64 {
    isoentropic_work_between(&spectrum.field_at(b_a), &spectrum.field_at(b_b), start.as_array(), spectrum.hbar)
}

/// Heat absorbed on the isoenergetic leg `b_a → b_b`:
/// `−⟨E⟩ ln[(E_{0,0}(b_b) − E_{1,0}(b_b)) / (E_{0,0}(b_a) − E_{1,0}(b_a))]`
/// with `⟨E⟩ = E_{1,0}(b_a) + [E_{0,0}(b_a) − E_{1,0}(b_a)] p_{0,0}(b_a)`.
///
/// Equal to minus the work done on the system along the leg.
pub fn heat_isoenergetic(spectrum: &TwoLevelSpectrum, b_a: f64, b_b: f64, p00_a: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p00_a) {
        return Err(Error::domain(
            DomainCode::ProbabilityOutOfRange,
            format!("starting p00 = {p00_a}"),
        ));
    }
    let [e00_a, e10_a] = spectrum.energies(b_a);
    let [e00_b, e10_b] = spectrum.energies(b_b);
    let (gap_a, gap_b) = (e00_a - e10_a, e00_b - e10_b);
    if gap_a == 0.0 || gap_b == 0.0 {
        return Err(Error::domain(DomainCode::DegenerateGap, "level gap vanishes"));
    }
    let mean_energy = e10_a + gap_a * p00_a;
    Ok(-mean_energy * (gap_b / gap_a).ln())
}

/// An isoenergetic leg as a trajectory for the quadrature oracle.
#[derive(Debug, Clone, Copy)]
pub struct IsoenergeticLeg {
    pub spectrum: TwoLevelSpectrum,
    pub b_a: f64,
    pub b_b: f64,
    pub p00_a: f64,
}

impl TwoLevelTrajectory for IsoenergeticLeg {
    fn energies(&self, b: f64) -> [f64; 2] {
        self.spectrum.energies(b)
    }

    fn energy_slopes(&self, b: f64) -> [f64; 2] {
        self.spectrum.energy_slopes(b)
    }

    fn populations(&self, b: f64) -> [f64; 2] {
        OccupationState::from_ground(ground_probability_raw(&self.spectrum, b, self.b_a, self.p00_a)).as_array()
    }

    fn population_slopes(&self, b: f64) -> [f64; 2] {
        // p00 = (⟨E⟩ − E10) / (E00 − E10), quotient rule
        let [e00_a, e10_a] = self.spectrum.energies(self.b_a);
        let mean = e10_a + (e00_a - e10_a) * self.p00_a;
        let [e00, e10] = self.spectrum.energies(b);
        let [d00, d10] = self.spectrum.energy_slopes(b);
        let gap = e00 - e10;
        let dgap = d00 - d10;
        let dp00 = (-d10 * gap - (mean - e10) * dgap) / (gap * gap);
        [dp00, -dp00]
    }
}

/// Frozen occupations: the isoentropic legs.
#[derive(Debug, Clone, Copy)]
pub struct FrozenOccupation {
    pub spectrum: TwoLevelSpectrum,
    pub state: OccupationState,
}

impl TwoLevelTrajectory for FrozenOccupation {
    fn energies(&self, b: f64) -> [f64; 2] {
        self.spectrum.energies(b)
    }

    fn energy_slopes(&self, b: f64) -> [f64; 2] {
        self.spectrum.energy_slopes(b)
    }

    fn populations(&self, _b: f64) -> [f64; 2] {
        self.state.as_array()
    }

    fn population_slopes(&self, _b: f64) -> [f64; 2] {
        [0.0, 0.0]
    }
}

/// Closed-form isoenergetic expansion coefficient α₁.
pub fn alpha1_closed(spec: &IsoenergeticCycleSpec) -> Result<f64> {
    let w = spec.omega();
    let n = spec.n_phi0;
    let g = spec.signed_gamma();
    if !(n > 0.0) {
        return Err(Error::domain(
            DomainCode::FieldTooWeak,
            "field too weak for isoenergetic expansion (N_Phi = 0)",
        ));
    }
    if w * n + g <= 0.0 {
        return Err(Error::domain(
            DomainCode::TrajectoryCrossesCancellation,
            format!("reversed field below the cancellation point (omega_B/2 = {}, gamma = {})", w * n, spec.gamma),
        ));
    }
    let radicand = g * g + 2.0 * w * g * n + w * w * (n * n - 8.0 * spec.sigma * spec.sigma);
    if radicand < 0.0 {
        return Err(Error::domain(
            DomainCode::FieldTooWeak,
            format!("field too weak for isoenergetic expansion (radicand {radicand:e})"),
        ));
    }
    let denom = (w * w * n * n * radicand).sqrt() - 3.0 * w * g * n;
    if !(denom > 0.0) {
        return Err(Error::domain(
            DomainCode::FieldTooWeak,
            format!("field too weak for isoenergetic expansion (denominator {denom:e})"),
        ));
    }
    Ok((3.0 * w * w * n * n / denom).sqrt())
}

/// Closed-form isoenergetic compression coefficient α₃ given the product
/// `α·α₁` of the preceding expansions.
pub fn alpha3_closed(spec: &IsoenergeticCycleSpec, alpha_alpha1: f64) -> Result<f64> {
    let w = spec.omega();
    let n = spec.n_phi0;
    let g = spec.signed_gamma();
    let s = spec.sigma;
    if !(alpha_alpha1 > 0.0) || !(n > 0.0) {
        return Err(Error::domain(
            DomainCode::NonPositiveParameter,
            format!("need alpha*alpha1 > 0 and N_Phi > 0 (got {alpha_alpha1}, {n})"),
        ));
    }
    let aa2 = alpha_alpha1 * alpha_alpha1;
    let inner = 18.0 * w * aa2 * g * n + 9.0 * w * w * n * n + aa2 * aa2 * (9.0 * g * g + 8.0 * s * s * w * w);
    let radicand = w * w * n * n * inner;
    if !(radicand > 0.0) {
        return Err(Error::domain(
            DomainCode::FieldTooWeak,
            format!("alpha3 radicand {radicand:e} is not positive"),
        ));
    }
    let denom = radicand.sqrt() - w * aa2 * g * n;
    if !(denom > 0.0) {
        return Err(Error::domain(
            DomainCode::FieldTooWeak,
            format!("alpha3 denominator {denom:e} is not positive"),
        ));
    }
    Ok((w * w * n * n / denom).sqrt())
}

/// α₁ from bisection on `E_{0,0}(B1) − E_{1,0}(B1/α₁²)` over [`ALPHA1_BRACKET`].
pub fn alpha1_by_root(spec: &IsoenergeticCycleSpec, settings: &SolverSettings) -> Result<f64> {
    let spectrum = spec.spectrum();
    let b1 = spec.b1();
    let e00_1 = spectrum.energies(b1)[0];
    root_solve(
        |a1| e00_1 - spectrum.energies(b1 / (a1 * a1))[1],
        ALPHA1_BRACKET.0,
        ALPHA1_BRACKET.1,
        settings,
    )
}

/// α₃ from bisection on `E_{0,0}(B3/α₃²) − E_{1,0}(B3)` over [`ALPHA3_BRACKET`].
pub fn alpha3_by_root(spec: &IsoenergeticCycleSpec, alpha_alpha1: f64, settings: &SolverSettings) -> Result<f64> {
    let spectrum = spec.spectrum();
    let b3 = spec.b1() / (alpha_alpha1 * alpha_alpha1);
    let e10_3 = spectrum.energies(b3)[1];
    root_solve(
        |a3| spectrum.energies(b3 / (a3 * a3))[0] - e10_3,
        ALPHA3_BRACKET.0,
        ALPHA3_BRACKET.1,
        settings,
    )
}

/// `Θ(x) = sqrt(1 + (ω_{B1}²/4x⁴ ± γ|ω_{B1}|/x² + γ²)/σ²ω²)`: the level
/// spacing factor after the Landau radius has grown by `x` from point 1.
pub fn theta_function(x: f64, spec: &IsoenergeticCycleSpec) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(
            DomainCode::NonPositiveParameter,
            format!("Theta needs x > 0, got {x}"),
        ));
    }
    let w = spec.omega();
    let wb1 = 2.0 * w * spec.n_phi0;
    let g = spec.signed_gamma();
    let x2 = x * x;
    let inner = wb1 * wb1 / (4.0 * x2 * x2) + g * wb1 / x2 + spec.gamma * spec.gamma;
    Ok((1.0 + inner / (spec.sigma * spec.sigma * w * w)).sqrt())
}

/// `1 − 3 Θ(αα₁)/Θ(1) · ln[Θ(αα₁α₃)/Θ(αα₁)] / ln[Θ(1)/Θ(α₁)]`, with the
/// leg heats and corner data filled in alongside.
pub fn efficiency_isoenergetic(spec: &IsoenergeticCycleSpec) -> Result<CycleResult> {
    let a1 = alpha1_closed(spec)?;
    let aa1 = spec.alpha * a1;
    let a3 = alpha3_closed(spec, aa1)?;

    // compression must start on the monotone side of the cancellation point
    let x3 = spec.omega() * spec.n_phi0 / (aa1 * aa1);
    if x3 + spec.signed_gamma() <= 0.0 {
        return Err(Error::domain(
            DomainCode::TrajectoryCrossesCancellation,
            format!("compression leg starts below the cancellation point (omega_B3/2 = {x3}, gamma = {})", spec.gamma),
        ));
    }

    let t1 = theta_function(1.0, spec)?;
    let t_a1 = theta_function(a1, spec)?;
    let t_aa1 = theta_function(aa1, spec)?;
    let t_aa1a3 = theta_function(aa1 * a3, spec)?;
    let efficiency = 1.0 - 3.0 * (t_aa1 / t1) * (t_aa1a3 / t_aa1).ln() / (t1 / t_a1).ln();

    let spectrum = spec.spectrum();
    let b1 = spec.b1();
    let b2 = b1 / (a1 * a1);
    let b3 = b2 / (spec.alpha * spec.alpha);
    let b4 = b3 / (a3 * a3);
    let q_in = heat_isoenergetic(&spectrum, b1, b2, 1.0)?;
    let q_out = heat_isoenergetic(&spectrum, b3, b4, 0.0)?;

    let fields = [b1, b2, b3, b4].map(|b| spectrum.field_at(b));
    let mut warnings = Vec::new();
    if spec.alpha <= 1.0 {
        warnings.push(CycleWarning::CompressionRegime);
    }
    if efficiency < 0.0 {
        warnings.push(CycleWarning::NegativeEfficiency);
    }
    Ok(CycleResult {
        q_in,
        q_out,
        work: q_in + q_out,
        efficiency,
        field_points: fields.map(|f| f.omega_b),
        flux_factors: fields.map(|f| f.flux_factor()),
        alpha1: Some(a1),
        alpha3: Some(a3),
        warnings,
    })
}

/// `1 − 1/α²`, the strong-field limit of the isoenergetic efficiency.
pub fn asymptotic_efficiency(alpha: f64) -> f64 {
    1.0 - 1.0 / (alpha * alpha)
}
