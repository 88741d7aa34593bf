//! Deformation parameters, the Seiberg–Witten map and the exact spectrum of
//! a charged particle in a cylindrical trap on the noncommutative plane.

mod params;
mod seiberg_witten;
mod spectrum;

pub use params::{compute_sigma, landau_radius, NcParams, Orientation, SystemConfig};
pub use seiberg_witten::{
    effective_coefficients, gamma_effective, sw_constants, EffectiveCoefficients, SwConstants,
};
pub use spectrum::{
    eigenenergy, eigenenergy_slope, flux_factor, EffectiveField, QuantumLevel, TwoLevelSpectrum,
};
