//! Carnot bound. It depends on the reservoir temperatures only, so the
//! noncommutative parameters cannot move it.

use crate::error::{DomainCode, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarnotSpec {
    pub t_cold: f64,
    pub t_hot: f64,
}

impl CarnotSpec {
    pub fn new(t_cold: f64, t_hot: f64) -> Result<Self> {
        let spec = CarnotSpec { t_cold, t_hot };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if !(self.t_cold > 0.0) || !(self.t_hot > 0.0) {
            return Err(Error::domain(
                DomainCode::NonPositiveTemperature,
                format!("temperatures must be positive (T_C = {}, T_H = {})", self.t_cold, self.t_hot),
            ));
        }
        if self.t_cold > self.t_hot {
            return Err(Error::domain(
                DomainCode::TemperatureOrder,
                format!("need T_C <= T_H (T_C = {}, T_H = {})", self.t_cold, self.t_hot),
            ));
        }
        Ok(())
    }
}

/// `1 − T_C / T_H`.
pub fn carnot_efficiency(spec: &CarnotSpec) -> Result<f64> {
    spec.validate()?;
    Ok(1.0 - spec.t_cold / spec.t_hot)
}

/// Points `(θη, γ)` to scan.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct NcGrid {
    pub theta_eta: Vec<f64>,
    pub gamma: Vec<f64>,
}

impl NcGrid {
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.theta_eta
            .iter()
            .flat_map(move |&te| self.gamma.iter().map(move |&g| (te, g)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceEntry {
    pub theta_eta: f64,
    pub gamma: f64,
    pub efficiency: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct InvarianceReport {
    pub entries: Vec<InvarianceEntry>,
    /// `max − min` of the efficiencies; zero for an empty grid.
    pub spread: f64,
}

/// Evaluates the Carnot efficiency at every grid point. The NC values are
/// carried along in the report but never enter the formula.
pub fn nc_invariance_scan(spec: &CarnotSpec, grid: &NcGrid) -> Result<InvarianceReport> {
    let entries: Vec<InvarianceEntry> = grid
        .points()
        .map(|(theta_eta, gamma)| {
            carnot_efficiency(spec).map(|efficiency| InvarianceEntry {
                theta_eta,
                gamma,
                efficiency,
            })
        })
        .collect::<Result<_>>()?;
    let (lo, hi) = entries
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), e| (lo.min(e.efficiency), hi.max(e.efficiency)));
    let spread = if entries.is_empty() { 0.0 } else { hi - lo };
    Ok(InvarianceReport { entries, spread })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(carnot_efficiency(&CarnotSpec::new(300.0, 600.0).unwrap()).unwrap(), 0.5);
        assert_eq!(carnot_efficiency(&CarnotSpec::new(5.0, 5.0).unwrap()).unwrap(), 0.0);
        let e = carnot_efficiency(&CarnotSpec::new(1e-9, 1.0).unwrap()).unwrap();
        assert!(e < 1.0 && e > 1.0 - 1e-8);
    }

    #[test]
    fn rejects_bad_temperatures() {
        assert_eq!(CarnotSpec::new(0.0, 1.0).unwrap_err().code(), "non_positive_temperature");
        assert_eq!(CarnotSpec::new(1.0, f64::NAN).unwrap_err().code(), "non_positive_temperature");
        assert_eq!(CarnotSpec::new(2.0, 1.0).unwrap_err().code(), "temperature_order");
        let raw = CarnotSpec { t_cold: 2.0, t_hot: 1.0 };
        assert!(carnot_efficiency(&raw).is_err());
    }

    #[test]
    fn scan_has_zero_spread() {
        let spec = CarnotSpec::new(1.0, 2.0).unwrap();
        let grid = NcGrid {
            theta_eta: vec![0.0, 0.5],
            gamma: vec![0.0, 0.5],
        };
        let r = nc_invariance_scan(&spec, &grid).unwrap();
        assert_eq!(r.entries.len(), 4);
        assert!(r.entries.iter().all(|e| e.efficiency == 0.5));
        assert_eq!(r.spread, 0.0);
    }

    #[test]
    fn empty_grid() {
        let r = nc_invariance_scan(&CarnotSpec::new(1.0, 2.0).unwrap(), &NcGrid::default()).unwrap();
        assert!(r.entries.is_empty());
        assert_eq!(r.spread, 0.0);
    }
}
