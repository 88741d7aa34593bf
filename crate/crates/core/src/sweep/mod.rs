//! Parameter sweeps over cycle grids and their CSV output.

mod config;
mod csv;
mod run;

pub use config::{parse_config, AlphaRange, CycleKind, SweepConfig};
pub use csv::{csv_string, emit_csv, format_g12, write_csv, CSV_HEADER};
pub use run::{evaluate_point, run_sweep, sweep_points, SweepPoint, SweepRow, Units};

use crate::error::{Error, Result};
use crate::nc::Orientation;

/// Field ratios, products θη and shifts γ of the published efficiency plots.
pub const FIGURE_N_PHI0: [f64; 3] = [4.0, 10.0, 100.0];
pub const FIGURE_THETA_ETA: [f64; 3] = [0.0, 0.1, 0.5];
pub const FIGURE_GAMMA: [f64; 2] = [0.1, 0.5];

fn figure_config(cycle: CycleKind, orientation: Orientation) -> SweepConfig {
    let mut c = SweepConfig::new(cycle, FIGURE_N_PHI0.to_vec());
    c.orientation = orientation;
    c.theta_eta = FIGURE_THETA_ETA.to_vec();
    c.gamma = FIGURE_GAMMA.to_vec();
    c
}

/// Sweeps behind figure `id`, each with the file stem it is written to.
///
/// 2: isomagnetic, 3: isoenergetic, 4: both cycles with the field reversed.
pub fn figure_configs(id: u32) -> Result<Vec<(&'static str, SweepConfig)>> {
    use CycleKind::*;
    use Orientation::*;
    Ok(match id {
        2 => vec![("fig2_isomagnetic", figure_config(Isomagnetic, Positive))],
        3 => vec![("fig3_isoenergetic", figure_config(Isoenergetic, Positive))],
        4 => vec![
            ("fig4_isomagnetic_reversed", figure_config(Isomagnetic, Reversed)),
            ("fig4_isoenergetic_reversed", figure_config(Isoenergetic, Reversed)),
        ],
        other => return Err(Error::Validation(format!("no figure {other}; expected 2, 3 or 4"))),
    })
}
