//! Quantum heat engines built on a charged particle in a cylindrical trap
//! whose phase space is noncommutative.
//!
//! The crate provides the deformed spectrum, the isomagnetic, isoenergetic
//! and Carnot cycles, independent numerical oracles for every closed form,
//! and the sweep machinery behind the `ncq` command-line tool.

// `!(x > 0.0)` guards reject NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Index loops follow the tensor notation of the small matrices.
#![allow(clippy::needless_range_loop)]

pub mod carnot;
pub mod check;
pub mod cycle;
pub mod error;
pub mod isoenergetic;
pub mod isomagnetic;
pub mod nc;
pub mod oracle;
pub mod sweep;

pub use carnot::{carnot_efficiency, nc_invariance_scan, CarnotSpec, InvarianceReport, NcGrid};
pub use cycle::{CycleResult, CycleWarning};
pub use error::{DomainCode, Error, Result};
pub use isoenergetic::{
    alpha1_by_root, alpha1_closed, alpha3_by_root, alpha3_closed, asymptotic_efficiency,
    efficiency_isoenergetic, heat_isoenergetic, IsoenergeticCycleSpec,
};
pub use isomagnetic::{efficiency_isomagnetic, heat_cold, heat_hot, IsomagneticCycleSpec};
pub use nc::{
    EffectiveField, NcParams, Orientation, QuantumLevel, SystemConfig, TwoLevelSpectrum,
};
pub use oracle::SolverSettings;
pub use sweep::{parse_config, run_sweep, CycleKind, SweepConfig, SweepRow};
pub use check::{self_check, CheckReport};
