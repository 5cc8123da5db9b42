//! Exact computations around Stickelberger elements for the rational function field:
//! group-ring valued L-series over F_q[t], Hecke operators on F_q[t]-lattices and the
//! torsion algebra of the Carlitz module.

pub mod battery;
pub mod carlitz;
pub mod error;
pub mod fieldcore;
pub mod groupring;
pub mod heckelat;
pub mod json;
pub mod lseries;
pub mod report;

pub use error::{Error, Result};
