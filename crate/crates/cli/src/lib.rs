//! Library half of the `qjacobi` command-line tool: report formatting,
//! published reference values, and the sweep engine.  The binary in
//! `main.rs` is a thin argument-parsing shell over these modules.

pub mod reference;
pub mod report;
pub mod sweep;
