//! Command-line front end for the `eulerian` library: family generation,
//! property checks, verification sweeps, and oracle runs, with text, JSON,
//! and CSV reports behind stable exit codes.

pub mod app;
pub mod report;
