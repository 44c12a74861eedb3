//! Command-line driver, JSON export and the end-to-end verification
//! pipeline on top of `thetalie-core`.

pub mod cli;
pub mod export;
pub mod pipeline;
pub mod quartic;
pub mod tables;
