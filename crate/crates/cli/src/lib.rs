//! Command-line front end: JSON configs, the extended-oscillator example, and
//! table output for each subcommand.

pub mod commands;
pub mod config;
pub mod table;
