//! IO, file formats, configuration and the experiment harness around
//! `subdiv-core`. The binary in `main.rs` is a thin wrapper over this.

pub mod config;
pub mod experiment;
pub mod io;
