//! Library side of the `recdet` command: sweep configuration, the sweep
//! runner and report, and the `seq`/`det` commands.

pub mod commands;
pub mod config;
pub mod sweep;
