//! Reports, sweeps and renderings behind the `ckh2` binary.

pub mod diagram;
pub mod report;
pub mod sweep;
pub mod table;
