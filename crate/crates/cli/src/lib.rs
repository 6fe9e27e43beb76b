//! Library side of the `chisel` binary: exact output serialization and the
//! reproduction harness. Kept as a library so integration tests can drive
//! the harness directly.

pub mod output;
pub mod reproduce;
