//! Table reproduction, oracle validation, parameter sweeps and output
//! formatting.

pub mod format;
pub mod sweep;
pub mod tables;
pub mod validate;

pub use format::{render, sig10, Cell, Frame, OutputFormat};
pub use sweep::{emit_sweep, SweepSpec, SweepVariable};
pub use tables::{reproduce_table, Method, RowStatus, TableRow, TableSpec};
pub use validate::{validate_all, ValidationSection};
