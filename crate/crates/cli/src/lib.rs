//! File formats and report rendering for the `arbopack` command line.
//!
//! The library half owns the JSON instance/packing documents and the
//! conversion of index-based core reports into name-based, canonically
//! ordered JSON, so the binary stays a thin dispatcher and tests can reuse
//! everything.

pub mod instance;
pub mod render;

use arbopack_core::Error as CoreError;

/// Process exit codes shared by every subcommand.
pub mod exit {
    /// Parse, usage, or validation problem with the inputs.
    pub const USAGE: i32 = 2;
    /// An exhaustive scan exceeded its configured cap.
    pub const CAPACITY: i32 = 3;
    /// A state the underlying theory forbids: always a bug report.
    pub const INTERNAL: i32 = 4;
}

/// Maps core errors onto the exit-code contract.
pub fn exit_code_for(err: &CoreError) -> i32 {
    match err {
        CoreError::EnumerationLimit { .. } | CoreError::OracleCaps(_) => exit::CAPACITY,
        CoreError::Internal(_) => exit::INTERNAL,
        _ => exit::USAGE,
    }
}
