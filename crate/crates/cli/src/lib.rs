//! Library surface of the verification CLI: config parsing, fixture file
//! formats, report schemas, and the command implementations. The binary in
//! `main.rs` is a thin argument-parsing shell over this.

pub mod commands;
pub mod config;
pub mod fileio;
pub mod report;

/// Exit status contract: 0 = all checks passed, 1 = a mathematical check
/// failed, 2 = configuration or input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    CheckFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::CheckFailed => 1,
        }
    }
}
