//! Command-line front-end for `tcalg-core`: bounds with certificates,
//! verification sweeps, normal forms, Poincaré polynomials and generating
//! functions, rendered as text or as a single JSON document.

pub mod commands;
pub mod report;

use std::fmt;

pub use commands::{
    cmd_bounds, cmd_genfun, cmd_normal_form, cmd_oracle, cmd_poincare, cmd_verify, Bundle, Outcome,
    SweepSpec,
};
pub use report::Envelope;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default cap on verification sweep size; `TCALG_MAX_CELLS` overrides it.
pub const DEFAULT_MAX_CELLS: usize = 500;

/// Process exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Usage = 2,
    VerificationFailed = 3,
    ResourceLimit = 4,
}

#[derive(Debug)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { exit: Exit::Usage, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<tcalg_core::Error> for CliError {
    fn from(e: tcalg_core::Error) -> Self {
        use tcalg_core::Error as E;
        let exit = match &e {
            E::ResourceLimit { .. } => Exit::ResourceLimit,
            E::CertificateFailure { .. } => Exit::VerificationFailed,
            _ => Exit::Usage,
        };
        CliError { exit, message: e.to_string() }
    }
}
