//! Command-line front end for the [`nir_dehaze`] library.
//!
//! The binary exposes four workflows:
//!
//! * `dehaze` — restore a hazy visible image guided by its NIR capture,
//! * `colorize` — transfer the visible palette onto the NIR image,
//! * `synthesize` — add haze to a clean image from a depth map,
//! * `evaluate` — score a restored image with the masked metric protocol.
//!
//! All images travel as PNG. This crate owns the file formats, the flat
//! `key = value` configuration layer and exit-code policy; every numeric
//! decision lives in the library.

pub mod cli;
pub mod config;
pub mod io;
pub mod run;

pub use cli::Cli;
pub use config::Settings;
pub use run::run;

/// Failure modes of a CLI invocation, split by exit code.
///
/// Usage problems (exit 1) are mistakes in how the tool was invoked:
/// unknown configuration keys, malformed values, missing flags. Runtime
/// problems (exit 2) are failures while executing a well-formed request:
/// unreadable files, dimension mismatches, degenerate inputs.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// The invocation itself is malformed.
    #[error("{0}")]
    Usage(String),
    /// The invocation was valid but execution failed.
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn runtime(msg: impl Into<String>) -> Self {
        CliError::Runtime(msg.into())
    }

    /// Process exit code for this failure: 1 for usage, 2 for runtime.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

impl From<nir_dehaze::Error> for CliError {
    fn from(err: nir_dehaze::Error) -> Self {
        CliError::Runtime(err.to_string())
    }
}
