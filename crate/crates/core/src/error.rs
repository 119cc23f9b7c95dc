//! Error type shared across the crate.
//!
//! Contract violations that only buggy calling code can trigger (mismatched
//! genome lengths, out-of-range block indices, non-monotone trajectory
//! appends) panic instead; `Error` covers everything a user can cause
//! through parameters, config files, or the filesystem.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Benchmark parameters violate a divisibility or range constraint.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// The closed-form Pareto front formula only holds for k <= n/m.
    #[error("front formula requires k <= n/m, got k={k}, n={n}, m={m}")]
    FrontRegime { n: usize, m: usize, k: usize },

    /// Full enumeration is capped at 2^24 genomes.
    #[error("brute force enumeration requires n <= {max}, got n={n}")]
    BruteForceTooLarge { n: usize, max: usize },

    /// Algorithm parameters are out of range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A config file line could not be parsed.
    #[error("config error: {0}")]
    Config(String),

    /// Two summaries cannot be compared.
    #[error("summaries are not comparable: {0}")]
    MismatchedConfigs(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
