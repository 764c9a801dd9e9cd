use thiserror::Error;

/// Errors produced by space construction, enumeration, and Ext lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("antisymmetry violated: {a} <= {b} and {b} <= {a} with {a} != {b}")]
    Cycle { a: String, b: String },

    #[error("unknown element {name:?}")]
    UnknownElement { name: String },

    #[error("duplicate element {name:?}")]
    DuplicateElement { name: String },

    #[error("space has {points} points; enumeration capped at {cap} (raise with --size-cap)")]
    SizeCapExceeded { points: usize, cap: usize },

    #[error("ext({degree}, {source_atom}, {target_atom}) is symbolic (unknown) and was consulted")]
    UnknownExtRead {
        degree: u32,
        source_atom: String,
        target_atom: String,
    },

    #[error("ext({degree}, {source_atom}, {target_atom}) is not flagged eventually constant")]
    NonConstantUnsupported {
        degree: u32,
        source_atom: String,
        target_atom: String,
    },

    #[error("descriptor is invalid: {reason}")]
    UnsupportedDescriptor { reason: String },

    #[error("quiver parse error at line {line}: {reason}")]
    QuiverParse { line: usize, reason: String },

    #[error("operation not supported for symbolic spaces")]
    UnsupportedForSymbolic,
}

pub type Result<T> = std::result::Result<T, Error>;
