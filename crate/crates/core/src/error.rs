use thiserror::Error;

use crate::freealg::Gen;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("strand count {0} must be even and at least 2")]
    OddStrands(usize),

    #[error("letter {letter} out of range for {strands} strands (allowed 1..={max})", max = strands - 1)]
    LetterOutOfRange { letter: i64, strands: usize },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: &'static str, right: &'static str },

    #[error("no assignment for generator {0}")]
    MissingAssignment(Gen),

    #[error("no grading for generator {0}")]
    MissingGrading(Gen),

    #[error("grading modulus {0} is odd; signs are not well defined")]
    OddGradingModulus(u32),

    #[error("plat closure has {components} components; only knots are supported")]
    NotAKnot { components: usize },

    #[error("disk enumeration for {generator} exceeded {limit} partial disks")]
    DiskGuard { generator: Gen, limit: usize },

    #[error("generator {0} has no operator assigned")]
    UnassignedGenerator(Gen),

    #[error("augmentation search aborted: {0}")]
    SearchAborted(String),

    #[error("unknown knot `{0}`")]
    UnknownKnot(String),

    #[error("malformed knot file: {0}")]
    KnotFile(String),
}
