use thiserror::Error;

use crate::bass::BassReport;
use crate::sequence::SequenceReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element id must be nonempty")]
    EmptyElementId,
    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate cover ({0}, {1})")]
    DuplicateCover(String, String),
    #[error("cycle detected through `{0}`")]
    Cycle(String),
    #[error("redundant cover ({lower}, {upper}): `{middle}` lies strictly between")]
    RedundantCover {
        lower: String,
        upper: String,
        middle: String,
    },

    #[error("`{0}` and `{1}` are equal")]
    EqualElements(String, String),
    #[error("`{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("no member of the subset lies below `{0}`")]
    NothingBelow(String),

    #[error("value list has {got} entries, poset has {expected} elements")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operands live on different posets")]
    PosetMismatch,
    #[error("not a Bass function: {0}")]
    NotBass(BassReport),
    #[error("function is not {0}-Bass")]
    LevelExceeded(u32),
    #[error("poset is not local")]
    NotLocal,
    #[error("poset has height 0")]
    ZeroHeight,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("`{0}` is not in Assh")]
    NotInAssh(String),

    #[error("invalid Bass sequence: {0}")]
    InvalidSequence(SequenceReport),

    #[error("witness level must be 1 or 2, got {0}")]
    InvalidWitnessLevel(u32),
    #[error("deformation target must be 1 or 2, got {0}")]
    InvalidDeformTarget(u32),
    #[error("cannot deform at `{element}`: depth {depth} is below target {target}")]
    DeformBelowTarget {
        element: String,
        depth: String,
        target: u32,
    },
    #[error("`{0}` is outside the profile's support")]
    OutsideSupport(String),
    #[error("no witness reaches value {value} at `{element}`")]
    NoWitness { element: String, value: String },
    #[error("value {value} at `{element}` is outside {{0, 1, 2, inf}}")]
    ValueOutOfRange { element: String, value: String },

    #[error("malformed input: {0}")]
    Parse(String),
    #[error("file refers to poset `{found}`, expected `{expected}`")]
    PosetNameMismatch { expected: String, found: String },
    #[error("missing value for `{0}`")]
    MissingValue(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
