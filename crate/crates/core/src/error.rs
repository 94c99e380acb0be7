use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised while building, analysing or compiling posets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid element name `{0}`")]
    InvalidName(String),

    #[error("element id {id} out of range for {size} elements")]
    IdOutOfRange { id: usize, size: usize },

    #[error("cover {0} -> {1} is a self loop")]
    SelfLoop(String, String),

    #[error("cover {0} -> {1} declared twice")]
    DuplicateCover(String, String),

    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),

    #[error("cover {0} -> {1} is implied transitively; input is not a Hasse diagram")]
    NotTransitivelyReduced(String, String),

    #[error("empty poset has no bottom element")]
    EmptyPoset,

    #[error("not a lattice: {x} and {y} have {minimal} minimal {bound} bounds")]
    NotALattice {
        x: String,
        y: String,
        bound: &'static str,
        minimal: usize,
    },

    #[error("lattice is not semimodular: {x} covers {x} ∧ {y} but {x} ∨ {y} does not cover {y}")]
    NotSemimodular { x: String, y: String },

    #[error("join-irreducible order is not a permutation of the join-irreducible elements")]
    InvalidOrder,

    #[error("join-irreducible order is incompatible with the lattice: {lower} ≤ {upper} but {lower} is named after {upper}")]
    IncompatibleOrder { lower: String, upper: String },

    #[error("labeling has {got} labels but the poset has {want} cover edges")]
    LabelCount { got: usize, want: usize },

    #[error("{0} -> {1} is not a cover edge")]
    NotACover(String, String),

    #[error("edge {0} -> {1} labeled twice")]
    DuplicateLabel(String, String),

    #[error("edge {0} -> {1} has no label")]
    MissingLabel(String, String),

    #[error("labeling is not injective: label {0} used more than once")]
    NonInjective(i64),

    #[error("statement {index}: target and source are both {id}")]
    TargetIsSource { index: usize, id: usize },

    #[error("vector width {got} does not match program width {want}")]
    WidthMismatch { got: usize, want: usize },

    #[error("integer overflow during evaluation")]
    Overflow,

    #[error("{0}")]
    InvalidParameter(String),
}
