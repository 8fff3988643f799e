//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which tracial-state invariant a candidate violates, with a witness.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceViolation {
    /// Values on the units do not sum to 1.
    Normalization { total: String },
    /// `values(inverse(a)) != conj(values(a))`.
    Hermitian { arrow: String },
    /// `values(ab) != values(ba)` for a composable pair in both orders.
    TraceProperty { left: String, right: String },
    /// The Gram matrix of the trace has a negative eigenvalue.
    Positivity { min_eigenvalue: f64 },
}

impl std::fmt::Display for TraceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TraceViolation::Normalization { total } => {
                write!(f, "normalization (unit values sum to {total})")
            }
            TraceViolation::Hermitian { arrow } => {
                write!(f, "hermitian symmetry at `{arrow}`")
            }
            TraceViolation::TraceProperty { left, right } => {
                write!(f, "trace property at pair (`{left}`, `{right}`)")
            }
            TraceViolation::Positivity { min_eigenvalue } => {
                write!(f, "positivity (Gram eigenvalue {min_eigenvalue})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    // ---- groupoid construction and validation ----
    #[error("unit space is empty")]
    EmptyUnitSpace,
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("identifier `{0}` contains the reserved separator '|'")]
    ReservedSeparator(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("unit axiom violated at `{0}`")]
    UnitAxiom(String),
    #[error("inverse axiom violated at `{0}`")]
    InverseAxiom(String),
    #[error("source/range axiom violated at `{arrow}`: {detail}")]
    SourceRangeAxiom { arrow: String, detail: String },
    #[error("composition axiom violated at (`{left}`, `{right}`): {detail}")]
    CompositionAxiom {
        left: String,
        right: String,
        detail: String,
    },
    #[error("non-associative triple (`{0}`, `{1}`, `{2}`)")]
    NonAssociative(String, String, String),
    #[error("group law violated: {0}")]
    GroupLaw(String),
    #[error("action law violated: {0}")]
    ActionLaw(String),

    // ---- derived structures ----
    #[error("`{0}` is not a unit")]
    NotAUnit(String),
    #[error("not a bisection: {0}")]
    NotABisection(String),
    #[error("unit `{0}` is not in the source set of the bisection")]
    OutsideBisectionSource(String),
    #[error("unit subset is not invariant: arrow `{0}` leaves it")]
    NotInvariantSubset(String),

    // ---- algebra ----
    #[error("elements live on different groupoids")]
    GroupoidMismatch,

    // ---- measures ----
    #[error("weight at `{0}` is negative")]
    NegativeWeight(String),
    #[error("weights sum to {0}, expected 1")]
    NotAProbability(String),
    #[error("measure is not invariant: arrow `{arrow}` connects weights {at_source} and {at_range}")]
    NotInvariantMeasure {
        arrow: String,
        at_source: String,
        at_range: String,
    },
    #[error("weight {0} is not a rational within tolerance")]
    IrrationalWeight(f64),

    // ---- traces ----
    #[error("not a tracial state: {0}")]
    NotATrace(TraceViolation),
    #[error("trace value at unit `{arrow}` is not a nonnegative real ({value})")]
    BadUnitValue { arrow: String, value: String },

    // ---- fixed-point trace decompositions ----
    #[error("decomposition parts do not sum to the element (first mismatch at `{0}`)")]
    PartsDoNotSum(String),
    #[error("part {part} is not supported in its bisection (arrow `{arrow}`)")]
    PartOutsideBisection { part: usize, arrow: String },

    // ---- block decomposition ----
    #[error("degenerate spectrum after {0} retries (tolerance too coarse for this algebra)")]
    DegenerateSpectrum(usize),
    #[error("block decomposition invariant failed: {0}")]
    BlockInvariant(String),

    // ---- serialization ----
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("`{value}` is not a rational number (at `{key}`)")]
    BadRational { key: String, value: String },
    #[error("{0}")]
    Format(String),
}
