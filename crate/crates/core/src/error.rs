use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("support mismatch: {left} vs {right}")]
    SupportMismatch { left: usize, right: usize },

    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("relation is not a strict order")]
    NotStrictOrder,

    #[error("relation is not a series parallel interval order")]
    NotSpio,

    #[error("poset is not in preorder (canonical) labelling")]
    NotCanonical,

    #[error("relation R ∪ Z has a cycle; no preorder linear extension exists")]
    CyclicPreorder,

    #[error("principal filters are not linearly ordered by inclusion")]
    FiltersNotNested,

    #[error("round trip through the inverse bijection failed")]
    RoundTrip,

    #[error("permutation {0} contains the pattern 312")]
    Not312Avoiding(String),

    #[error("{0}")]
    NotALattice(String),

    #[error("parse error: {0}")]
    Parse(String),
}
