use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G2Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero vector has no coroot")]
    ZeroVector,
    #[error("({0},{1}) is not a root of G2")]
    NotARoot(i64, i64),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("rescaling factors must be nonzero")]
    ZeroScale,
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not contained in the Borel subalgebra")]
    NotInBorel,
    #[error("subspace is not contained in the positive nilradical")]
    NotInNilradical,
    #[error("Cartan subspace is not admissible for this root subset: {0}")]
    InadmissibleCartan(String),
    #[error("not an sl2-triple: {0}")]
    NotATriple(String),
    #[error("ad(f) has a non-integer or out-of-range weight")]
    NonIntegerWeight,
    #[error("parse error at position {pos}: expected {expected}, found {found}")]
    Parse {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("catalog error: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, G2Error>;
