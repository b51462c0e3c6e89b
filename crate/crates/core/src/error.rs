use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bound exceeded: {what} is {got}, limit {limit}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("element {0:#b} is not an atom")]
    InvalidAtom(u32),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("homomorphism is not injective")]
    NotMono,
    #[error("map is not continuous: preimage of {0:#b} is not open")]
    NotContinuous(u64),
    #[error("subset {0:#b} is not dense")]
    NotDense(u64),
    #[error("Boolean axiom violated: {0}")]
    AxiomViolation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a z-algebra: element {0:#b} is missed by every point")]
    NotZAlgebra(u32),
    #[error("not a subalgebra of the common ambient algebra: {0}")]
    NotSubalgebra(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("the zero element has no density witness")]
    EmptyElement,
    #[error("the zero point lies outside the parity clopen's domain")]
    ZeroPoint,
    #[error("algebra is not admissible: {0}")]
    NotAdmissible(String),
    #[error("object is outside the required subcategory: {0}")]
    WrongSubcategory(String),
    #[error("functor {functor} does not apply to {kind}")]
    WrongCategory { functor: String, kind: String },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
