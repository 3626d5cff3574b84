use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed simplex: {0}")]
    MalformedSimplex(String),

    #[error("empty complex: at least one facet is required")]
    EmptyComplex,

    #[error("invalid vertex token {0:?}: tokens must be nonempty and contain no whitespace")]
    InvalidToken(String),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("complex is not equivariant: generator g{generator} maps facet {facet} to non-facet {image}")]
    NotEquivariant {
        generator: usize,
        facet: String,
        image: String,
    },

    #[error("non-simplicial quotient: {0}")]
    NonSimplicialQuotient(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("catalog data error: {0}")]
    CatalogData(String),

    #[error("unknown catalog id {0:?}")]
    UnknownCatalogId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
