use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("facet {facet:?} is empty")]
    EmptyFacet { facet: usize },
    #[error("invalid vertex token {0:?}")]
    InvalidToken(String),
    #[error("vertex {token} repeated in facet {facet:?}")]
    DuplicateVertexInFacet { facet: Vec<String>, token: String },
    #[error("facet {inner:?} is contained in facet {outer:?}")]
    NonMaximalFacet { inner: Vec<String>, outer: Vec<String> },
    #[error("dimension {k} outside {min}..={max}")]
    DimensionOutOfRange { k: i64, min: i64, max: i64 },
    #[error("{0:?} is not a face")]
    NotAFace(Vec<String>),
    #[error("{0:?} is not a facet")]
    NotAFacet(Vec<String>),
    #[error("subcomplex is not induced")]
    NotInduced,
    #[error("vertex {0} appears on both sides")]
    VertexCollision(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex {0} already exists")]
    VertexExists(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not a weak pseudomanifold")]
    NotWeakPm,
    #[error("complex is not a weak pseudomanifold with boundary")]
    NotWeakPmWithBoundary,
    #[error("complex is not a normal pseudomanifold")]
    NotNormalPm,
    #[error("complex is not a closed 2-manifold")]
    NotA2Manifold,
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("vertex {token} has degree {degree}, expected {expected}")]
    WrongDegree { token: String, degree: usize, expected: usize },
    #[error("link of vertex {0} is not a standard sphere")]
    LinkNotStandardSphere(String),
    #[error("vertex set of the link of {0} is already a face")]
    LinkSpansFace(String),
    #[error("bijection is not between disjoint facets")]
    NotDisjointFacets,
    #[error("bijection is not admissible: {from} and {to} are at distance < 3")]
    NotAdmissible { from: String, to: String },
    #[error("vertex set does not induce a standard sphere of codimension one")]
    NotInducedStandardSphere,
    #[error("induced sphere is not two-sided")]
    NotTwoSided,
    #[error("first ball is not a subcomplex with matching facets")]
    NotSubcomplex,
    #[error("ball boundaries do not match")]
    BoundaryMismatch,
    #[error("interior vertex {0} of the inserted ball already exists")]
    InteriorVertexCollision(String),
    #[error("invalid stack selector at step {step}")]
    SelectorInvalid { step: usize },
    #[error("complex is not a stacked sphere")]
    NotStacked,
    #[error("{n} vertices exceed the exhaustive search limit of {limit}")]
    TooLargeForExhaustiveSearch { n: usize, limit: usize },
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(&'static str),
}
