use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence prefix must contain at least one term")]
    EmptyPrefix,
    #[error("term a_{index} is not strictly positive")]
    NonPositiveTerm { index: usize },
    #[error("ratio k = {k} must exceed 1")]
    RatioNotAboveOne { k: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("splitting factors at node {node} rejected: {reason}")]
    InvalidSplitting { node: u64, reason: String },
    #[error("local identity a_(2n-1) + a_(2n) = k a_n fails at n = {index}")]
    LocalIdentityViolated { index: usize },
    #[error("root relation a_2 = (k-1) a_1 fails")]
    RootRelationViolated,
    #[error("no splitting factors stored for node {node}")]
    MissingFactor { node: u64 },
    #[error("node {n} lies outside the tree rooted at 2")]
    NodeOutsideTree { n: u64 },
    #[error("the zero polynomial cannot generate a positive sequence")]
    ZeroPolynomial,
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
