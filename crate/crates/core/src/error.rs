use thiserror::Error;

use crate::phase::Phase;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator {0} is not a permutation of 0..{1}")]
    NotAPermutation(usize, usize),
    #[error("group closure exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map is not a group homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("{0} is not an {1}-th root of unity")]
    NotRootOfUnity(Phase, usize),
    #[error("cochain lives on a different group")]
    GroupMismatch,
    #[error("cochain is not normalized at {0:?}")]
    NotNormalized(Vec<usize>),
    #[error("not a 3-cocycle (defect at {0:?})")]
    NotCocycle([usize; 4]),
    #[error("monomials have different contexts or degrees")]
    MonomialMismatch,
    #[error("result leaves the monomial class: {0}")]
    LeavesMonomialClass(String),
    #[error("order exceeds the guaranteed bound {0}")]
    BoundExceeded(u64),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("group order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("invalid matched pair: {0}")]
    MatchedPair(String),
    #[error("incompatible (sigma, tau): {0}")]
    IncompatibleDatum(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
