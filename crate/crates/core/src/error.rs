use thiserror::Error;

use crate::curve::{Facet, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse weight vector: {0}")]
    Parse(String),

    #[error("operation is undefined for the trivial curve")]
    TrivialCurve,

    #[error("facet {facet} cannot be reduced on {weights}")]
    NotReducible { facet: Facet, weights: WeightVector },

    #[error("{0} is not S-minimal")]
    NotSMinimal(WeightVector),

    #[error("cross-check failed: {0}")]
    Inconsistent(String),

    #[error("oracle cap `{cap}` exceeded (limit {limit}, needed {needed})")]
    CapExceeded {
        cap: &'static str,
        limit: u64,
        needed: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
