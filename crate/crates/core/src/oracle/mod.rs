//! Brute-force monomial-ideal machinery in four variables.
//!
//! Nothing here knows about reductions, cell complexes or closed formulas;
//! it exists to check them.

mod homology;
mod ideal;

mod betti;
mod hilbert;

pub use betti::{graded_betti, multigraded_betti};
pub use hilbert::{hilbert_function, hilbert_polynomial, HilbertData};
pub use ideal::{bdl_check, power_ideal, tetrahedral_ideal, MonomialIdeal};

/// Resource limits for the enumerative routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest generator count accepted by the Betti computation.
    pub max_generators: usize,
    /// Largest degree at which the Hilbert function is enumerated.
    pub max_degree: u32,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_generators: 64,
            max_degree: 60,
        }
    }
}
