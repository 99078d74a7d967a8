//! Analysis tools built on the group ring: units of `F_2[D∞]`, free-product
//! witnesses, product multiplicities, a dihedral length measure and bounded
//! unit search.

mod mirowicz;
mod products;
mod search;

pub use mirowicz::{check_free_product_words, mirowicz_e, FreeProductReport};
pub use products::{unique_products, MultiplicityReport};
pub use search::{search_units, search_units_with_progress, SearchMode, SearchSpec};

use thiserror::Error;

use crate::group::{dihedral_word_length, DihedralGenerators};
use crate::groupring::RingElemP;
use crate::matembed::DecideError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("index i must be at least 1, got {0}")]
    BadIndex(i64),
    #[error("generator {0} does not square to 1")]
    NotInvolution(usize),
    #[error("input sets must be non-empty")]
    EmptyInput,
    #[error("search space has {cardinality} candidates, budget is {budget}")]
    BudgetExceeded { cardinality: u128, budget: u128 },
    #[error("the zero element has no support")]
    ZeroElement,
    #[error("invalid search specification: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Decide(#[from] DecideError),
}

/// Largest word length, over the support, of the image in `P/<<x, y>>`
/// measured with the involutive generators (images of `a` and `b`).
pub fn length_l(alpha: &RingElemP) -> Result<u64, AnalysisError> {
    if alpha.is_zero() {
        return Err(AnalysisError::ZeroElement);
    }
    Ok(alpha
        .support()
        .into_iter()
        .map(|e| dihedral_word_length(e.project_mod_xy(), DihedralGenerators::Reflections))
        .max()
        .unwrap_or(0))
}
