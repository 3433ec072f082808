//! Partitions, standard tableau counts, Schur polynomials, Cauchy-type
//! expansions, and anti-symmetrizers.

mod antisym;
mod partition;
mod schur;

use std::fmt;

pub use antisym::{
    antisymmetrize, gen_cauchy_check, permutation_sign, signed_permutations, CauchyForm,
    DEFAULT_SAMPLE_HEIGHT, MAX_CAUCHY_RANK,
};
pub use partition::{partitions_of, partitions_up_to, syt_count, Partition};
pub use schur::{bialternant, cauchy_expand_check, schur_delta, schur_in_t, segre_series_product};

/// Outcome of an identity check: how many cases ran and the first failure, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, cases: usize, failure: Option<String>) -> Self {
        CheckReport {
            name: name.into(),
            cases,
            failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {} ({} cases): {why}", self.name, self.cases),
        }
    }
}
