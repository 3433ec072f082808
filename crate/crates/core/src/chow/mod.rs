//! Concrete models of the base Chow ring and of the flag-bundle Chow ring.
//! The flag ring with push-forward by coefficient extraction is the
//! brute-force oracle for every closed formula in [`crate::pushforward`].

mod base;
mod bundle;
mod flag;

pub use base::{BaseModel, GradedElement};
pub use bundle::{chern_from_segre, segre_from_chern, BundleModel};
pub use flag::{oracle_pushforward_theta_pow, FlagRing, FlagRingElement};
