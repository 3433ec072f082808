//! Exact push-forward formulas on Grassmann bundles.
//!
//! For a rank `r` bundle `E` on `X` and the Grassmann bundle `π: G(d, E) -> X`
//! of corank `d` subbundles with universal quotient `Q`, this crate computes
//! `π_* ch(det Q)` and the Plücker degree by four routes:
//!
//! * the closed sum over `k ∈ Z_{≥0}^d` ([`pushforward::ch_pushforward_closed`]),
//! * the Schur-polynomial sum over partitions ([`pushforward::ch_pushforward_schur`]),
//! * the Laurent constant-term functional ([`pushforward::ch_pushforward_constterm`]),
//! * the flag-bundle Chow ring with coefficient extraction ([`chow::FlagRing`]).
//!
//! Arithmetic is exact throughout.

pub mod chow;
pub mod degree;
pub mod error;
pub mod laurent;
pub mod matrix;
pub mod pushforward;
pub mod ring;
pub mod suite;
pub mod symfunc;

pub use chow::{BaseModel, BundleModel, FlagRing, FlagRingElement, GradedElement};
pub use degree::{fiber_degree_hook, plucker_degree, DegreeResult};
pub use error::{Error, Result};
pub use laurent::{vandermonde, ExponentVector, LaurentPoly};
pub use matrix::det;
pub use pushforward::{DenominatorVariant, Method, PushforwardSeries};
pub use ring::{Coeff, Rational};
pub use symfunc::{CheckReport, Partition};
