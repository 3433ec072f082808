//! Push-forward formulas: the `Φ` functional, monomial and general
//! polynomial push-forwards from the flag bundle, and the four routes to
//! `π_* ch(det Q)`.

mod monomial;
mod phi;
mod series;

pub use monomial::{monomial_pushforward_ct, monomial_pushforward_det, pushforward_general_f};
pub use phi::{factorial_det_check, factorial_det_sides, phi, phi_eval_monomial, phi_monomial_by_definition};
pub use series::{
    ch_pushforward, ch_pushforward_closed, ch_pushforward_constterm, ch_pushforward_oracle,
    ch_pushforward_schur, closed_term_coefficient, compositions, DenominatorVariant, Method,
    PushforwardSeries,
};
