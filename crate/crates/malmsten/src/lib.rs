//! Evaluation toolkit for Malmsten-type log-hyperbolic integrals.
//!
//! The crate evaluates the integral sequences
//!
//! ```text
//! Delta_n(a,b) = ∫₀^∞ ln(ax) sechⁿ(bx) dx
//! lambda_n     = ∫₀^∞ tanh(x) sechⁿ(x) / x dx
//! delta_n      = ∫₀^∞ (1 - sech x) sechⁿ(x) / x² dx
//! chi_n        = ∫₀^∞ (sech x - sechⁿ x) / x² dx
//! ```
//!
//! in closed form (signed generalized Stirling polynomials combined with
//! Hurwitz-zeta values and s-derivatives), and independently by
//! double-exponential quadrature on each of the five equivalent integral
//! forms. The `verify` module binds every closed form to its quadrature
//! oracle and runs the whole identity suite.
//!
//! All floating arithmetic is MPFR-backed (`rug::Float`) and parameterized
//! by a working precision in decimal digits; combinatorial quantities are
//! exact `rug::Rational`/`rug::Integer` values.

pub mod closedform;
pub mod error;
pub mod exactcomb;
pub mod precision;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use precision::Ctx;
