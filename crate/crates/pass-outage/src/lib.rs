//! Outage-probability analysis for a two-room downlink in which a single
//! antenna serves one line-of-sight user and one blocked (Rayleigh-faded)
//! user in the adjacent room.
//!
//! Two antenna deployments are compared under both OMA (two-slot TDMA) and
//! power-domain NOMA:
//!
//! * **CASS** — a conventional antenna fixed at the ceiling center of room 1;
//! * **PASS** — a pinching antenna on a ceiling waveguide that slides along
//!   the x-axis to the served user's x-coordinate.
//!
//! The crate provides:
//!
//! * exact piecewise PDFs/CDFs of the four squared-distance laws induced by
//!   uniform user placement ([`geometry`]),
//! * Chebyshev-Gauss quadrature ([`quadrature`]),
//! * instantaneous rate models and outage thresholds ([`link`]),
//! * closed-form outage probabilities, high-SNR asymptotes, diversity-order
//!   estimation and PASS-vs-CASS gaps ([`outage`]),
//! * a deterministic, seeded Monte-Carlo simulator used as an independent
//!   oracle ([`montecarlo`]),
//! * self-check suites ([`validate`]) and CSV sweep / figure-reproduction
//!   front ends ([`sweep`], [`figures`], [`cli`]).
//!
//! Start with the runnable examples (`cargo run --release --example
//! thresholds`) or the `pass-outage` binary.

pub mod chart;
pub mod cli;
pub mod figures;
pub mod geometry;
pub mod link;
pub mod montecarlo;
pub mod outage;
pub mod quadrature;
pub mod sweep;
pub mod validate;

mod error;

pub use error::Error;

/// Default number of Chebyshev-Gauss nodes used throughout.
pub const DEFAULT_QUADRATURE_ORDER: usize = 100;

/// `10 * log10(rho)`.
pub fn db_from_linear(rho: f64) -> f64 {
    10.0 * rho.log10()
}

/// Inverse of [`db_from_linear`].
pub fn linear_from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
