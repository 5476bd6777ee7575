use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the computational pipeline.
///
/// A mathematical *finding* (a verified violation of a published bound) is not
/// an error; see [`crate::verify::Finding`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: &'static str, found: String },

    #[error("invalid class specification: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Schwarz function: {0}")]
    InvalidSchwarz(String),

    #[error("series is not a verified member of {0}")]
    NotAMember(String),

    #[error("round-trip check failed: {0}")]
    RoundTrip(String),

    #[error("(mu, nu) = ({mu}, {nu}) matched no Prokhorov-Szynal region")]
    NoRegion { mu: String, nu: String },

    #[error("{0}")]
    UncoveredRegion(Box<UncoveredRegion>),

    #[error("derivative vanishes at the probe point")]
    VanishingDerivative,

    #[error("insufficient precision: results unstable at {bits_tried} bits, {required_bits} bits required")]
    InsufficientPrecision { bits_tried: u32, required_bits: u32 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// A Janowski parameter pair whose `(mu, nu)` falls outside the regions the
/// piecewise gamma_3 bound covers.
#[derive(Debug, Clone)]
pub struct UncoveredRegion {
    pub a: f64,
    pub b: f64,
    pub mu: String,
    pub nu: String,
    pub region: crate::bounds::RegionId,
    /// `(A-B)/24 * ps_bound(mu, nu)`, the bound the region's own formula gives.
    pub lemma_bound: String,
}

impl fmt::Display for UncoveredRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(A, B) = ({}, {}) maps to (mu, nu) = ({}, {}) in {}, outside D1, D2, D6, D8, D9",
            self.a, self.b, self.mu, self.nu, self.region
        )
    }
}
