//! High-precision logarithmic coefficients of convex-type function classes.
//!
//! The classes are `F(c)` (`1 + zf''/f'` subordinate to `1 + cz/(1-z)`),
//! Janowski convex `C(A, B)` and the Robertson class `S_alpha`. Everything is
//! computed in MPFR arithmetic at a caller-chosen precision.

pub mod arith;
pub mod bounds;
pub mod classes;
pub mod cli;
pub mod error;
pub mod logcoef;
pub mod probe;
pub mod series;
pub mod verify;

pub use arith::{CNum, PrecisionContext, Real};
pub use classes::ClassSpec;
pub use error::{Error, Result};
pub use series::TruncatedSeries;
