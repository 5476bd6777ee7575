//! Pointwise convexity probes of the `F(c)` dominant and hypergeometric checks.

mod boundary;
mod hyper;

pub use boundary::{
    psi_cap_at, re_psi_boundary, re_psi_radial, scan_theta, table1, BoundaryProbe, ProbeMode, Table1Row, ThetaScan,
    GATE_EXTRA_BITS, GATE_MAX_BITS, TABLE1_RADIAL_GAP, TABLE1_ROWS,
};
pub use hyper::{hyper_coeffs, hyper_f, hyper_ratio_identity_check, sugawa_predicate, HyperSum};
