//! Gauss hypergeometric series `F(a, b; cc; z) = sum (a)_n (b)_n / ((cc)_n n!) z^n`.

use crate::arith::{CNum, PrecisionContext, Real};
use crate::classes::{psi_series_recurrence, ClassSpec};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Partial sum and the modulus of its last included term.
#[derive(Clone, Debug)]
pub struct HyperSum {
    pub value: CNum,
    pub last_term_abs: Real,
    pub terms: usize,
}

fn check_cc(cc: &Real) -> Result<()> {
    if *cc <= 0 && cc.is_integer() {
        return Err(Error::InvalidParameter(format!(
            "lower parameter {} is a non-positive integer",
            cc.to_f64()
        )));
    }
    Ok(())
}

/// Term ratio `(a + n)(b + n)/((cc + n)(n + 1))`.
fn ratio(a: &Real, b: &Real, cc: &Real, n: usize, ctx: PrecisionContext) -> Real {
    let n = n as u64;
    let num = ctx.real(a + n) * ctx.real(b + n);
    num / (ctx.real(cc + n) * (n + 1))
}

/// Sum of the first `terms` terms at `z`, `|z| < 1`.
pub fn hyper_f(a: &Real, b: &Real, cc: &Real, z: &CNum, terms: usize) -> Result<HyperSum> {
    check_cc(cc)?;
    if z.abs() >= 1u32 {
        return Err(Error::Domain(format!("|z| = {:.6} is not below 1", z.abs().to_f64())));
    }
    let ctx = z.ctx();
    let mut value = ctx.zero();
    let mut term = ctx.one();
    let mut last = ctx.real(0);
    for n in 0..terms {
        value = &value + &term;
        last = term.abs();
        term = (&term * z).scale(&ratio(a, b, cc, n, ctx));
    }
    Ok(HyperSum {
        value,
        last_term_abs: last,
        terms,
    })
}

/// Coefficients of `F(a, b; cc; z)` through `z^order`.
pub fn hyper_coeffs(a: &Real, b: &Real, cc: &Real, order: usize, ctx: PrecisionContext) -> Result<TruncatedSeries> {
    check_cc(cc)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut t = ctx.real(1);
    for n in 0..=order {
        coeffs.push(ctx.from_real(&t));
        t *= ratio(a, b, cc, n, ctx);
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Largest coefficient deviation, for `n <= order`, between
/// `1 - c + c F(c+1, 1; 2; z)/F(c, 1; 2; z)` and the `F(c)` dominant computed
/// by its recurrence.
pub fn hyper_ratio_identity_check(c: f64, order: usize, ctx: PrecisionContext) -> Result<Real> {
    if c == 1.0 {
        return Err(Error::InvalidParameter(
            "the hypergeometric ratio form needs c != 1".into(),
        ));
    }
    let spec = ClassSpec::fc(c)?;
    let cr = ctx.real(c);
    let one = ctx.real(1);
    let two = ctx.real(2);
    let lower = hyper_coeffs(&cr, &one, &two, order, ctx)?;
    let upper = hyper_coeffs(&ctx.real(&cr + 1u32), &one, &two, order, ctx)?;
    let lhs = upper
        .div(&lower)?
        .scale_real(&cr)
        .add_constant(&ctx.from_real(&ctx.real(1 - &cr)));
    let rhs = psi_series_recurrence(&spec, order, ctx);
    Ok(lhs.max_abs_diff(&rhs))
}

/// `a + b - 1 < cc < a + b + 1/2` and `(cc - a)(cc - b) > 0`; when both hold
/// `F(a+1, b; cc; z)/F(a, b; cc; z)` is not convex in the disk.
pub fn sugawa_predicate(a: f64, b: f64, cc: f64) -> bool {
    let s = a + b;
    s - 1.0 < cc && cc < s + 0.5 && (cc - a) * (cc - b) > 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::extremal_series;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    #[test]
    fn value_at_origin_is_one() {
        let c = ctx();
        let s = hyper_f(&c.real(0.3), &c.real(-2.5), &c.real(1.5), &c.zero(), 10).unwrap();
        assert_eq!(s.value, c.one());
    }

    #[test]
    fn log_identity() {
        let c = ctx();
        let z = c.complex(0.5, 0.0);
        let s = hyper_f(&c.real(1), &c.real(1), &c.real(2), &z, 400).unwrap();
        let expect = c.real(2).ln() * 2u32;
        assert!((s.value.re().clone() - expect).abs() < c.tolerance(16));
        assert!(s.last_term_abs < c.tolerance(16));
        // complex argument
        let z = c.complex(0.3, -0.4);
        let s = hyper_f(&c.real(1), &c.real(1), &c.real(2), &z, 800).unwrap();
        let expect = (-(c.one() - z.clone()).ln().unwrap()).checked_div(&z).unwrap();
        assert!((&s.value - &expect).abs() < c.tolerance(16));
    }

    #[test]
    fn matches_the_extremal() {
        // z F(c, 1; 2; z) is the F(c) extremal
        let c = ctx();
        let spec = ClassSpec::fc(0.25).unwrap();
        let k = extremal_series(&spec, 300, c).unwrap();
        let z = c.complex(0.3, 0.0);
        let s = hyper_f(&c.real(0.25), &c.real(1), &c.real(2), &z, 300).unwrap();
        assert!((&(&s.value * &z) - &k.eval(&z)).abs() < c.tolerance(16));
        let co = hyper_coeffs(&c.real(0.25), &c.real(1), &c.real(2), 299, c).unwrap();
        assert!(co.mul_z().max_abs_diff(&k) < c.tolerance(16));
    }

    #[test]
    fn rejects_bad_arguments() {
        let c = ctx();
        let z = c.complex(0.1, 0.0);
        for cc in [0.0, -1.0, -4.0] {
            assert!(hyper_f(&c.real(1), &c.real(1), &c.real(cc), &z, 5).is_err());
        }
        assert!(hyper_f(&c.real(1), &c.real(1), &c.real(-0.5), &z, 5).is_ok());
        assert!(hyper_f(&c.real(1), &c.real(1), &c.real(2), &c.complex(0.6, 0.8), 5).is_err());
        assert!(hyper_ratio_identity_check(1.0, 10, c).is_err());
    }

    #[test]
    fn ratio_identity_holds() {
        let c = ctx();
        for cv in [0.25, 0.75, 1.5, 2.0, 2.5] {
            let d = hyper_ratio_identity_check(cv, 100, c).unwrap();
            assert!(d < c.tolerance(24), "c = {cv}: {}", d.to_f64());
        }
    }

    #[test]
    fn predicate_window() {
        for i in 1..100 {
            let cv = 0.5 + 1.5 * i as f64 / 100.0;
            assert!(sugawa_predicate(cv, 1.0, 2.0), "{cv}");
        }
        for cv in [0.5, 2.0, 2.5, 0.1] {
            assert!(!sugawa_predicate(cv, 1.0, 2.0), "{cv}");
        }
    }
}
