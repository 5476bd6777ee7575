//! Class specifications, their `phi`/`psi` series, extremal functions and
//! members built from Schwarz functions.

mod member;
mod schwarz;
mod spec;

pub use member::{member_from_schwarz, named_extremal, ClassMember, ExtremalName};
pub use schwarz::{
    boundary_points, sample_schwarz, sample_seed, SampleKind, SchwarzKind, SchwarzSample, BOUNDARY_SAMPLES,
};
pub use spec::ClassSpec;

use crate::arith::{CNum, PrecisionContext};
use crate::error::Result;
use crate::series::TruncatedSeries;

/// Coefficients of `phi(z) = 1 + B_1 z + B_2 z^2 + ...` up to `z^order`.
pub fn phi_series(spec: &ClassSpec, order: usize, ctx: PrecisionContext) -> TruncatedSeries {
    let (p, q) = spec.phi_params(ctx);
    let neg_q = -q;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ctx.one());
    let mut b = &p + &neg_q;
    for _ in 1..=order {
        coeffs.push(b.clone());
        b = &b * &neg_q;
    }
    TruncatedSeries::from_coeffs(coeffs).expect("non-empty")
}

/// `psi(z) = z k'(z)/k(z)` for the extremal `k`, by the coefficient recurrence
/// `(n+1) psi_n = B_n + sum_{k=1}^{n-1} (B_k - psi_k) psi_{n-k}`.
pub fn psi_series_recurrence(spec: &ClassSpec, order: usize, ctx: PrecisionContext) -> TruncatedSeries {
    let phi = phi_series(spec, order, ctx);
    let b = phi.coeffs();
    let mut psi: Vec<CNum> = Vec::with_capacity(order + 1);
    let mut diff: Vec<CNum> = Vec::with_capacity(order + 1);
    psi.push(ctx.one());
    diff.push(ctx.zero());
    for n in 1..=order {
        let mut acc = b[n].clone();
        for k in 1..n {
            acc.add_mul(&diff[k], &psi[n - k]);
        }
        let v = acc.div_real(&ctx.real((n + 1) as u32)).expect("n + 1 is nonzero");
        diff.push(&b[n] - &v);
        psi.push(v);
    }
    TruncatedSeries::from_coeffs(psi).expect("non-empty")
}

/// `(1 - (1 - z)^w)/z` to order `order`, `w != 0`.
fn one_minus_binomial_over_z(w: &CNum, order: usize, ctx: PrecisionContext) -> Result<TruncatedSeries> {
    let p = one_minus_z(order + 1, ctx).pow_series(w)?;
    p.neg().add_constant(&ctx.one()).div_z()
}

/// `psi(z) = z k'(z)/k(z)` from the closed form of the extremal `k`.
pub fn psi_series_closed(spec: &ClassSpec, order: usize, ctx: PrecisionContext) -> Result<TruncatedSeries> {
    let geom = TruncatedSeries::geometric(ctx, order);
    match *spec {
        ClassSpec::Fc { c: 1.0 } => {
            // k = -log(1 - z), k/z = sum z^n/(n+1)
            let coeffs = (0..=order)
                .map(|n| ctx.from_real(&(ctx.real(1) / (n + 1) as u32)))
                .collect();
            let kz = TruncatedSeries::from_coeffs(coeffs)?;
            Ok(geom.mul(&kz.recip()?))
        }
        ClassSpec::Fc { c } => {
            let cm1 = ctx.from_real(&(ctx.real(c) - 1u32));
            let q = one_minus_binomial_over_z(&cm1, order, ctx)?;
            Ok(geom.mul(&q.recip()?).scale(&cm1))
        }
        ClassSpec::Robertson { alpha } => {
            let a = ClassSpec::robertson_a(alpha, ctx);
            let q = one_minus_binomial_over_z(&a, order, ctx)?;
            Ok(geom.mul(&q.recip()?).scale(&a))
        }
        ClassSpec::Janowski { .. } => {
            let k = extremal_series(spec, order + 1, ctx)?;
            Ok(k.derive()?.mul(&k.div_z()?.recip()?))
        }
    }
}

/// The extremal `k` with `1 + z k''/k' = phi(z)`, normalized `k(0) = 0, k'(0) = 1`.
pub fn extremal_series(spec: &ClassSpec, order: usize, ctx: PrecisionContext) -> Result<TruncatedSeries> {
    match *spec {
        ClassSpec::Fc { c: 1.0 } => log_one_minus_neg(order, ctx),
        ClassSpec::Fc { c } => {
            // ((1-z)^{1-c} - 1)/(c - 1)
            let w = ctx.from_real(&(ctx.real(1) - ctx.real(c)));
            let p = one_minus_z(order, ctx).pow_series(&w)?;
            let cm1 = ctx.real(c) - 1u32;
            Ok(p.add_constant(&ctx.complex(-1.0, 0.0)).scale_real(&(ctx.real(1) / cm1)))
        }
        ClassSpec::Janowski { a, b: 0.0 } => {
            // (e^{Az} - 1)/A
            let az = TruncatedSeries::monomial(ctx, 1, order).scale(&ctx.complex(a, 0.0));
            let e = az.exp_series()?;
            Ok(e.add_constant(&ctx.complex(-1.0, 0.0))
                .scale_real(&(ctx.real(1) / ctx.real(a))))
        }
        ClassSpec::Janowski { a: 0.0, b } => {
            // log(1 + Bz)/B
            let base = TruncatedSeries::from_f64(ctx, &[1.0, b])?.pad(order);
            let l = base.log_series()?;
            Ok(l.scale_real(&(ctx.real(1) / ctx.real(b))))
        }
        ClassSpec::Janowski { a, b } => {
            // ((1 + Bz)^{A/B} - 1)/A
            let w = ctx.from_real(&(ctx.real(a) / ctx.real(b)));
            let base = TruncatedSeries::from_f64(ctx, &[1.0, b])?.pad(order);
            let p = base.pow_series(&w)?;
            Ok(p.add_constant(&ctx.complex(-1.0, 0.0))
                .scale_real(&(ctx.real(1) / ctx.real(a))))
        }
        ClassSpec::Robertson { alpha } => {
            // ((1-z)^{-A} - 1)/A
            let a = ClassSpec::robertson_a(alpha, ctx);
            let p = one_minus_z(order, ctx).pow_series(&-a.clone())?;
            Ok(p.add_constant(&ctx.complex(-1.0, 0.0)).scale(&a.recip()?))
        }
    }
}

fn one_minus_z(order: usize, ctx: PrecisionContext) -> TruncatedSeries {
    TruncatedSeries::from_f64(ctx, &[1.0, -1.0])
        .expect("non-empty")
        .pad(order)
}

/// `-log(1 - z) = sum z^n/n`.
fn log_one_minus_neg(order: usize, ctx: PrecisionContext) -> Result<TruncatedSeries> {
    let mut coeffs = vec![ctx.zero()];
    coeffs.extend((1..=order).map(|n| ctx.from_real(&(ctx.real(1) / n as u32))));
    TruncatedSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn specs() -> Vec<ClassSpec> {
        vec![
            ClassSpec::fc(0.3).unwrap(),
            ClassSpec::fc(1.0).unwrap(),
            ClassSpec::fc(2.0).unwrap(),
            ClassSpec::fc(2.7).unwrap(),
            ClassSpec::janowski(1.0, -1.0).unwrap(),
            ClassSpec::janowski(0.0, -0.795).unwrap(),
            ClassSpec::janowski(0.6, 0.0).unwrap(),
            ClassSpec::janowski(0.4, -0.3).unwrap(),
            ClassSpec::janowski(-0.2, -0.9).unwrap(),
            ClassSpec::robertson(0.0).unwrap(),
            ClassSpec::robertson(0.7).unwrap(),
            ClassSpec::robertson(-1.2).unwrap(),
        ]
    }

    #[test]
    fn phi_coefficients() {
        let c = ctx();
        let phi = phi_series(&ClassSpec::fc(2.5).unwrap(), 4, c);
        for n in 1..=4 {
            assert!((phi.coeff(n) - &c.complex(2.5, 0.0)).abs() < c.tolerance(8));
        }
        // Janowski: (A - B)(-B)^{n-1}
        let phi = phi_series(&ClassSpec::janowski(0.5, -0.5).unwrap(), 3, c);
        let expect = [1.0, 1.0, 0.5, 0.25];
        for (n, e) in expect.iter().enumerate() {
            assert!((phi.coeff(n) - &c.complex(*e, 0.0)).abs() < c.tolerance(8));
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let c = ctx();
        for spec in specs() {
            let r = psi_series_recurrence(&spec, 40, c);
            let k = psi_series_closed(&spec, 40, c).unwrap();
            let scale = r.max_abs().max(&c.real(1));
            let d = r.max_abs_diff(&k);
            assert!(d < c.tolerance(24) * scale, "{spec}: {}", d.to_f64());
        }
    }

    #[test]
    fn extremal_satisfies_its_differential_equation() {
        let c = ctx();
        for spec in specs() {
            let k = extremal_series(&spec, 30, c).unwrap();
            let kp = k.derive().unwrap();
            let kpp = kp.derive().unwrap();
            let lhs = kpp.mul_z().mul(&kp.truncate(28).recip().unwrap());
            let lhs = lhs.add_constant(&c.one());
            let phi = phi_series(&spec, 28, c);
            let scale = phi.max_abs().max(&c.real(1));
            assert!(lhs.max_abs_diff(&phi) < c.tolerance(24) * &scale, "{spec}");
            // psi = z k'/k
            let psi = kp.mul(&k.div_z().unwrap().recip().unwrap());
            let rec = psi_series_recurrence(&spec, 29, c);
            assert!(psi.max_abs_diff(&rec) < c.tolerance(24) * scale, "{spec}");
        }
    }

    #[test]
    fn fc_two_extremal_is_the_koebe_half_plane_map() {
        // c = 2: k = z/(1 - z), psi = 1/(1 - z)
        let c = ctx();
        let spec = ClassSpec::fc(2.0).unwrap();
        let k = extremal_series(&spec, 10, c).unwrap();
        for n in 1..=10 {
            assert!((k.coeff(n) - &c.one()).abs() < c.tolerance(8));
        }
        let psi = psi_series_closed(&spec, 10, c).unwrap();
        assert!(psi.max_abs_diff(&TruncatedSeries::geometric(c, 10)) < c.tolerance(8));
    }

    #[test]
    fn fc_one_psi_head() {
        // psi = z/((1-z)(-log(1-z))) = 1 + z/2 + 5z^2/12 + ...
        let c = ctx();
        let psi = psi_series_closed(&ClassSpec::fc(1.0).unwrap(), 3, c).unwrap();
        assert!((psi.coeff(1) - &c.complex(0.5, 0.0)).abs() < c.tolerance(8));
        let five_twelfths = c.from_real(&(c.real(5) / 12u32));
        assert!((psi.coeff(2) - &five_twelfths).abs() < c.tolerance(8));
    }
}
