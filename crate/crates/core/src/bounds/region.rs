//! Prokhorov-Szynal regions for the functional `|c3 + mu c1 c2 + nu c1^3|`
//! over Schwarz functions.

use std::fmt;

use serde::Serialize;

use crate::arith::{PrecisionContext, Real};
use crate::error::{Error, Result};
use crate::series::decimal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RegionId {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8,
    D9,
    D10,
    D11,
    D12,
    /// `(mu, nu) = (2, 1)`, which carries bound 1.
    SpecialPoint21,
}

impl RegionId {
    pub const ALL: [RegionId; 13] = [
        RegionId::D1,
        RegionId::D2,
        RegionId::D3,
        RegionId::D4,
        RegionId::D5,
        RegionId::D6,
        RegionId::D7,
        RegionId::D8,
        RegionId::D9,
        RegionId::SpecialPoint21,
        RegionId::D10,
        RegionId::D11,
        RegionId::D12,
    ];

    /// Whether `(mu, nu)` satisfies this region's defining inequalities.
    pub fn contains(self, mu: &Real, nu: &Real) -> bool {
        let m = mu.clone().abs();
        let half = Real::with_val(m.prec(), 0.5);
        let in_m = |lo: Option<u32>, hi: Option<u32>| lo.is_none_or(|l| m >= l) && hi.is_none_or(|h| m <= h);
        match self {
            RegionId::D1 => m <= half && *nu > -1i32 && *nu <= 1u32,
            RegionId::D2 => m >= half && in_m(None, Some(2)) && *nu >= d2_lower(&m) && *nu <= 1u32,
            RegionId::D3 => m <= half && *nu <= -1i32,
            RegionId::D4 => m >= half && *nu <= neg_two_thirds_m_plus_1(&m),
            RegionId::D5 => in_m(None, Some(2)) && *nu >= 1u32,
            RegionId::D6 => in_m(Some(2), Some(4)) && *nu >= d6_lower(&m),
            RegionId::D7 => in_m(Some(4), None) && *nu >= two_thirds_m_minus_1(&m),
            RegionId::D8 => {
                m >= half && in_m(None, Some(2)) && *nu >= neg_two_thirds_m_plus_1(&m) && *nu <= d2_lower(&m)
            }
            RegionId::D9 => in_m(Some(2), None) && *nu >= neg_two_thirds_m_plus_1(&m) && *nu <= d9_upper(&m),
            RegionId::SpecialPoint21 => *mu == 2u32 && *nu == 1u32,
            RegionId::D10 => in_m(Some(2), Some(4)) && *nu >= d9_upper(&m) && *nu <= d6_lower(&m),
            RegionId::D11 => in_m(Some(4), None) && *nu >= d9_upper(&m) && *nu <= d12_lower(&m),
            RegionId::D12 => in_m(Some(4), None) && *nu >= d12_lower(&m) && *nu <= two_thirds_m_minus_1(&m),
        }
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionId::SpecialPoint21 => f.write_str("(2,1)"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// `(4/27)(m + 1)^3 - (m + 1)`.
fn d2_lower(m: &Real) -> Real {
    let m1 = m.clone() + 1u32;
    let cube = m1.clone().square() * &m1;
    cube * 4u32 / 27u32 - m1
}

/// `-(2/3)(m + 1)`.
fn neg_two_thirds_m_plus_1(m: &Real) -> Real {
    -((m.clone() + 1u32) * 2u32 / 3u32)
}

/// `(2/3)(m - 1)`.
fn two_thirds_m_minus_1(m: &Real) -> Real {
    (m.clone() - 1u32) * 2u32 / 3u32
}

/// `(m^2 + 8)/12`, the D6 lower edge and D10 upper edge.
fn d6_lower(m: &Real) -> Real {
    (m.clone().square() + 8u32) / 12u32
}

/// `2m(m + 1)/(m^2 + 2m + 4)`.
fn d9_upper(m: &Real) -> Real {
    let num = m.clone() * (m.clone() + 1u32) * 2u32;
    let den = m.clone().square() + m.clone() * 2u32 + 4u32;
    num / den
}

/// `2m(m - 1)/(m^2 - 2m + 4)`.
fn d12_lower(m: &Real) -> Real {
    let num = m.clone() * (m.clone() - 1u32) * 2u32;
    let den = m.clone().square() - m.clone() * 2u32 + 4u32;
    num / den
}

/// First region in the order D1..D9, (2,1), D10..D12 containing `(mu, nu)`.
pub fn ps_classify(mu: &Real, nu: &Real) -> Result<RegionId> {
    RegionId::ALL
        .into_iter()
        .find(|r| r.contains(mu, nu))
        .ok_or_else(|| Error::NoRegion {
            mu: decimal(mu),
            nu: decimal(nu),
        })
}

/// The bound formula attached to `region`, evaluated at `(mu, nu)` whether or
/// not the point lies in it.
pub fn ps_region_bound(region: RegionId, mu: &Real, nu: &Real) -> Real {
    let prec = mu.prec().max(nu.prec());
    let m = Real::with_val(prec, mu.abs_ref());
    let nu = Real::with_val(prec, nu);
    match region {
        RegionId::D1 | RegionId::D2 | RegionId::SpecialPoint21 => Real::with_val(prec, 1),
        RegionId::D3 | RegionId::D4 | RegionId::D5 | RegionId::D6 | RegionId::D7 => nu.abs(),
        RegionId::D8 | RegionId::D9 => {
            // (2/3)(m+1) sqrt((m+1)/(3(m+1+nu)))
            let m1 = m + 1u32;
            let inner = m1.clone() / ((m1.clone() + &nu) * 3u32);
            m1 * 2u32 / 3u32 * inner.sqrt()
        }
        RegionId::D10 | RegionId::D11 => {
            // (1/3) nu ((mu^2-4)/(mu^2-4nu)) sqrt((mu^2-4)/(3(nu-1)))
            let m2 = m.square();
            let mm4 = m2.clone() - 4u32;
            let ratio = mm4.clone() / (m2 - nu.clone() * 4u32);
            let root = (mm4 / ((nu.clone() - 1u32) * 3u32)).sqrt();
            nu / 3u32 * ratio * root
        }
        RegionId::D12 => {
            // (2/3)(m-1) sqrt((m-1)/(3(m-1-nu)))
            let m1 = m - 1u32;
            let inner = m1.clone() / ((m1.clone() - &nu) * 3u32);
            m1 * 2u32 / 3u32 * inner.sqrt()
        }
    }
}

/// Sharp bound of `|c3 + mu c1 c2 + nu c1^3|` over Schwarz functions.
pub fn ps_bound(mu: &Real, nu: &Real) -> Result<Real> {
    Ok(ps_region_bound(ps_classify(mu, nu)?, mu, nu))
}

/// `mu = (A - 5B)/2`, `nu = (3B^2 - AB)/2` for the Janowski class `C(A, B)`.
pub fn janowski_mu_nu(a: f64, b: f64, ctx: PrecisionContext) -> (Real, Real) {
    let a = ctx.real(a);
    let b = ctx.real(b);
    let mu = (a.clone() - b.clone() * 5u32) / 2u32;
    let nu = (b.clone().square() * 3u32 - a * b) / 2u32;
    (mu, nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn r(x: f64) -> Real {
        ctx().real(x)
    }

    #[test]
    fn classification_examples() {
        let c = ctx();
        assert_eq!(ps_classify(&r(0.0), &r(0.0)).unwrap(), RegionId::D1);
        let (mu, nu) = janowski_mu_nu(0.0, -0.9, c);
        assert_eq!(ps_classify(&mu, &nu).unwrap(), RegionId::D6);
        let (mu, nu) = janowski_mu_nu(0.0, -0.795, c);
        assert_eq!(ps_classify(&mu, &nu).unwrap(), RegionId::D8);
        let (mu, nu) = janowski_mu_nu(0.0, -0.81, c);
        assert_eq!(ps_classify(&mu, &nu).unwrap(), RegionId::D9);
        let (mu, nu) = janowski_mu_nu(0.0, -0.1, c);
        assert_eq!(ps_classify(&mu, &nu).unwrap(), RegionId::D1);
        assert_eq!(ps_classify(&r(0.0), &r(-3.0)).unwrap(), RegionId::D3);
        assert_eq!(ps_classify(&r(1.0), &r(-3.0)).unwrap(), RegionId::D4);
        assert_eq!(ps_classify(&r(1.0), &r(3.0)).unwrap(), RegionId::D5);
        assert_eq!(ps_classify(&r(3.0), &r(2.0)).unwrap(), RegionId::D6);
        assert_eq!(ps_classify(&r(5.0), &r(4.0)).unwrap(), RegionId::D7);
        assert_eq!(ps_classify(&r(3.0), &r(1.3)).unwrap(), RegionId::D10);
        assert_eq!(ps_classify(&r(6.0), &r(2.0)).unwrap(), RegionId::D11);
        assert_eq!(ps_classify(&r(6.0), &r(3.2)).unwrap(), RegionId::D12);
        // (2, 1) sits on the D2 boundary and is claimed there first
        assert_eq!(ps_classify(&r(2.0), &r(1.0)).unwrap(), RegionId::D2);
        assert!(RegionId::SpecialPoint21.contains(&r(2.0), &r(1.0)));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(ps_bound(&r(0.0), &r(0.0)).unwrap(), 1u32);
        assert_eq!(ps_bound(&r(3.0), &r(2.0)).unwrap(), 2u32);
        // (2/3)(3.5) sqrt(3.5/7.5)
        let v = ps_bound(&r(2.5), &r(-1.0)).unwrap();
        let expect = r(3.5) * 2u32 / 3u32 * (r(3.5) / r(7.5)).sqrt();
        assert!((v.clone() - expect).abs() < ctx().tolerance(8));
        assert!((v.to_f64() - 1.593_970_2).abs() < 1e-6);
    }

    #[test]
    fn classification_is_total_on_a_grid() {
        for i in -40..=40 {
            for j in -40..=40 {
                let mu = r(i as f64 * 0.2);
                let nu = r(j as f64 * 0.2);
                assert!(ps_classify(&mu, &nu).is_ok(), "({mu}, {nu})");
            }
        }
    }

    #[test]
    fn adjacent_formulas_agree_on_shared_edges() {
        let c = ctx();
        let close = |a: Real, b: Real| (a - b).abs() < c.tolerance(20);
        for k in 0..=30 {
            // D8/D9 meets D2 resp. D10 on their upper edges
            let m = r(0.5 + 1.5 * k as f64 / 30.0);
            let nu = d2_lower(&m);
            assert!(close(
                ps_region_bound(RegionId::D8, &m, &nu),
                ps_region_bound(RegionId::D2, &m, &nu)
            ));
            // the D10 formula is 0/0 at (2, 1), so start just past mu = 2
            let m = r(2.0 + 2.0 * (k as f64 + 0.5) / 31.0);
            let nu = d9_upper(&m);
            assert!(close(
                ps_region_bound(RegionId::D9, &m, &nu),
                ps_region_bound(RegionId::D10, &m, &nu)
            ));
            let nu = d6_lower(&m);
            assert!(close(
                ps_region_bound(RegionId::D10, &m, &nu),
                ps_region_bound(RegionId::D6, &m, &nu)
            ));
            let m = r(4.0 + 3.0 * k as f64 / 30.0);
            let nu = d12_lower(&m);
            assert!(close(
                ps_region_bound(RegionId::D11, &m, &nu),
                ps_region_bound(RegionId::D12, &m, &nu)
            ));
            let nu = two_thirds_m_minus_1(&m);
            assert!(close(
                ps_region_bound(RegionId::D12, &m, &nu),
                ps_region_bound(RegionId::D7, &m, &nu)
            ));
            // D4/D8 lower edge
            let m = r(0.5 + 3.5 * k as f64 / 30.0);
            let nu = neg_two_thirds_m_plus_1(&m);
            assert!(close(
                ps_region_bound(RegionId::D8, &m, &nu),
                ps_region_bound(RegionId::D4, &m, &nu)
            ));
        }
    }
}
