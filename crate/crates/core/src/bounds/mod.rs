//! Sharp bounds: the Prokhorov-Szynal functional bound, gamma_1..gamma_3
//! bounds for the Janowski and Robertson classes, and weighted-series
//! right-hand sides.

mod region;
mod weight;

pub use region::{janowski_mu_nu, ps_bound, ps_classify, ps_region_bound, RegionId};
pub use weight::WeightSpec;

use serde_json::{json, Value};

use crate::arith::{PrecisionContext, Real};
use crate::classes::{psi_series_recurrence, ClassSpec};
use crate::error::{Error, Result, UncoveredRegion};
use crate::series::decimal;

/// One sharp bound `|gamma_k| <= value` with the case that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub gamma_index: u8,
    pub value: Real,
    pub branch: String,
    pub region: Option<RegionId>,
    /// Function attaining the bound, e.g. `g1` or `g4(c=..., s=...)`.
    pub extremal: String,
}

impl BoundReport {
    fn new(gamma_index: u8, value: Real, branch: impl Into<String>, extremal: impl Into<String>) -> Self {
        Self {
            gamma_index,
            value,
            branch: branch.into(),
            region: None,
            extremal: extremal.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "gamma_index": self.gamma_index,
            "value": decimal(&self.value),
            "branch": self.branch,
            "region": self.region.map(|r| r.to_string()),
            "extremal": self.extremal,
        })
    }
}

/// Bounds of `|gamma_1|, |gamma_2|, |gamma_3|` over `C(A, B)`.
///
/// Fails with [`Error::UncoveredRegion`] when `(mu, nu)` lands outside the
/// regions the piecewise gamma_3 bound is stated for.
pub fn janowski_gamma_bounds(a: f64, b: f64, ctx: PrecisionContext) -> Result<[BoundReport; 3]> {
    ClassSpec::janowski(a, b)?;
    let (ar, br) = (ctx.real(a), ctx.real(b));
    let amb = ctx.real(&ar - &br);

    let g1 = BoundReport::new(1, ctx.real(&amb / 4u32), "all", "g1");

    let t = ctx.real(&ar - &(br.clone() * 5u32)).abs();
    let g2 = if t <= 4u32 {
        BoundReport::new(2, ctx.real(&amb / 12u32), "|A-5B| <= 4", "g2")
    } else {
        BoundReport::new(2, ctx.real(&amb * &t) / 48u32, "|A-5B| > 4", "g1")
    };

    let (mu, nu) = janowski_mu_nu(a, b, ctx);
    let region = ps_classify(&mu, &nu)?;
    let mut g3 = match region {
        RegionId::D1 | RegionId::D2 | RegionId::SpecialPoint21 => {
            BoundReport::new(3, ctx.real(&amb / 24u32), "D1 u D2", "g3")
        }
        RegionId::D6 => {
            // (A-B)/48 |B(A - 3B)|
            let v = ctx.real(&br * &(ar.clone() - br.clone() * 3u32)).abs();
            BoundReport::new(3, v * &amb / 48u32, "D6", "g1")
        }
        RegionId::D8 | RegionId::D9 => {
            // (A-B)/(72 sqrt 3) (|A-5B| + 2)^{3/2} / sqrt(|A-5B| + 2 + 3B^2 - AB)
            let x = t.clone() + 2u32;
            let inner = x.clone() + br.clone().square() * 3u32 - ctx.real(&ar * &br);
            let sqrt3 = ctx.real(3).sqrt();
            let num = x.clone() * x.sqrt() * &amb;
            let v = num / (sqrt3 * 72u32) / inner.sqrt();
            BoundReport::new(3, v, "D8 u D9", g4_descriptor(&mu, &nu))
        }
        other => {
            let lemma = ctx.real(&amb / 24u32) * ps_region_bound(other, &mu, &nu);
            return Err(Error::UncoveredRegion(Box::new(UncoveredRegion {
                a,
                b,
                mu: decimal(&mu),
                nu: decimal(&nu),
                region: other,
                lemma_bound: decimal(&lemma),
            })));
        }
    };
    g3.region = Some(region);
    Ok([g1, g2, g3])
}

/// `g4(c=..., s=...)` with `c = sqrt((|mu| + 1)/(3(|mu| + nu + 1)))`, `s = sgn mu`.
fn g4_descriptor(mu: &Real, nu: &Real) -> String {
    let m = mu.clone().abs();
    let c = ((m.clone() + 1u32) / ((m + nu + 1u32) * 3u32)).sqrt();
    let s = if mu.is_sign_negative() { -1 } else { 1 };
    format!("g4(c={}, s={s})", decimal(&c))
}

fn robertson_common(alpha: f64, ctx: PrecisionContext) -> Result<(Real, Real)> {
    ClassSpec::robertson(alpha)?;
    let cos = ctx.real(alpha).cos();
    let cos2 = cos.clone().square();
    Ok((cos, cos2))
}

/// Bounds of `|gamma_1|, |gamma_2|, |gamma_3|` over `S_alpha`:
/// `cos(a)/2`, `(cos(a)/12) sqrt(4 + 5 cos^2 a)`, `(cos(a)/12) sqrt(1 + 3 cos^2 a)`,
/// all attained by `h2`.
pub fn robertson_gamma_bounds(alpha: f64, ctx: PrecisionContext) -> Result<[BoundReport; 3]> {
    let (cos, cos2) = robertson_common(alpha, ctx)?;
    let h2 = format!("h2(alpha={alpha})");
    let g1 = ctx.real(&cos / 2u32);
    let g2 = ctx.real(&cos / 12u32) * (cos2.clone() * 5u32 + 4u32).sqrt();
    let g3 = ctx.real(&cos / 12u32) * (cos2 * 3u32 + 1u32).sqrt();
    Ok([
        BoundReport::new(1, g1, "all", h2.clone()),
        BoundReport::new(2, g2, "all", h2.clone()),
        BoundReport::new(3, g3, "all", h2),
    ])
}

/// The doubled gamma_2, gamma_3 values `(cos(a)/6) sqrt(4 + 5 cos^2 a)` and
/// `(cos(a)/3) sqrt(1 + 3 cos^2 a)` that follow from the `(1 + A)/24`
/// prefactor; kept for comparison only.
pub fn robertson_gamma_bounds_printed(alpha: f64, ctx: PrecisionContext) -> Result<[BoundReport; 3]> {
    let (cos, cos2) = robertson_common(alpha, ctx)?;
    let label = "printed (1+A)/24 prefactor";
    let h2 = format!("h2(alpha={alpha})");
    let g1 = ctx.real(&cos / 2u32);
    let g2 = ctx.real(&cos / 6u32) * (cos2.clone() * 5u32 + 4u32).sqrt();
    let g3 = ctx.real(&cos / 3u32) * (cos2 * 3u32 + 1u32).sqrt();
    Ok([
        BoundReport::new(1, g1, label, h2.clone()),
        BoundReport::new(2, g2, label, h2.clone()),
        BoundReport::new(3, g3, label, h2),
    ])
}

/// `1/4 sum_{n=1}^{order} (w_n/n^2) |psi_n|^2` with `psi` the best dominant
/// of `spec`.
pub fn series_rhs(spec: &ClassSpec, weight: &WeightSpec, order: usize, ctx: PrecisionContext) -> Result<Real> {
    weight.validate()?;
    let mut acc = ctx.real(0);
    if order == 0 {
        return Ok(acc);
    }
    let psi = psi_series_recurrence(spec, order, ctx);
    for n in 1..=order {
        acc += weight.reduced(n, ctx)? * psi.coeff(n).norm_sqr();
    }
    Ok(acc / 4u32)
}

/// Bounds that follow from the Schwarz-coefficient lemmas alone for
/// `phi(z) = (1 + P z)/(1 + Q z)` with real `P > Q`: `(P-Q)/4`,
/// `(P-Q)/12 max(1, |P-5Q|/4)` and `(P-Q)/24` times the Prokhorov-Szynal bound.
pub fn mobius_lemma_bounds(p: f64, q: f64, ctx: PrecisionContext) -> Result<[BoundReport; 3]> {
    if p.partial_cmp(&q) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidParameter(format!("need P > Q, got P = {p}, Q = {q}")));
    }
    let (pr, qr) = (ctx.real(p), ctx.real(q));
    let pmq = ctx.real(&pr - &qr);
    let t = ctx.real(&pr - &(qr.clone() * 5u32));
    let g2 = (t.clone().abs() / 4u32).max(&ctx.real(1)) * &pmq / 12u32;
    let mu = ctx.real(&t / 2u32);
    let nu = (qr.clone().square() * 3u32 - ctx.real(&pr * &qr)) / 2u32;
    let region = ps_classify(&mu, &nu)?;
    let g3 = ps_region_bound(region, &mu, &nu) * &pmq / 24u32;
    let mut r3 = BoundReport::new(3, g3, "lemma", "-");
    r3.region = Some(region);
    Ok([
        BoundReport::new(1, ctx.real(&pmq / 4u32), "lemma", "g1"),
        BoundReport::new(2, g2, "lemma", "-"),
        r3,
    ])
}

/// The stated gamma_1..gamma_3 bounds of the class: Janowski (with `F(c)`,
/// `c <= 2`, as `C(c - 1, -1)`) or Robertson.
pub fn class_gamma_bounds(spec: &ClassSpec, ctx: PrecisionContext) -> Result<[BoundReport; 3]> {
    match *spec {
        ClassSpec::Robertson { alpha } => robertson_gamma_bounds(alpha, ctx),
        _ => match spec.as_janowski() {
            Some((a, b)) => janowski_gamma_bounds(a, b, ctx),
            None => Err(Error::InvalidParameter(format!(
                "no stated gamma bounds for {spec}; see mobius_lemma_bounds"
            ))),
        },
    }
}

/// [`class_gamma_bounds`] where available, otherwise the lemma bounds (the
/// `branch` of those reads `lemma`).
pub fn reference_gamma_bounds(spec: &ClassSpec, ctx: PrecisionContext) -> Result<[BoundReport; 3]> {
    match class_gamma_bounds(spec, ctx) {
        Ok(b) => Ok(b),
        Err(Error::UncoveredRegion(_)) | Err(Error::InvalidParameter(_))
            if !matches!(spec, ClassSpec::Robertson { .. }) =>
        {
            let (p, q) = match *spec {
                ClassSpec::Fc { c } => (c - 1.0, -1.0),
                ClassSpec::Janowski { a, b } => (a, b),
                ClassSpec::Robertson { .. } => unreachable!(),
            };
            mobius_lemma_bounds(p, q, ctx)
        }
        Err(e) => Err(e),
    }
}

/// `(|B|/4, 5 B^2/48, |B|^3/16)`, claimed for `C[0, B]` with `-0.99 <= B < 0`.
pub fn cho_claimed_bounds(b: f64, ctx: PrecisionContext) -> Result<[Real; 3]> {
    if !(-0.99..0.0).contains(&b) {
        return Err(Error::InvalidParameter(format!(
            "the claimed bounds are stated for -0.99 <= B < 0, got {b}"
        )));
    }
    let ab = ctx.real(b).abs();
    Ok([
        ctx.real(&ab / 4u32),
        ab.clone().square() * 5u32 / 48u32,
        ab.square() * ctx.real(b).abs() / 16u32,
    ])
}
