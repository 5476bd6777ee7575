//! Schwarz functions `omega` (analytic in the disk, `omega(0) = 0`,
//! `|omega| < 1`) used to build class members.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use serde_json::{json, Value};

use crate::arith::{CNum, PrecisionContext, Real};
use crate::error::{Error, Result};
use crate::series::{decimal, TruncatedSeries};

/// Number of equispaced unit-circle points in the boundary check.
pub const BOUNDARY_SAMPLES: usize = 720;

const POLY_NORM_SAMPLES: usize = 2048;
const MAX_POLE_RADIUS: f64 = 0.95;

#[derive(Clone, Debug, PartialEq)]
pub enum SchwarzKind {
    /// `z^k`.
    Monomial { k: usize },
    /// `rotation * z * prod (z - a)/(1 - conj(a) z)`.
    MobiusBlaschke { rotation: CNum, poles: Vec<CNum> },
    /// `z * sum coeffs[j] z^j`, already scaled into the disk.
    ScaledPolynomial { coeffs: Vec<CNum> },
}

/// A validated Schwarz function together with its Taylor series.
#[derive(Clone, Debug, PartialEq)]
pub struct SchwarzSample {
    kind: SchwarzKind,
    series: TruncatedSeries,
}

/// `e^{2 pi i j/720}`, `j = 0..720`, cached per precision.
pub fn boundary_points(ctx: PrecisionContext) -> Arc<Vec<CNum>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<CNum>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap_or_else(|p| p.into_inner());
    map.entry(ctx.bits())
        .or_insert_with(|| {
            let two_pi = ctx.pi() * 2u32;
            let pts = (0..BOUNDARY_SAMPLES)
                .map(|j| {
                    let t = ctx.real(&two_pi * j as u32) / BOUNDARY_SAMPLES as u32;
                    CNum::new(t.clone().cos(), t.sin())
                })
                .collect();
            Arc::new(pts)
        })
        .clone()
}

impl SchwarzSample {
    pub fn identity(ctx: PrecisionContext, order: usize) -> Self {
        Self::monomial(ctx, 1, order).expect("k = 1 is valid")
    }

    pub fn monomial(ctx: PrecisionContext, k: usize, order: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSchwarz("z^0 does not vanish at 0".into()));
        }
        Self::checked(SchwarzKind::Monomial { k }, TruncatedSeries::monomial(ctx, k, order))
    }

    pub fn blaschke(rotation: CNum, poles: Vec<CNum>, order: usize) -> Result<Self> {
        let ctx = rotation.ctx();
        let dev = (rotation.abs() - 1u32).abs();
        if dev > ctx.tolerance(8) {
            return Err(Error::InvalidSchwarz(format!(
                "rotation {rotation:.12} is not unimodular"
            )));
        }
        if let Some(a) = poles.iter().find(|a| a.norm_sqr() >= 1u32) {
            return Err(Error::InvalidSchwarz(format!(
                "Blaschke zero {a:.12} is not inside the disk"
            )));
        }
        let mut prod = TruncatedSeries::constant(rotation.clone(), order);
        for a in &poles {
            prod = prod.mul(&blaschke_factor(a, order));
        }
        let series = prod.mul_z().truncate(order);
        Self::checked(SchwarzKind::MobiusBlaschke { rotation, poles }, series)
    }

    /// `z * p(z)` for the given coefficients of `p`; rejected unless the
    /// boundary check passes.
    pub fn polynomial(coeffs: Vec<CNum>, order: usize) -> Result<Self> {
        let ctx = coeffs
            .first()
            .ok_or_else(|| Error::InvalidSchwarz("empty polynomial".into()))?
            .ctx();
        let mut all = vec![ctx.zero()];
        all.extend(coeffs.iter().cloned());
        let series = TruncatedSeries::from_coeffs(all)?.pad(order);
        Self::checked(SchwarzKind::ScaledPolynomial { coeffs }, series)
    }

    fn checked(kind: SchwarzKind, series: TruncatedSeries) -> Result<Self> {
        let s = Self { kind, series };
        s.check_boundary()?;
        Ok(s)
    }

    /// The same function with its series recomputed to `order`.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        let ctx = self.series.ctx();
        match &self.kind {
            SchwarzKind::Monomial { k } => Self::monomial(ctx, *k, order),
            SchwarzKind::MobiusBlaschke { rotation, poles } => Self::blaschke(rotation.clone(), poles.clone(), order),
            SchwarzKind::ScaledPolynomial { coeffs } => Self::polynomial(coeffs.clone(), order),
        }
    }

    pub fn kind(&self) -> &SchwarzKind {
        &self.kind
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.series.ctx()
    }

    /// Taylor coefficient `c_n`.
    pub fn coeff(&self, n: usize) -> &CNum {
        self.series.coeff(n)
    }

    /// `max |omega|^2` over the boundary sample points.
    pub fn boundary_sup_sqr(&self) -> Real {
        let ctx = self.ctx();
        let pts = boundary_points(ctx);
        let mut worst = ctx.real(0);
        match &self.kind {
            SchwarzKind::Monomial { k } => {
                for z in pts.iter() {
                    let m = z.norm_sqr().pow(*k as u32);
                    if m > worst {
                        worst = m;
                    }
                }
            }
            SchwarzKind::MobiusBlaschke { rotation, poles } => {
                let rot = rotation.norm_sqr();
                let mods: Vec<Real> = poles.iter().map(CNum::norm_sqr).collect();
                for z in pts.iter() {
                    let s = z.norm_sqr();
                    let mut m = ctx.real(&rot * &s);
                    for (a, a2) in poles.iter().zip(&mods) {
                        // |z - a|^2 / |1 - conj(a) z|^2
                        let t = ctx.real(a.re() * z.re()) + ctx.real(a.im() * z.im());
                        let t2 = t * 2u32;
                        let num = ctx.real(&s + a2) - &t2;
                        let den = ctx.real(a2 * &s) + 1u32 - &t2;
                        m *= num;
                        m /= den;
                    }
                    if m > worst {
                        worst = m;
                    }
                }
            }
            SchwarzKind::ScaledPolynomial { coeffs } => {
                for z in pts.iter() {
                    let mut acc = ctx.zero();
                    for c in coeffs.iter().rev() {
                        acc = &(&acc * z) + c;
                    }
                    let m = ctx.real(&acc.norm_sqr() * &z.norm_sqr());
                    if m > worst {
                        worst = m;
                    }
                }
            }
        }
        worst
    }

    /// Fails unless `|omega| <= 1 + 2^-(bits-16)` at every boundary sample.
    pub fn check_boundary(&self) -> Result<()> {
        if let SchwarzKind::ScaledPolynomial { coeffs } = &self.kind {
            if poly_f64_sup(coeffs) <= 1.0 - 1e-9 {
                return Ok(());
            }
        }
        let ctx = self.ctx();
        let limit = ctx.real(1) + ctx.tolerance(16);
        let limit_sqr = ctx.real(&limit * &limit);
        let sup = self.boundary_sup_sqr();
        if sup > limit_sqr {
            return Err(Error::InvalidSchwarz(format!(
                "|omega| reaches {} on the unit circle",
                decimal(&sup.sqrt())
            )));
        }
        Ok(())
    }

    /// Parameters sufficient to rebuild the sample, for reports.
    pub fn describe(&self) -> Value {
        let pair = |c: &CNum| json!([decimal(c.re()), decimal(c.im())]);
        match &self.kind {
            SchwarzKind::Monomial { k } => json!({ "kind": "monomial", "k": k }),
            SchwarzKind::MobiusBlaschke { rotation, poles } => json!({
                "kind": "mobius_blaschke",
                "rotation": pair(rotation),
                "poles": poles.iter().map(pair).collect::<Vec<_>>(),
            }),
            SchwarzKind::ScaledPolynomial { coeffs } => json!({
                "kind": "scaled_polynomial",
                "coeffs": coeffs.iter().map(pair).collect::<Vec<_>>(),
            }),
        }
    }
}

/// `(z - a)/(1 - conj(a) z) = -a + (1 - |a|^2) sum conj(a)^{k-1} z^k`.
fn blaschke_factor(a: &CNum, order: usize) -> TruncatedSeries {
    let ctx = a.ctx();
    let abar = a.conj();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(-a.clone());
    let mut term = ctx.from_real(&(ctx.real(1) - a.norm_sqr()));
    for _ in 1..=order {
        coeffs.push(term.clone());
        term = &term * &abar;
    }
    TruncatedSeries::from_coeffs(coeffs).expect("non-empty")
}

/// Upper estimate of `max |p|` on the circle from double-precision samples,
/// inflated to cover rounding.
fn poly_f64_sup(coeffs: &[CNum]) -> f64 {
    let cs: Vec<(f64, f64)> = coeffs.iter().map(CNum::to_f64_pair).collect();
    let l1: f64 = cs.iter().map(|(r, i)| r.hypot(*i)).sum();
    let deg = cs.len().saturating_sub(1) as f64;
    let mut worst = 0.0f64;
    for j in 0..BOUNDARY_SAMPLES {
        let m = eval_f64(&cs, TAU * j as f64 / BOUNDARY_SAMPLES as f64);
        worst = worst.max(m);
    }
    worst + 1e-12 * (1.0 + deg) * (1.0 + l1)
}

fn eval_f64(cs: &[(f64, f64)], theta: f64) -> f64 {
    let (zr, zi) = (theta.cos(), theta.sin());
    let (mut ar, mut ai) = (0.0f64, 0.0f64);
    for &(r, i) in cs.iter().rev() {
        let nr = ar * zr - ai * zi + r;
        let ni = ar * zi + ai * zr + i;
        ar = nr;
        ai = ni;
    }
    ar.hypot(ai)
}

/// Which family `sample_schwarz` draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Monomial,
    MobiusBlaschke,
    ScaledPolynomial,
    /// 10% monomials, 55% Blaschke products, 35% polynomials.
    Mixed,
}

/// Seed of the `index`-th sample of a run seeded with `seed` (SplitMix64
/// mixing, so neighbouring indices give unrelated streams).
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    fn mix(mut x: u64) -> u64 {
        x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        x ^ (x >> 31)
    }
    mix(seed ^ mix(index))
}

/// Draws one Schwarz function deterministically from `seed`.
///
/// Blaschke products have at most 3 finite zeros, each of modulus below 0.95;
/// polynomials have degree at most 5 and are divided by 1.01 times their
/// largest modulus on 2048 boundary points.
pub fn sample_schwarz(seed: u64, kind: SampleKind, order: usize, ctx: PrecisionContext) -> Result<SchwarzSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = match kind {
        SampleKind::Mixed => match rng.random_range(0..100u32) {
            0..10 => SampleKind::Monomial,
            10..65 => SampleKind::MobiusBlaschke,
            _ => SampleKind::ScaledPolynomial,
        },
        k => k,
    };
    match kind {
        SampleKind::Monomial => SchwarzSample::monomial(ctx, rng.random_range(1..=3), order),
        SampleKind::MobiusBlaschke => {
            let theta = rng.random_range(0.0..TAU);
            let rotation = ctx.complex(theta.cos(), theta.sin());
            let rotation = normalize_unimodular(rotation);
            let m = rng.random_range(0..=3usize);
            let poles = (0..m)
                .map(|_| {
                    let r = MAX_POLE_RADIUS * rng.random::<f64>().sqrt();
                    let phi = rng.random_range(0.0..TAU);
                    ctx.complex(r * phi.cos(), r * phi.sin())
                })
                .collect();
            SchwarzSample::blaschke(rotation, poles, order)
        }
        SampleKind::ScaledPolynomial => {
            let deg = rng.random_range(0..=5usize);
            let raw: Vec<(f64, f64)> = (0..=deg)
                .map(|_| (rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
                .collect();
            let norm = (0..POLY_NORM_SAMPLES)
                .map(|j| eval_f64(&raw, TAU * j as f64 / POLY_NORM_SAMPLES as f64))
                .fold(0.0f64, f64::max);
            if norm < 1e-12 {
                return Ok(SchwarzSample::identity(ctx, order));
            }
            let scale = 1.01 * norm;
            let coeffs = raw.iter().map(|&(r, i)| ctx.complex(r / scale, i / scale)).collect();
            SchwarzSample::polynomial(coeffs, order)
        }
        SampleKind::Mixed => unreachable!("resolved above"),
    }
}

/// `u/|u|` at full precision.
fn normalize_unimodular(u: CNum) -> CNum {
    let r = u.abs();
    let (re, im) = u.into_parts();
    CNum::new(re / &r, im / &r)
}
