//! Maximization of `|gamma_k|` over Schwarz functions
//! `omega = z (c - s z)/(1 - s c z)`, `s = +-1`, `0 <= c < 1`, and `z, z^2, z^3`.

use serde_json::{json, Value};

use crate::arith::{CNum, PrecisionContext, Real};
use crate::bounds::{reference_gamma_bounds, BoundReport};
use crate::classes::{member_from_schwarz, ClassSpec, SchwarzSample};
use crate::error::{Error, Result};
use crate::logcoef::{gamma123_mobius, log_coeffs};
use crate::series::decimal;

use super::verify_tolerance;

/// Largest `c` probed; `c -> 1` degenerates to `omega = z`, which is probed directly.
const C_MAX: f64 = 1.0 - 1.0 / (1u64 << 20) as f64;
/// Number of grid maxima refined by golden section per sign.
const REFINE_ROUNDS: usize = 3;

/// Where a maximum was found.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyWitness {
    Monomial { k: usize },
    Family { s: i32, c: Real },
}

impl FamilyWitness {
    pub fn to_json(&self) -> Value {
        match self {
            Self::Monomial { k } => json!({ "kind": "monomial", "k": k }),
            Self::Family { s, c } => json!({ "kind": "family", "s": s, "c": decimal(c) }),
        }
    }
}

/// `(c_1, c_2, c_3)` of `z (c - s z)/(1 - s c z)`: `c`, `s (c^2 - 1)`, `c^3 - c`.
pub fn family_coeffs(s: i32, c: &Real, ctx: PrecisionContext) -> [CNum; 3] {
    let c2 = ctx.real(c * c);
    let second = ctx.real(&c2 - 1u32) * s;
    let third = ctx.real(&c2 * c) - c;
    [ctx.from_real(c), ctx.from_real(&second), ctx.from_real(&third)]
}

/// The family member as a Blaschke product: rotation `-s`, zero `s c`.
pub fn family_schwarz(s: i32, c: &Real, order: usize, ctx: PrecisionContext) -> Result<SchwarzSample> {
    let rotation = ctx.complex(-(s as f64), 0.0);
    let zero = ctx.from_real(&ctx.real(c * s));
    SchwarzSample::blaschke(rotation, vec![zero], order)
}

fn monomial_coeffs(k: usize, ctx: PrecisionContext) -> [CNum; 3] {
    let mut out = [ctx.zero(), ctx.zero(), ctx.zero()];
    out[k - 1] = ctx.one();
    out
}

/// Grid search in `c` for each sign, then golden-section refinement around
/// the best grid points. Returns the best value, its witness and the number
/// of objective evaluations.
pub(crate) fn maximize_over_family<F>(
    objective: F,
    budget: usize,
    ctx: PrecisionContext,
) -> (Real, FamilyWitness, usize)
where
    F: Fn(&[CNum; 3]) -> Real,
{
    let mut evals = 0usize;
    let mut best = ctx.real(-1);
    let mut witness = FamilyWitness::Monomial { k: 1 };
    let tol = verify_tolerance(ctx);
    for k in 1..=3 {
        let v = objective(&monomial_coeffs(k, ctx));
        evals += 1;
        if v > ctx.real(&best + &tol) {
            best = v;
            witness = FamilyWitness::Monomial { k };
        }
    }

    let per_sign = budget.saturating_sub(3) / 2;
    let grid = (per_sign / 2).max(8);
    let golden_iters = per_sign.saturating_sub(grid) / REFINE_ROUNDS;
    let step = ctx.real(C_MAX) / (grid - 1) as u32;
    for s in [1, -1] {
        let at = |c: &Real| objective(&family_coeffs(s, c, ctx));
        let values: Vec<Real> = (0..grid).map(|i| at(&ctx.real(&step * i as u32))).collect();
        evals += grid;
        // local maxima of the grid, best first
        let mut peaks: Vec<usize> = (0..grid)
            .filter(|&i| (i == 0 || values[i] >= values[i - 1]) && (i + 1 == grid || values[i] >= values[i + 1]))
            .collect();
        peaks.sort_by(|a, b| values[*b].partial_cmp(&values[*a]).unwrap_or(std::cmp::Ordering::Equal));
        for &i in peaks.iter().take(REFINE_ROUNDS) {
            let lo = ctx.real(&step * i.saturating_sub(1) as u32);
            let hi = ctx.real(&step * (i + 1).min(grid - 1) as u32);
            let (c, v, used) = golden_max(&at, lo, hi, golden_iters, ctx);
            evals += used;
            let (c, v) = if v >= values[i] {
                (c, v)
            } else {
                (ctx.real(&step * i as u32), values[i].clone())
            };
            if v > ctx.real(&best + &tol) {
                best = v;
                witness = FamilyWitness::Family { s, c };
            }
        }
    }
    (best, witness, evals)
}

fn golden_max<F>(f: &F, mut lo: Real, mut hi: Real, iters: usize, ctx: PrecisionContext) -> (Real, Real, usize)
where
    F: Fn(&Real) -> Real,
{
    // 1/phi
    let inv_phi = (ctx.real(5).sqrt() - 1u32) / 2u32;
    let mut x1 = ctx.real(&hi - &lo) * &inv_phi;
    x1 = ctx.real(&hi - &x1);
    let mut x2 = ctx.real(&hi - &lo) * &inv_phi + &lo;
    let mut f1 = f(&x1);
    let mut f2 = f(&x2);
    let mut used = 2;
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = ctx.real(&hi - &lo) * &inv_phi + &lo;
            f2 = f(&x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = ctx.real(&hi - &lo) * &inv_phi;
            x1 = ctx.real(&hi - &x1);
            f1 = f(&x1);
        }
        used += 1;
    }
    if f1 >= f2 {
        (x1, f1, used)
    } else {
        (x2, f2, used)
    }
}

/// Outcome of [`sharpness_search_gamma`].
#[derive(Clone, Debug)]
pub struct SharpnessResult {
    pub spec: ClassSpec,
    pub gamma_index: u8,
    pub best: Real,
    pub witness: FamilyWitness,
    /// `|gamma_k|` recomputed through the member series at the witness.
    pub series_check: Real,
    pub bound: BoundReport,
    pub evaluations: usize,
}

impl SharpnessResult {
    /// `best - bound`; positive beyond tolerance means the bound is violated.
    pub fn excess(&self) -> Real {
        Real::with_val(self.best.prec(), &self.best - &self.bound.value)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.spec.to_string(),
            "gamma_index": self.gamma_index,
            "best": decimal(&self.best),
            "witness": self.witness.to_json(),
            "series_check": decimal(&self.series_check),
            "bound": self.bound.to_json(),
            "gap": decimal(&ctx_sub(&self.bound.value, &self.best)),
            "evaluations": self.evaluations,
        })
    }
}

fn ctx_sub(a: &Real, b: &Real) -> Real {
    Real::with_val(a.prec(), a - b)
}

/// Largest `|gamma_k|`, `k = gamma_index`, over the family, refined with at
/// most about `budget` evaluations.
pub fn sharpness_search_gamma(
    spec: &ClassSpec,
    gamma_index: u8,
    budget: usize,
    ctx: PrecisionContext,
) -> Result<SharpnessResult> {
    if !(1..=3).contains(&gamma_index) {
        return Err(Error::InvalidParameter(format!(
            "gamma index must be 1, 2 or 3, got {gamma_index}"
        )));
    }
    let (p, q) = spec.phi_params(ctx);
    let k = gamma_index as usize - 1;
    let objective = |c: &[CNum; 3]| gamma123_mobius([&c[0], &c[1], &c[2]], &p, &q)[k].abs();
    let (best, witness, evaluations) = maximize_over_family(objective, budget, ctx);

    let omega = match &witness {
        FamilyWitness::Monomial { k } => SchwarzSample::monomial(ctx, *k, 3)?,
        FamilyWitness::Family { s, c } => family_schwarz(*s, c, 3, ctx)?,
    };
    let f = member_from_schwarz(spec, &omega, 4)?;
    let series_check = log_coeffs(f.series(), 3)?.get(k + 1).abs();
    let bound = reference_gamma_bounds(spec, ctx)?[k].clone();
    Ok(SharpnessResult {
        spec: *spec,
        gamma_index,
        best,
        witness,
        series_check,
        bound,
        evaluations,
    })
}
