//! Sampled class members checked against the gamma bounds and the weighted
//! inequalities.

use std::thread;

use serde_json::{json, Value};

use crate::arith::{PrecisionContext, Real};
use crate::bounds::{reference_gamma_bounds, BoundReport};
use crate::classes::{
    member_from_schwarz, psi_series_recurrence, sample_schwarz, sample_seed, ClassSpec, SampleKind, SchwarzSample,
};
use crate::error::{Error, Result};
use crate::logcoef::log_coeffs;
use crate::series::{decimal, TruncatedSeries};

use super::{prefix_sums, verify_tolerance, Finding, WeightSpec};

#[derive(Clone, Debug)]
pub struct McConfig {
    pub samples: usize,
    pub seed: u64,
    /// Largest `N` of the partial sums; gamma_1..gamma_3 are always checked.
    pub order: usize,
    pub kind: SampleKind,
    pub weights: Vec<WeightSpec>,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 42,
            order: 16,
            kind: SampleKind::Mixed,
            weights: vec![WeightSpec::NSquared],
        }
    }
}

#[derive(Clone, Debug)]
pub struct GammaMax {
    pub value: Real,
    pub sample_index: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct WeightSummary {
    pub weight: WeightSpec,
    /// Whether `w_n/n^2` is non-increasing up to the order checked.
    pub monotone: bool,
    pub min_margin: Real,
    pub min_margin_sample: usize,
    pub min_margin_n: usize,
    pub checks: usize,
    pub failures: usize,
}

#[derive(Clone, Debug)]
pub struct McReport {
    pub spec: ClassSpec,
    pub samples: usize,
    pub seed: u64,
    pub order: usize,
    pub bits: u32,
    pub bounds: [BoundReport; 3],
    pub max_gamma: [GammaMax; 3],
    pub weights: Vec<WeightSummary>,
    /// Violations of statements that apply to this class and weight.
    pub findings: Vec<Finding>,
    /// Violations outside the proven range (non-monotone weights, `F(c)` with `c > 2`).
    pub exploratory: Vec<Finding>,
    pub warnings: Vec<String>,
}

impl McReport {
    pub fn to_json(&self) -> Value {
        json!({
            "class": self.spec.to_string(),
            "samples": self.samples,
            "seed": self.seed,
            "order": self.order,
            "bits": self.bits,
            "gamma": self.bounds.iter().zip(&self.max_gamma).map(|(b, m)| json!({
                "index": b.gamma_index,
                "max_observed": decimal(&m.value),
                "at_sample": m.sample_index,
                "sample_seed": m.seed,
                "bound": b.to_json(),
            })).collect::<Vec<_>>(),
            "weights": self.weights.iter().map(|w| json!({
                "weight": w.weight.to_string(),
                "reduced_nonincreasing": w.monotone,
                "min_margin": decimal(&w.min_margin),
                "min_margin_sample": w.min_margin_sample,
                "min_margin_n": w.min_margin_n,
                "checks": w.checks,
                "failures": w.failures,
            })).collect::<Vec<_>>(),
            "findings": self.findings.iter().map(Finding::to_json).collect::<Vec<_>>(),
            "exploratory": self.exploratory.iter().map(Finding::to_json).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

struct SampleOutcome {
    index: usize,
    seed: u64,
    omega: Value,
    gamma_abs: [Real; 3],
    /// Per weight: partial sums `(lhs, rhs)` for `N = 1..=order`.
    sums: Vec<Vec<(Real, Real)>>,
}

fn evaluate(
    spec: &ClassSpec,
    index: usize,
    seed: u64,
    omega: &SchwarzSample,
    order: usize,
    psi: &TruncatedSeries,
    weights: &[WeightSpec],
) -> Result<SampleOutcome> {
    let ctx = omega.ctx();
    let n = order.max(3);
    let f = member_from_schwarz(spec, omega, n + 1)?;
    let gammas = log_coeffs(f.series(), n)?;
    let gamma_abs = [gammas.get(1).abs(), gammas.get(2).abs(), gammas.get(3).abs()];
    let sums = weights
        .iter()
        .map(|w| prefix_sums(&gammas.as_slice()[..order], psi, w, ctx))
        .collect::<Result<_>>()?;
    Ok(SampleOutcome {
        index,
        seed,
        omega: omega.describe(),
        gamma_abs,
        sums,
    })
}

/// Draws `cfg.samples` Schwarz functions (sample `i` from
/// `sample_seed(cfg.seed, i)`) and checks the resulting members.
pub fn monte_carlo_class(spec: &ClassSpec, cfg: &McConfig, ctx: PrecisionContext) -> Result<McReport> {
    let order = cfg.order.max(3);
    let omegas = (0..cfg.samples)
        .map(|i| {
            let s = sample_seed(cfg.seed, i as u64);
            sample_schwarz(s, cfg.kind, order, ctx).map(|w| (s, w))
        })
        .collect::<Result<Vec<_>>>()?;
    monte_carlo_members(spec, omegas, cfg, ctx)
}

/// As [`monte_carlo_class`] on explicitly given `(seed, omega)` pairs; the
/// seed is only recorded.
pub fn monte_carlo_members(
    spec: &ClassSpec,
    omegas: Vec<(u64, SchwarzSample)>,
    cfg: &McConfig,
    ctx: PrecisionContext,
) -> Result<McReport> {
    if omegas.is_empty() {
        return Err(Error::InvalidParameter("at least one sample is required".into()));
    }
    for w in &cfg.weights {
        w.validate()?;
    }
    let order = cfg.order;
    let psi = psi_series_recurrence(spec, order.max(1), ctx);
    let bounds = reference_gamma_bounds(spec, ctx)?;

    let threads = thread::available_parallelism().map_or(1, |n| n.get()).min(omegas.len());
    let chunk = omegas.len().div_ceil(threads);
    let outcomes: Vec<SampleOutcome> = thread::scope(|scope| {
        let handles: Vec<_> = omegas
            .chunks(chunk)
            .enumerate()
            .map(|(ci, part)| {
                let psi = &psi;
                let weights = &cfg.weights;
                scope.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(j, (seed, w))| evaluate(spec, ci * chunk + j, *seed, w, order, psi, weights))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sample worker panicked"))
            .collect::<Result<Vec<Vec<_>>>>()
    })?
    .into_iter()
    .flatten()
    .collect();

    let tol = verify_tolerance(ctx);
    let mut warnings = Vec::new();
    if !spec.theorem_backed() {
        warnings.push(format!(
            "{spec} is outside the proven range; inequality results are exploratory"
        ));
    }
    let mut findings = Vec::new();
    let mut exploratory = Vec::new();
    let finding = |kind: &str, statement: String, observed: &Real, bound: &Real, o: &SampleOutcome| Finding {
        kind: kind.to_string(),
        class: spec.to_string(),
        statement,
        observed: observed.clone(),
        bound: bound.clone(),
        seed: Some(o.seed),
        sample_index: Some(o.index),
        omega: o.omega.clone(),
        bits: ctx.bits(),
        order,
    };

    let mut max_gamma: [GammaMax; 3] = std::array::from_fn(|_| GammaMax {
        value: ctx.real(-1),
        sample_index: 0,
        seed: 0,
    });
    for o in &outcomes {
        for k in 0..3 {
            if o.gamma_abs[k] > max_gamma[k].value {
                max_gamma[k] = GammaMax {
                    value: o.gamma_abs[k].clone(),
                    sample_index: o.index,
                    seed: o.seed,
                };
            }
            if o.gamma_abs[k] > ctx.real(&bounds[k].value + &tol) {
                findings.push(finding(
                    "gamma_bound",
                    format!("|gamma_{}| <= bound ({})", k + 1, bounds[k].branch),
                    &o.gamma_abs[k],
                    &bounds[k].value,
                    o,
                ));
            }
        }
    }

    let mut summaries = Vec::new();
    for (wi, w) in cfg.weights.iter().enumerate() {
        let monotone = w.reduced_nonincreasing(order.max(1), ctx)?;
        warnings.extend(w.warnings());
        if !monotone {
            warnings.push(format!(
                "w_n/n^2 increases somewhere for weight {w}; partial sums are exploratory"
            ));
        }
        let proven = monotone && spec.theorem_backed();
        let mut s = WeightSummary {
            weight: w.clone(),
            monotone,
            min_margin: ctx.real(f64::INFINITY),
            min_margin_sample: 0,
            min_margin_n: 0,
            checks: 0,
            failures: 0,
        };
        for o in &outcomes {
            let mut first_failure = None;
            for (i, (lhs, rhs)) in o.sums[wi].iter().enumerate() {
                let margin = ctx.real(rhs - lhs);
                s.checks += 1;
                if margin < s.min_margin {
                    s.min_margin = margin.clone();
                    s.min_margin_sample = o.index;
                    s.min_margin_n = i + 1;
                }
                if margin < -tol.clone() {
                    s.failures += 1;
                    first_failure.get_or_insert((i + 1, lhs.clone(), rhs.clone()));
                }
            }
            if let Some((n, lhs, rhs)) = first_failure {
                let f = finding(
                    "weighted_inequality",
                    format!("sum_(n<={n}) w_n |gamma_n|^2 <= 1/4 sum_(n<={n}) (w_n/n^2) |psi_n|^2, weight {w}"),
                    &lhs,
                    &rhs,
                    o,
                );
                if proven {
                    findings.push(f);
                } else {
                    exploratory.push(f);
                }
            }
        }
        summaries.push(s);
    }

    Ok(McReport {
        spec: *spec,
        samples: outcomes.len(),
        seed: cfg.seed,
        order,
        bits: ctx.bits(),
        bounds,
        max_gamma,
        weights: summaries,
        findings,
        exploratory,
        warnings,
    })
}
