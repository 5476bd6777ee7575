//! Sampled checks of the Schwarz-coefficient estimates
//! `|c_2 + lambda c_1^2| <= max(1, |lambda|)` and
//! `|c_3 + mu c_1 c_2 + nu c_1^3| <= Phi(mu, nu)`.

use serde_json::{json, Value};

use crate::arith::{CNum, PrecisionContext, Real};
use crate::bounds::{ps_bound, ps_classify, RegionId};
use crate::classes::{sample_schwarz, sample_seed, SampleKind, SchwarzSample};
use crate::error::{Error, Result};
use crate::series::decimal;

use super::sharpness::{family_schwarz, maximize_over_family};
use super::{verify_tolerance, Finding};

const FAMILY_BUDGET: usize = 400;

#[derive(Clone, Debug, PartialEq)]
pub enum SchwarzFunctional {
    /// `c_2 + lambda c_1^2`.
    Lambda(CNum),
    /// `c_3 + mu c_1 c_2 + nu c_1^3` for real `(mu, nu)`.
    MuNu(Real, Real),
}

impl SchwarzFunctional {
    pub fn eval(&self, c: &[CNum; 3]) -> CNum {
        match self {
            Self::Lambda(l) => &c[1] + &(l * &(&c[0] * &c[0])),
            Self::MuNu(mu, nu) => {
                let c1c2 = (&c[0] * &c[1]).scale(mu);
                let c13 = (&(&c[0] * &c[0]) * &c[0]).scale(nu);
                &(&c[2] + &c1c2) + &c13
            }
        }
    }

    pub fn bound(&self) -> Result<Real> {
        match self {
            Self::Lambda(l) => {
                let a = l.abs();
                let one = Real::with_val(a.prec(), 1);
                Ok(a.max(&one))
            }
            Self::MuNu(mu, nu) => ps_bound(mu, nu),
        }
    }

    pub fn describe(&self) -> Value {
        match self {
            Self::Lambda(l) => json!({ "lambda": [decimal(l.re()), decimal(l.im())] }),
            Self::MuNu(mu, nu) => json!({
                "mu": decimal(mu),
                "nu": decimal(nu),
                "region": ps_classify(mu, nu).ok().map(|r| r.to_string()),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FunctionalReport {
    pub functional: SchwarzFunctional,
    pub bound: Real,
    pub samples: usize,
    pub seed: u64,
    pub sample_max: Real,
    pub sample_argmax: usize,
    /// Values at `z`, `z^2`, `z^3`, the closed-form extremal when there is one,
    /// and the best member of the two-parameter family found by the optimizer.
    pub extremal_values: Vec<(String, Real)>,
    /// Whether some extremal input reaches the bound to within `1e-6` relative.
    pub attained: bool,
    pub findings: Vec<Finding>,
}

impl FunctionalReport {
    pub fn to_json(&self) -> Value {
        json!({
            "functional": self.functional.describe(),
            "bound": decimal(&self.bound),
            "samples": self.samples,
            "seed": self.seed,
            "sample_max": decimal(&self.sample_max),
            "sample_argmax": self.sample_argmax,
            "extremal_values": self.extremal_values.iter()
                .map(|(k, v)| json!({ "input": k, "value": decimal(v) }))
                .collect::<Vec<_>>(),
            "attained": self.attained,
            "findings": self.findings.iter().map(Finding::to_json).collect::<Vec<_>>(),
        })
    }
}

/// The Schwarz function attaining the Prokhorov-Szynal bound at `(mu, nu)`:
/// `z^3` on D1, D2 and (2, 1), `z` on D3..D7, and on D8, D9
/// `z (c - s z)/(1 - s c z)` with `s = sgn mu`,
/// `c = sqrt((|mu| + 1)/(3(|mu| + nu + 1)))`. Other regions are not handled.
pub fn ps_extremal_schwarz(mu: &Real, nu: &Real, order: usize, ctx: PrecisionContext) -> Result<SchwarzSample> {
    match ps_classify(mu, nu)? {
        RegionId::D1 | RegionId::D2 | RegionId::SpecialPoint21 => SchwarzSample::monomial(ctx, 3, order),
        RegionId::D3 | RegionId::D4 | RegionId::D5 | RegionId::D6 | RegionId::D7 => {
            Ok(SchwarzSample::identity(ctx, order))
        }
        RegionId::D8 | RegionId::D9 => {
            let m = ctx.real(mu.abs_ref());
            let c = (ctx.real(&m + 1u32) / ((m + nu + 1u32) * 3u32)).sqrt();
            let s = if mu.is_sign_negative() { -1 } else { 1 };
            family_schwarz(s, &c, order, ctx)
        }
        other => Err(Error::InvalidParameter(format!(
            "no closed-form extremal for region {other}"
        ))),
    }
}

fn coeffs(w: &SchwarzSample) -> [CNum; 3] {
    [w.coeff(1).clone(), w.coeff(2).clone(), w.coeff(3).clone()]
}

/// Evaluates the functional on `samples` sampled Schwarz functions and on the
/// extremal inputs; sampled values above the bound are findings.
pub fn schwarz_functional_check(
    functional: &SchwarzFunctional,
    samples: usize,
    seed: u64,
    ctx: PrecisionContext,
) -> Result<FunctionalReport> {
    let bound = functional.bound()?;
    let tol = verify_tolerance(ctx);
    let mut sample_max = ctx.real(0);
    let mut sample_argmax = 0;
    let mut findings = Vec::new();
    for i in 0..samples {
        let s = sample_seed(seed, i as u64);
        let w = sample_schwarz(s, SampleKind::Mixed, 3, ctx)?;
        let v = functional.eval(&coeffs(&w)).abs();
        if v > ctx.real(&bound + &tol) {
            findings.push(Finding {
                kind: "schwarz_functional".into(),
                class: "-".into(),
                statement: format!("functional {} bounded by {}", functional.describe(), decimal(&bound)),
                observed: v.clone(),
                bound: bound.clone(),
                seed: Some(s),
                sample_index: Some(i),
                omega: w.describe(),
                bits: ctx.bits(),
                order: 3,
            });
        }
        if v > sample_max {
            sample_max = v;
            sample_argmax = i;
        }
    }

    let mut extremal_values = Vec::new();
    for k in 1..=3usize {
        let mut c = [ctx.zero(), ctx.zero(), ctx.zero()];
        c[k - 1] = ctx.one();
        let name = if k == 1 { "z".to_string() } else { format!("z^{k}") };
        extremal_values.push((name, functional.eval(&c).abs()));
    }
    if let SchwarzFunctional::MuNu(mu, nu) = functional {
        if let Ok(w) = ps_extremal_schwarz(mu, nu, 3, ctx) {
            extremal_values.push(("closed_form".to_string(), functional.eval(&coeffs(&w)).abs()));
        }
    }
    let (fam, witness, _) = maximize_over_family(|c| functional.eval(c).abs(), FAMILY_BUDGET, ctx);
    extremal_values.push((format!("optimizer {}", witness.to_json()), fam));

    let best = extremal_values
        .iter()
        .map(|(_, v)| v.clone())
        .fold(ctx.real(0), |a, b| a.max(&b));
    let slack = bound.clone().abs().max(&ctx.real(1)) * 1e-6f64;
    let attained = ctx.real(&bound - &best) <= slack;

    Ok(FunctionalReport {
        functional: functional.clone(),
        bound,
        samples,
        seed,
        sample_max,
        sample_argmax,
        extremal_values,
        attained,
        findings,
    })
}
