//! Numerical verification: weighted partial-sum inequalities, Monte-Carlo
//! domination of the gamma bounds, Schwarz-coefficient functionals and
//! sharpness search.

mod functional;
mod monte_carlo;
mod sharpness;

pub use crate::bounds::WeightSpec;
pub use functional::{ps_extremal_schwarz, schwarz_functional_check, FunctionalReport, SchwarzFunctional};
pub use monte_carlo::{monte_carlo_class, monte_carlo_members, GammaMax, McConfig, McReport, WeightSummary};
pub use sharpness::{family_coeffs, family_schwarz, sharpness_search_gamma, FamilyWitness, SharpnessResult};

use serde_json::{json, Value};

use crate::arith::{PrecisionContext, Real};
use crate::classes::{psi_series_recurrence, ClassMember};
use crate::error::{Error, Result};
use crate::logcoef::log_coeffs;
use crate::series::{decimal, TruncatedSeries};

/// Slack of the verification tolerance `2^-(bits-20)`.
pub const VERIFY_SLACK: u32 = 20;

/// Absolute tolerance used by every verification verdict.
pub fn verify_tolerance(ctx: PrecisionContext) -> Real {
    ctx.tolerance(VERIFY_SLACK)
}

/// A verified violation of a stated bound, with what is needed to reproduce it.
#[derive(Clone, Debug)]
pub struct Finding {
    pub kind: String,
    pub class: String,
    pub statement: String,
    pub observed: Real,
    pub bound: Real,
    pub seed: Option<u64>,
    pub sample_index: Option<usize>,
    pub omega: Value,
    pub bits: u32,
    pub order: usize,
}

impl Finding {
    pub fn excess(&self) -> Real {
        Real::with_val(self.observed.prec(), &self.observed - &self.bound)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "class": self.class,
            "statement": self.statement,
            "observed": decimal(&self.observed),
            "bound": decimal(&self.bound),
            "excess": decimal(&self.excess()),
            "seed": self.seed,
            "sample_index": self.sample_index,
            "omega": self.omega,
            "bits": self.bits,
            "order": self.order,
        })
    }
}

/// `sum_{n<=N} w_n |gamma_n|^2` against `1/4 sum_{n<=N} (w_n/n^2) |psi_n|^2`.
#[derive(Clone, Debug)]
pub struct IneqReport {
    pub weight: WeightSpec,
    pub n: usize,
    pub lhs: Real,
    pub rhs: Real,
    pub margin: Real,
    pub pass: bool,
}

impl IneqReport {
    fn new(weight: &WeightSpec, n: usize, lhs: Real, rhs: Real, ctx: PrecisionContext) -> Self {
        let margin = ctx.real(&rhs - &lhs);
        let pass = margin >= -verify_tolerance(ctx);
        Self {
            weight: weight.clone(),
            n,
            lhs,
            rhs,
            margin,
            pass,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": self.weight.to_string(),
            "n": self.n,
            "lhs": decimal(&self.lhs),
            "rhs": decimal(&self.rhs),
            "margin": decimal(&self.margin),
            "pass": self.pass,
        })
    }
}

/// Running `(lhs, rhs)` for `N = 1..=gammas.len()`.
pub(crate) fn prefix_sums(
    gammas: &[crate::arith::CNum],
    psi: &TruncatedSeries,
    weight: &WeightSpec,
    ctx: PrecisionContext,
) -> Result<Vec<(Real, Real)>> {
    let mut lhs = ctx.real(0);
    let mut rhs = ctx.real(0);
    let mut out = Vec::with_capacity(gammas.len());
    for (i, g) in gammas.iter().enumerate() {
        let n = i + 1;
        let w = weight.weight(n, ctx)?;
        lhs += ctx.real(&w * &g.norm_sqr());
        rhs += weight.reduced(n, ctx)? * psi.coeff(n).norm_sqr() / 4u32;
        out.push((lhs.clone(), rhs.clone()));
    }
    Ok(out)
}

/// Reports for every partial sum `N' = 1..=n`.
pub fn weighted_prefix_reports(f: &ClassMember, weight: &WeightSpec, n: usize) -> Result<Vec<IneqReport>> {
    weight.validate()?;
    let ctx = f.ctx();
    if f.order() < n + 1 {
        return Err(Error::InvalidParameter(format!(
            "{n} log coefficients need the member to order {}, have {}",
            n + 1,
            f.order()
        )));
    }
    let gammas = log_coeffs(f.series(), n)?;
    let psi = psi_series_recurrence(f.spec(), n, ctx);
    Ok(prefix_sums(gammas.as_slice(), &psi, weight, ctx)?
        .into_iter()
        .enumerate()
        .map(|(i, (l, r))| IneqReport::new(weight, i + 1, l, r, ctx))
        .collect())
}

/// The weighted inequality at order `n` for a verified class member.
pub fn check_weighted_ineq(f: &ClassMember, weight: &WeightSpec, n: usize) -> Result<IneqReport> {
    if n == 0 {
        let ctx = f.ctx();
        return Ok(IneqReport::new(weight, 0, ctx.real(0), ctx.real(0), ctx));
    }
    let mut all = weighted_prefix_reports(f, weight, n)?;
    Ok(all.pop().expect("n >= 1"))
}
