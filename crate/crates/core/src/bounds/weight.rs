use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;

use crate::arith::{PrecisionContext, Real};
use crate::error::{Error, Result};

/// Weights `w_n` of the weighted sums `sum w_n |gamma_n|^2`.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightSpec {
    /// `w_n = n^2`.
    NSquared,
    /// `w_n = (n + 1)^t`; `t <= 2` is the proven range.
    TPower(f64),
    /// `w_n = (n/(n + 1))^2`.
    Roth,
    /// `w_1, w_2, ...` as given.
    Custom(Vec<f64>),
}

impl WeightSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::TPower(t) if !t.is_finite() => {
                Err(Error::InvalidParameter(format!("weight exponent {t} is not finite")))
            }
            Self::Custom(ws) if ws.is_empty() => Err(Error::InvalidParameter("custom weights are empty".into())),
            Self::Custom(ws) => match ws.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
                Some(w) => Err(Error::InvalidParameter(format!("weight {w} is not positive"))),
                None => Ok(()),
            },
            _ => Ok(()),
        }
    }

    /// `w_n` for `n >= 1`.
    pub fn weight(&self, n: usize, ctx: PrecisionContext) -> Result<Real> {
        if n == 0 {
            return Err(Error::InvalidParameter("weights are indexed from 1".into()));
        }
        match self {
            Self::NSquared => Ok(ctx.real(n as u64).square()),
            Self::TPower(t) => Ok(ctx.real(n as u64 + 1).pow(&ctx.real(*t))),
            Self::Roth => Ok((ctx.real(n as u64) / (n as u64 + 1)).square()),
            Self::Custom(ws) => ws
                .get(n - 1)
                .map(|w| ctx.real(*w))
                .ok_or_else(|| Error::InvalidParameter(format!("{} custom weights, index {n} requested", ws.len()))),
        }
    }

    /// `w_n/n^2`, the weight applied to `|2 n gamma_n|^2/4`.
    pub fn reduced(&self, n: usize, ctx: PrecisionContext) -> Result<Real> {
        Ok(self.weight(n, ctx)? / ctx.real(n as u64).square())
    }

    /// Whether `w_n/n^2` is non-increasing for `n = 1..=order`, the hypothesis
    /// the partial-sum form of the inequality relies on.
    pub fn reduced_nonincreasing(&self, order: usize, ctx: PrecisionContext) -> Result<bool> {
        let mut prev: Option<Real> = None;
        for n in 1..=order {
            let r = self.reduced(n, ctx)?;
            if prev.as_ref().is_some_and(|p| r > *p) {
                return Ok(false);
            }
            prev = Some(r);
        }
        Ok(true)
    }

    /// Conditions that put a computation outside the proven range.
    pub fn warnings(&self) -> Vec<String> {
        match self {
            Self::TPower(t) if *t > 2.0 => {
                vec![format!("weight (n+1)^{t} has t > 2; results are exploratory")]
            }
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NSquared => f.write_str("n2"),
            Self::TPower(t) => write!(f, "t={t}"),
            Self::Roth => f.write_str("roth"),
            Self::Custom(ws) => {
                let parts: Vec<String> = ws.iter().map(f64::to_string).collect();
                write!(f, "custom={}", parts.join(","))
            }
        }
    }
}

impl FromStr for WeightSpec {
    type Err = Error;

    /// Accepts `n2`, `t=<t>`, `roth` and `custom=<w1>,<w2>,...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |what: &str| Error::Parse(format!("bad {what} in weight '{s}'"));
        let spec = match s.split_once('=') {
            None if s.eq_ignore_ascii_case("n2") => Self::NSquared,
            None if s.eq_ignore_ascii_case("roth") => Self::Roth,
            Some((k, v)) if k.eq_ignore_ascii_case("t") => Self::TPower(v.trim().parse().map_err(|_| bad("exponent"))?),
            Some((k, v)) if k.eq_ignore_ascii_case("custom") => Self::Custom(
                v.split(',')
                    .map(|w| w.trim().parse::<f64>().map_err(|_| bad("custom weight")))
                    .collect::<Result<_>>()?,
            ),
            _ => return Err(Error::Parse(format!("unknown weight '{s}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for text in ["n2", "roth", "t=1.5", "t=-1", "custom=1,0.5,0.25"] {
            let w: WeightSpec = text.parse().unwrap();
            assert_eq!(w.to_string().parse::<WeightSpec>().unwrap(), w);
        }
        assert!("t=x".parse::<WeightSpec>().is_err());
        assert!("custom=1,-2".parse::<WeightSpec>().is_err());
        assert!("square".parse::<WeightSpec>().is_err());
    }

    #[test]
    fn monotonicity_of_reduced_weights() {
        let ctx = PrecisionContext::default();
        for w in [
            WeightSpec::NSquared,
            WeightSpec::Roth,
            WeightSpec::TPower(-1.0),
            WeightSpec::TPower(0.0),
            WeightSpec::TPower(2.0),
        ] {
            assert!(w.reduced_nonincreasing(64, ctx).unwrap(), "{w}");
            assert!(w.warnings().is_empty());
        }
        let w = WeightSpec::TPower(3.0);
        assert!(!w.reduced_nonincreasing(64, ctx).unwrap());
        assert_eq!(w.warnings().len(), 1);
        let w = WeightSpec::Custom(vec![1.0, 8.0]);
        assert!(!w.reduced_nonincreasing(2, ctx).unwrap());
        assert!(w.weight(3, ctx).is_err());
    }

    #[test]
    fn values() {
        let ctx = PrecisionContext::default();
        assert_eq!(WeightSpec::NSquared.weight(7, ctx).unwrap(), 49u32);
        assert_eq!(WeightSpec::TPower(2.0).weight(3, ctx).unwrap(), 16u32);
        assert_eq!(WeightSpec::Roth.weight(1, ctx).unwrap(), 0.25f64);
    }
}
