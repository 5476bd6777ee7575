use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use crate::arith::{CNum, PrecisionContext, Real};
use crate::error::{Error, Result};

/// One of the three convex-type classes, with validated parameters.
///
/// Each class is `C(phi)` for a Mobius-type `phi(z) = (1 + P z)/(1 + Q z)`:
/// `F(c)` has `(P, Q) = (c - 1, -1)`, Janowski `C(A, B)` has `(A, B)`, and the
/// Robertson class `S_alpha` has `(e^{-2 i alpha}, -1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClassSpec {
    Fc { c: f64 },
    Janowski { a: f64, b: f64 },
    Robertson { alpha: f64 },
}

impl ClassSpec {
    pub fn fc(c: f64) -> Result<Self> {
        Self::Fc { c }.validated()
    }

    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        Self::Janowski { a, b }.validated()
    }

    pub fn robertson(alpha: f64) -> Result<Self> {
        Self::Robertson { alpha }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        match self {
            Self::Fc { c } if c.is_finite() && c > 0.0 && c <= 3.0 => Ok(self),
            Self::Fc { c } => Err(Error::InvalidSpec(format!("F(c) needs 0 < c <= 3, got {c}"))),
            Self::Janowski { a, b } if a.is_finite() && b.is_finite() && -1.0 <= b && b < a && a <= 1.0 => Ok(self),
            Self::Janowski { a, b } => Err(Error::InvalidSpec(format!(
                "C(A, B) needs -1 <= B < A <= 1, got A = {a}, B = {b}"
            ))),
            Self::Robertson { alpha } if alpha.is_finite() && alpha.abs() < FRAC_PI_2 => Ok(self),
            Self::Robertson { alpha } => Err(Error::InvalidSpec(format!("S_alpha needs |alpha| < pi/2, got {alpha}"))),
        }
    }

    /// False for `F(c)` with `c > 2`, where the weighted-series inequalities
    /// carry no proof and results are exploratory.
    pub fn theorem_backed(&self) -> bool {
        !matches!(self, Self::Fc { c } if *c > 2.0)
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::Fc { .. } => "fc",
            Self::Janowski { .. } => "janowski",
            Self::Robertson { .. } => "robertson",
        }
    }

    /// `A = e^{-2 i alpha}` for the Robertson class.
    pub fn robertson_a(alpha: f64, ctx: PrecisionContext) -> CNum {
        let two_alpha = ctx.real(alpha) * 2u32;
        CNum::new(two_alpha.clone().cos(), -two_alpha.sin())
    }

    /// `(P, Q)` with `phi(z) = (1 + P z)/(1 + Q z)`.
    pub fn phi_params(&self, ctx: PrecisionContext) -> (CNum, CNum) {
        match *self {
            Self::Fc { c } => (ctx.from_real(&(ctx.real(c) - 1u32)), ctx.complex(-1.0, 0.0)),
            Self::Janowski { a, b } => (ctx.complex(a, 0.0), ctx.complex(b, 0.0)),
            Self::Robertson { alpha } => (Self::robertson_a(alpha, ctx), ctx.complex(-1.0, 0.0)),
        }
    }

    /// The Janowski pair an `F(c)` class coincides with (`A = c - 1, B = -1`),
    /// when it lies in the Janowski range.
    pub fn as_janowski(&self) -> Option<(f64, f64)> {
        match *self {
            Self::Janowski { a, b } => Some((a, b)),
            Self::Fc { c } if c <= 2.0 => Some((c - 1.0, -1.0)),
            _ => None,
        }
    }

    pub fn param_real(&self, ctx: PrecisionContext) -> Real {
        match *self {
            Self::Fc { c } => ctx.real(c),
            Self::Janowski { a, .. } => ctx.real(a),
            Self::Robertson { alpha } => ctx.real(alpha),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fc { c } => write!(f, "fc={c}"),
            Self::Janowski { a, b } => write!(f, "janowski={a},{b}"),
            Self::Robertson { alpha } => write!(f, "robertson={alpha}"),
        }
    }
}

fn parse_num(text: &str, whole: &str) -> Result<f64> {
    text.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("bad number '{text}' in class '{whole}'")))
}

impl FromStr for ClassSpec {
    type Err = Error;

    /// Accepts `fc=<c>`, `janowski=<A>,<B>` and `robertson=<alpha>`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("class '{s}' must look like name=params")))?;
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "fc" => Self::Fc { c: parse_num(args, s)? },
            "janowski" => {
                let (a, b) = args
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("janowski needs A,B in '{s}'")))?;
                Self::Janowski {
                    a: parse_num(a, s)?,
                    b: parse_num(b, s)?,
                }
            }
            "robertson" => Self::Robertson {
                alpha: parse_num(args, s)?,
            },
            other => return Err(Error::Parse(format!("unknown class '{other}'"))),
        };
        spec.validated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: ClassSpec = "fc=2".parse().unwrap();
        assert_eq!(s, ClassSpec::Fc { c: 2.0 });
        let s: ClassSpec = "janowski=0,-0.795".parse().unwrap();
        assert_eq!(s, ClassSpec::Janowski { a: 0.0, b: -0.795 });
        assert_eq!(s.to_string(), "janowski=0,-0.795");
        let s: ClassSpec = "robertson=-0.3".parse().unwrap();
        assert_eq!(s.to_string().parse::<ClassSpec>().unwrap(), s);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("fc=0".parse::<ClassSpec>().is_err());
        assert!("fc=3.5".parse::<ClassSpec>().is_err());
        assert!("janowski=0.5,0.5".parse::<ClassSpec>().is_err());
        assert!("janowski=1,-1.2".parse::<ClassSpec>().is_err());
        assert!("robertson=1.6".parse::<ClassSpec>().is_err());
        assert!("starlike=1".parse::<ClassSpec>().is_err());
        assert!("janowski=1".parse::<ClassSpec>().is_err());
        assert!("fc".parse::<ClassSpec>().is_err());
    }

    #[test]
    fn exploratory_range_is_flagged() {
        assert!(ClassSpec::fc(2.0).unwrap().theorem_backed());
        assert!(!ClassSpec::fc(2.5).unwrap().theorem_backed());
        assert_eq!(ClassSpec::fc(1.5).unwrap().as_janowski(), Some((0.5, -1.0)));
        assert_eq!(ClassSpec::fc(2.5).unwrap().as_janowski(), None);
    }
}
