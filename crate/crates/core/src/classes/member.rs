use std::fmt;
use std::str::FromStr;

use crate::arith::{PrecisionContext, Real};
use crate::bounds::{janowski_mu_nu, ps_classify, RegionId};
use crate::error::{Error, Result};
use crate::series::{decimal, TruncatedSeries};

use super::{ClassSpec, SchwarzSample};

/// A function `f(z) = z + a_2 z^2 + ...` of a class, with the Schwarz function
/// it was built from.
#[derive(Clone, Debug)]
pub struct ClassMember {
    spec: ClassSpec,
    omega: SchwarzSample,
    series: TruncatedSeries,
}

impl ClassMember {
    pub fn spec(&self) -> &ClassSpec {
        &self.spec
    }

    pub fn omega(&self) -> &SchwarzSample {
        &self.omega
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.series.ctx()
    }
}

/// Builds `f` of order `order` with `1 + z f''/f' = phi(omega(z))`.
///
/// `phi(omega)` is formed directly as `(1 + P omega)/(1 + Q omega)`; then
/// `f' = exp(integral (phi(omega) - 1)/t dt)` and `f = integral f'`. The result
/// is accepted only after `1 + z f''/f'` is recomputed from `f` and agrees with
/// `phi(omega)`. Only `omega` up to `z^{order-1}` is used.
pub fn member_from_schwarz(spec: &ClassSpec, omega: &SchwarzSample, order: usize) -> Result<ClassMember> {
    if order == 0 {
        return Err(Error::InvalidParameter("a member needs order >= 1".into()));
    }
    let ctx = omega.ctx();
    let omega = if omega.order() < order - 1 {
        omega.with_order(order - 1)?
    } else {
        omega.clone()
    };
    let w = omega.series().truncate(order - 1);
    let (p, q) = spec.phi_params(ctx);
    let one = ctx.one();
    let num = w.scale(&p).add_constant(&one);
    let den = w.scale(&q).add_constant(&one);
    let phi_w = num.mul(&den.recip()?);

    let fp = phi_w.add_constant(&-one.clone()).integrate_div_t()?.exp_series()?;
    let f = fp.integrate()?;

    if order >= 2 {
        round_trip(spec, &f, &phi_w)?;
    }
    Ok(ClassMember {
        spec: *spec,
        omega,
        series: f,
    })
}

fn round_trip(spec: &ClassSpec, f: &TruncatedSeries, phi_w: &TruncatedSeries) -> Result<()> {
    let ctx = f.ctx();
    let fp = f.derive()?;
    let fpp = fp.derive()?;
    let back = fpp.mul_z().mul(&fp.recip()?).add_constant(&ctx.one());
    let scale = {
        let m = fp.max_abs().max(&ctx.real(1));
        ctx.real(&m * &m) * phi_w.max_abs().max(&ctx.real(1))
    };
    let err = back.max_abs_diff(phi_w);
    if err > ctx.tolerance(48) * &scale {
        return Err(Error::RoundTrip(format!(
            "1 + z f''/f' differs from phi(omega) by {} for {spec}",
            decimal(&err)
        )));
    }
    Ok(())
}

/// Named extremal and test functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalName {
    /// `omega = z`: the class extremal.
    G1,
    /// `omega = z^2`.
    G2,
    /// `omega = z^3`.
    G3,
    /// Janowski only: `omega = z (c - s z)/(1 - s c z)` with `s = sgn mu` and
    /// `c = sqrt((|mu| + 1)/(3 (|mu| + nu + 1)))`, for `(mu, nu)` in D8 or D9.
    G4,
    /// Robertson only: `((1 - z)^{-A} - 1)/A`, the normalized extremal.
    H2,
}

impl FromStr for ExtremalName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "g1" => Ok(Self::G1),
            "g2" => Ok(Self::G2),
            "g3" => Ok(Self::G3),
            "g4" => Ok(Self::G4),
            "h2" => Ok(Self::H2),
            other => Err(Error::Parse(format!("unknown extremal '{other}'"))),
        }
    }
}

impl fmt::Display for ExtremalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::G1 => "g1",
            Self::G2 => "g2",
            Self::G3 => "g3",
            Self::G4 => "g4",
            Self::H2 => "h2",
        };
        f.write_str(s)
    }
}

/// The Schwarz function behind `g4` and its `(mu, nu)` region.
pub(crate) fn g4_schwarz(a: f64, b: f64, order: usize, ctx: PrecisionContext) -> Result<(SchwarzSample, RegionId)> {
    let (mu, nu) = janowski_mu_nu(a, b, ctx);
    let region = ps_classify(&mu, &nu)?;
    if !matches!(region, RegionId::D8 | RegionId::D9) {
        return Err(Error::InvalidParameter(format!(
            "g4 needs (mu, nu) in D8 or D9; (A, B) = ({a}, {b}) lies in {region}"
        )));
    }
    let abs_mu = mu.clone().abs();
    let den: Real = ctx.real(&abs_mu + &nu) + 1u32;
    let c = ((abs_mu + 1u32) / (den * 3u32)).sqrt();
    let s: i32 = if mu.is_sign_negative() { -1 } else { 1 };
    let rotation = ctx.complex(-(s as f64), 0.0);
    let pole = ctx.from_real(&(c * s));
    Ok((SchwarzSample::blaschke(rotation, vec![pole], order)?, region))
}

/// Builds the named function of `spec` to order `order`.
pub fn named_extremal(
    spec: &ClassSpec,
    name: ExtremalName,
    order: usize,
    ctx: PrecisionContext,
) -> Result<ClassMember> {
    let omega = match name {
        ExtremalName::G1 => SchwarzSample::identity(ctx, order),
        ExtremalName::G2 => SchwarzSample::monomial(ctx, 2, order)?,
        ExtremalName::G3 => SchwarzSample::monomial(ctx, 3, order)?,
        ExtremalName::G4 => match *spec {
            ClassSpec::Janowski { a, b } => g4_schwarz(a, b, order, ctx)?.0,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "g4 is defined for Janowski classes only, not {spec}"
                )))
            }
        },
        ExtremalName::H2 => match spec {
            ClassSpec::Robertson { .. } => SchwarzSample::identity(ctx, order),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "h2 is defined for Robertson classes only, not {spec}"
                )))
            }
        },
    };
    member_from_schwarz(spec, &omega, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{extremal_series, sample_schwarz, sample_seed, SampleKind};

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    #[test]
    fn identity_schwarz_gives_the_closed_form_extremal() {
        let c = ctx();
        for spec in [
            ClassSpec::fc(0.4).unwrap(),
            ClassSpec::fc(1.0).unwrap(),
            ClassSpec::fc(3.0).unwrap(),
            ClassSpec::janowski(0.3, -0.8).unwrap(),
            ClassSpec::janowski(0.0, -0.5).unwrap(),
            ClassSpec::janowski(0.5, 0.0).unwrap(),
            ClassSpec::robertson(0.9).unwrap(),
        ] {
            let g1 = named_extremal(&spec, ExtremalName::G1, 40, c).unwrap();
            let k = extremal_series(&spec, 40, c).unwrap();
            assert!(g1.series().max_abs_diff(&k) < c.tolerance(40) * k.max_abs(), "{spec}");
        }
    }

    #[test]
    fn h2_is_the_normalized_robertson_extremal() {
        let c = ctx();
        let spec = ClassSpec::robertson(-0.6).unwrap();
        let h2 = named_extremal(&spec, ExtremalName::H2, 20, c).unwrap();
        let k = extremal_series(&spec, 20, c).unwrap();
        assert!(h2.series().max_abs_diff(&k) < c.tolerance(32));
        assert!(named_extremal(&ClassSpec::fc(1.0).unwrap(), ExtremalName::H2, 5, c).is_err());
    }

    #[test]
    fn koebe_quarter_example() {
        // F(2) with omega = z: f = z/(1 - z)
        let c = ctx();
        let f = named_extremal(&ClassSpec::fc(2.0).unwrap(), ExtremalName::G1, 12, c).unwrap();
        for n in 1..=12 {
            assert!((f.series().coeff(n) - &c.one()).abs() < c.tolerance(16));
        }
        assert!(f.series().coeff(0).is_zero());
    }

    #[test]
    fn random_members_pass_round_trip() {
        let c = ctx();
        let spec = ClassSpec::janowski(0.7, -0.4).unwrap();
        for i in 0..10 {
            let w = sample_schwarz(sample_seed(11, i), SampleKind::Mixed, 30, c).unwrap();
            let f = member_from_schwarz(&spec, &w, 31).unwrap();
            assert_eq!(f.order(), 31);
            assert!((f.series().coeff(1) - &c.one()).abs() < c.tolerance(8));
        }
    }

    #[test]
    fn g4_requires_d8_or_d9() {
        let c = ctx();
        // A = 1, B = 0.5: mu = -0.75, nu = 0.125
        let spec = ClassSpec::janowski(1.0, 0.5).unwrap();
        let g4 = named_extremal(&spec, ExtremalName::G4, 6, c);
        assert!(g4.is_ok() || matches!(g4, Err(Error::InvalidParameter(_))));
        assert!(named_extremal(&ClassSpec::fc(1.0).unwrap(), ExtremalName::G4, 6, c).is_err());
    }

    #[test]
    fn names_round_trip() {
        for n in [
            ExtremalName::G1,
            ExtremalName::G2,
            ExtremalName::G3,
            ExtremalName::G4,
            ExtremalName::H2,
        ] {
            assert_eq!(n.to_string().parse::<ExtremalName>().unwrap(), n);
        }
        assert!("g5".parse::<ExtremalName>().is_err());
    }
}
