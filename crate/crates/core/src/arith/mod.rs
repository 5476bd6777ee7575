//! Extended-precision complex arithmetic on principal branches, plus
//! second-order jets for derivative evaluation at a point.
//!
//! Reals are MPFR floats (via `rug`). Every value in one computation is
//! created from the same [`PrecisionContext`].

mod jet;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Constant;
use rug::{Assign, Float};

use crate::error::{Error, Result};

pub use jet::{jet_eval, Jet2, JetOp};

/// Extended-precision real number.
pub type Real = Float;

/// Default binary significand precision.
pub const DEFAULT_BITS: u32 = 256;
/// Smallest precision a context accepts.
pub const MIN_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 16;

/// Binary precision shared by every value of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    bits: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self { bits: DEFAULT_BITS }
    }
}

impl PrecisionContext {
    pub fn new(bits: u32) -> Result<Self> {
        if !(MIN_BITS..=MAX_BITS).contains(&bits) {
            return Err(Error::InvalidParameter(format!(
                "precision must be within {MIN_BITS}..={MAX_BITS} bits, got {bits}"
            )));
        }
        Ok(Self { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Same context widened by `extra` bits.
    pub fn widened(self, extra: u32) -> Self {
        Self {
            bits: (self.bits + extra).min(MAX_BITS),
        }
    }

    pub fn real<T>(self, value: T) -> Real
    where
        Float: Assign<T>,
    {
        Float::with_val(self.bits, value)
    }

    /// Parses a decimal literal such as `1e-31` or `-0.795` at context precision.
    pub fn parse_real(self, text: &str) -> Result<Real> {
        let parsed =
            Float::parse(text.trim()).map_err(|e| Error::Parse(format!("'{text}' is not a real number: {e}")))?;
        Ok(Float::with_val(self.bits, parsed))
    }

    pub fn pi(self) -> Real {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn zero(self) -> CNum {
        CNum::new(self.real(0), self.real(0))
    }

    pub fn one(self) -> CNum {
        CNum::new(self.real(1), self.real(0))
    }

    pub fn complex(self, re: f64, im: f64) -> CNum {
        CNum::new(self.real(re), self.real(im))
    }

    pub fn from_real(self, re: &Real) -> CNum {
        CNum::new(self.real(re), self.real(0))
    }

    /// `2^-(bits - slack)`: the working tolerance after `slack` bits of loss.
    pub fn tolerance(self, slack: u32) -> Real {
        let exp = self.bits.saturating_sub(slack) as i32;
        let mut t = self.real(1);
        t >>= exp;
        t
    }
}

/// Complex number with extended-precision parts.
#[derive(Clone, Debug, PartialEq)]
pub struct CNum {
    re: Real,
    im: Real,
}

impl CNum {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn re(&self) -> &Real {
        &self.re
    }

    pub fn im(&self) -> &Real {
        &self.im
    }

    pub fn into_parts(self) -> (Real, Real) {
        (self.re, self.im)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn ctx(&self) -> PrecisionContext {
        PrecisionContext { bits: self.re.prec() }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Real {
        // fused re*re + im*im, one rounding
        Float::with_val(self.prec(), self.re.mul_add_mul_ref(&self.re, &self.im, &self.im))
    }

    pub fn abs(&self) -> Real {
        self.re.clone().hypot(&self.im)
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> Real {
        let prec = self.prec();
        if self.im.is_zero() {
            return if self.re.is_sign_negative() && !self.re.is_zero() {
                Float::with_val(prec, Constant::Pi)
            } else {
                Float::new(prec)
            };
        }
        self.im.clone().atan2(&self.re)
    }

    pub fn scale(&self, k: &Real) -> Self {
        let p = self.prec();
        Self::new(Float::with_val(p, &self.re * k), Float::with_val(p, &self.im * k))
    }

    /// `self += a * b` without temporaries.
    pub fn add_mul(&mut self, a: &CNum, b: &CNum) {
        self.re += &a.re * &b.re;
        self.re -= &a.im * &b.im;
        self.im += &a.re * &b.im;
        self.im += &a.im * &b.re;
    }

    /// `self -= a * b` without temporaries.
    pub fn sub_mul(&mut self, a: &CNum, b: &CNum) {
        self.re -= &a.re * &b.re;
        self.re += &a.im * &b.im;
        self.im -= &a.re * &b.im;
        self.im -= &a.im * &b.re;
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of zero"));
        }
        let n = self.norm_sqr();
        let p = self.prec();
        Ok(Self::new(
            Float::with_val(p, &self.re / &n),
            -Float::with_val(p, &self.im / &n),
        ))
    }

    pub fn checked_div(&self, rhs: &CNum) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("complex division"));
        }
        let p = self.prec();
        let n = rhs.norm_sqr();
        let mut re = Float::with_val(p, &self.re * &rhs.re);
        re += &self.im * &rhs.im;
        let mut im = Float::with_val(p, &self.im * &rhs.re);
        im -= &self.re * &rhs.im;
        re /= &n;
        im /= &n;
        Ok(Self::new(re, im))
    }

    pub fn div_real(&self, k: &Real) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::DivisionByZero("division by real zero"));
        }
        let p = self.prec();
        Ok(Self::new(
            Float::with_val(p, &self.re / k),
            Float::with_val(p, &self.im / k),
        ))
    }

    pub fn exp(&self) -> Self {
        let m = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.prec()));
        Self::new(c * &m, s * &m)
    }

    /// Principal logarithm, imaginary part in `(-pi, pi]`.
    pub fn ln(&self) -> Result<Self> {
        principal_log(self)
    }

    pub fn pow(&self, w: &CNum) -> Result<Self> {
        cpow(self, w)
    }

    pub fn pow_real(&self, w: &Real) -> Result<Self> {
        cpow(self, &CNum::new(w.clone(), Float::new(w.prec())))
    }

    /// Largest of `|re|`, `|im|`; cheap magnitude for tolerance scaling.
    pub fn max_abs_part(&self) -> Real {
        let a = self.re.clone().abs();
        let b = self.im.clone().abs();
        if a > b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for CNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        write!(
            f,
            "({}, {})",
            self.re.to_string_radix(10, Some(digits)),
            self.im.to_string_radix(10, Some(digits))
        )
    }
}

impl<'a> Add<&'a CNum> for &'a CNum {
    type Output = CNum;
    fn add(self, rhs: &CNum) -> CNum {
        let p = self.prec();
        CNum::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }
}

impl<'a> Sub<&'a CNum> for &'a CNum {
    type Output = CNum;
    fn sub(self, rhs: &CNum) -> CNum {
        let p = self.prec();
        CNum::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }
}

impl<'a> Mul<&'a CNum> for &'a CNum {
    type Output = CNum;
    fn mul(self, rhs: &CNum) -> CNum {
        let p = self.prec();
        let mut re = Float::with_val(p, &self.re * &rhs.re);
        re -= &self.im * &rhs.im;
        let mut im = Float::with_val(p, &self.re * &rhs.im);
        im += &self.im * &rhs.re;
        CNum::new(re, im)
    }
}

impl Add for CNum {
    type Output = CNum;
    fn add(mut self, rhs: CNum) -> CNum {
        self.re += &rhs.re;
        self.im += &rhs.im;
        self
    }
}

impl Sub for CNum {
    type Output = CNum;
    fn sub(mut self, rhs: CNum) -> CNum {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
        self
    }
}

impl Mul for CNum {
    type Output = CNum;
    fn mul(self, rhs: CNum) -> CNum {
        &self * &rhs
    }
}

impl Neg for CNum {
    type Output = CNum;
    fn neg(self) -> CNum {
        CNum::new(-self.re, -self.im)
    }
}

/// Principal logarithm: `ln|z| + i Arg z` with `Arg z` in `(-pi, pi]`.
pub fn principal_log(z: &CNum) -> Result<CNum> {
    if z.is_zero() {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    if !z.is_finite() {
        return Err(Error::Domain("logarithm of a non-finite value".into()));
    }
    Ok(CNum::new(z.abs().ln(), z.arg()))
}

/// Principal power `exp(w log z)`. A zero base is allowed only with an
/// exponent of positive real part and zero imaginary part.
pub fn cpow(z: &CNum, w: &CNum) -> Result<CNum> {
    if z.is_zero() {
        if w.im.is_zero() && w.re > 0 {
            return Ok(CNum::new(Float::new(z.prec()), Float::new(z.prec())));
        }
        return Err(Error::Domain("zero base requires a positive real exponent".into()));
    }
    let l = principal_log(z)?;
    Ok((w * &l).exp())
}

fn check_eps(eps: &Real) -> Result<()> {
    if !(*eps > 0 && *eps < 2) {
        return Err(Error::InvalidParameter(format!(
            "boundary offset eps must lie in (0, 2), got {}",
            eps.to_string_radix(10, Some(10))
        )));
    }
    Ok(())
}

/// `e^{i(2 - eps) pi}` built from `cos(eps pi)` and `sin(eps pi)` directly.
pub fn boundary_point(eps: &Real) -> Result<CNum> {
    check_eps(eps)?;
    let p = eps.prec();
    let x = Float::with_val(p, eps * Float::with_val(p, Constant::Pi));
    let (s, c) = x.sin_cos(Float::new(p));
    Ok(CNum::new(c, -s))
}

/// `1 - boundary_point(eps)` as `2 sin^2(eps pi / 2) + i sin(eps pi)`, free of
/// the cancellation in `1 - cos` near the singular point `z = 1`.
pub fn one_minus_boundary_point(eps: &Real) -> Result<CNum> {
    radial_one_minus(eps, &Float::new(eps.prec()))
}

/// `r e^{i(2 - eps) pi}` with `r = 1 - gap`.
pub fn radial_point(eps: &Real, gap: &Real) -> Result<CNum> {
    let z = boundary_point(eps)?;
    let r = Float::with_val(eps.prec(), 1 - gap);
    Ok(z.scale(&r))
}

/// `1 - r e^{i(2 - eps) pi}` with `r = 1 - gap`, evaluated stably as
/// `gap + r (1 - cos) + i r sin`.
pub fn radial_one_minus(eps: &Real, gap: &Real) -> Result<CNum> {
    check_eps(eps)?;
    if gap.is_sign_negative() || *gap >= 1 {
        return Err(Error::InvalidParameter("radial gap must lie in [0, 1)".into()));
    }
    let p = eps.prec();
    let x = Float::with_val(p, eps * Float::with_val(p, Constant::Pi));
    let half = Float::with_val(p, &x / 2u32).sin();
    let one_minus_cos = Float::with_val(p, half.square_ref()) * 2u32;
    let r = Float::with_val(p, 1 - gap);
    let re = Float::with_val(p, &r * &one_minus_cos) + gap;
    let im = x.sin() * &r;
    Ok(CNum::new(re, im))
}
