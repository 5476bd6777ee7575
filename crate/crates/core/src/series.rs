//! Truncated formal power series over [`CNum`].
//!
//! A series of order `N` carries coefficients `0..=N`; nothing is known about
//! the coefficients past `N`. Binary operations on series of different orders
//! truncate to the smaller order.

use rug::Float;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::arith::{CNum, PrecisionContext, Real};
use crate::error::{Error, Result};

/// Significant decimal digits used whenever a number leaves the library as text.
pub const DECIMAL_DIGITS: usize = 40;

/// Decimal rendering with [`DECIMAL_DIGITS`] significant digits.
pub fn decimal(x: &Real) -> String {
    x.to_string_radix(10, Some(DECIMAL_DIGITS))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<CNum>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<CNum>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a series needs at least its constant term".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients, mostly for tests and fixtures.
    pub fn from_f64(ctx: PrecisionContext, coeffs: &[f64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| ctx.complex(c, 0.0)).collect())
    }

    pub fn zero(ctx: PrecisionContext, order: usize) -> Self {
        Self {
            coeffs: vec![ctx.zero(); order + 1],
        }
    }

    pub fn constant(c: CNum, order: usize) -> Self {
        let mut s = Self::zero(c.ctx(), order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(ctx: PrecisionContext, order: usize) -> Self {
        Self::constant(ctx.one(), order)
    }

    /// `z^k` truncated at `order`.
    pub fn monomial(ctx: PrecisionContext, k: usize, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        if k <= order {
            s.coeffs[k] = ctx.one();
        }
        s
    }

    /// `sum z^n = 1/(1-z)`.
    pub fn geometric(ctx: PrecisionContext, order: usize) -> Self {
        Self {
            coeffs: vec![ctx.one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.coeffs[0].ctx()
    }

    pub fn coeffs(&self) -> &[CNum] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &CNum {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<CNum> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Truncates, or extends with zero coefficients, to exactly `order`.
    ///
    /// Only meaningful for polynomials; padding a truncated series fabricates
    /// zero coefficients.
    pub fn pad(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs[..=order.min(self.order())].to_vec();
        coeffs.resize(order + 1, self.ctx().zero());
        Self { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &CNum) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| k * c).collect(),
        }
    }

    pub fn scale_real(&self, k: &Real) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: &CNum) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = &out.coeffs[0] + c;
        out
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let ctx = self.ctx();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = ctx.zero();
            for j in 0..=k {
                acc.add_mul(&self.coeffs[j], &rhs.coeffs[k - j]);
            }
            out.push(acc);
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; needs a non-zero constant term.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ConstantTerm {
                expected: "non-zero",
                found: "0".into(),
            });
        }
        let inv0 = a0.recip()?;
        let ctx = self.ctx();
        let mut b: Vec<CNum> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = ctx.zero();
            for k in 1..=n {
                acc.add_mul(&self.coeffs[k], &b[n - k]);
            }
            b.push(-(&acc * &inv0));
        }
        Ok(Self { coeffs: b })
    }

    /// `self / rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    fn require_constant_one(&self) -> Result<()> {
        let ctx = self.ctx();
        let d = (&self.coeffs[0] - &ctx.one()).abs();
        if d > ctx.tolerance(8) {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: format!("{:.12}", self.coeffs[0]),
            });
        }
        Ok(())
    }

    fn require_constant_zero(&self) -> Result<()> {
        let ctx = self.ctx();
        if self.coeffs[0].abs() > ctx.tolerance(8) {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: format!("{:.12}", self.coeffs[0]),
            });
        }
        Ok(())
    }

    /// `k * a_k` for `k = 0..=N`.
    fn index_weighted(&self) -> Vec<CNum> {
        let ctx = self.ctx();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&ctx.real(k as u64)))
            .collect()
    }

    /// `log a` for a series with constant term 1, via `a' = a (log a)'`.
    pub fn log_series(&self) -> Result<Self> {
        self.require_constant_one()?;
        let ctx = self.ctx();
        let n_max = self.order();
        let mut l = vec![ctx.zero(); n_max + 1];
        let mut kl: Vec<CNum> = vec![ctx.zero(); n_max + 1];
        for n in 1..=n_max {
            let mut acc = ctx.zero();
            for (klk, a) in kl[1..n].iter().zip(self.coeffs[1..n].iter().rev()) {
                acc.add_mul(klk, a);
            }
            let corr = acc.div_real(&ctx.real(n as u64))?;
            l[n] = &self.coeffs[n] - &corr;
            kl[n] = l[n].scale(&ctx.real(n as u64));
        }
        Ok(Self { coeffs: l })
    }

    /// `exp a` for a series with constant term 0, via `e' = a' e`.
    pub fn exp_series(&self) -> Result<Self> {
        self.require_constant_zero()?;
        let ctx = self.ctx();
        let ka = self.index_weighted();
        let n_max = self.order();
        let mut e = Vec::with_capacity(n_max + 1);
        e.push(ctx.one());
        for n in 1..=n_max {
            let mut acc = ctx.zero();
            for k in 1..=n {
                acc.add_mul(&ka[k], &e[n - k]);
            }
            e.push(acc.div_real(&ctx.real(n as u64))?);
        }
        Ok(Self { coeffs: e })
    }

    /// `a^w` for a series with constant term 1, by the recurrence
    /// `n p_n = sum_k ((w+1) k - n) a_k p_{n-k}` that follows from `a p' = w a' p`.
    pub fn pow_series(&self, w: &CNum) -> Result<Self> {
        self.require_constant_one()?;
        let ctx = self.ctx();
        let ka = self.index_weighted();
        let w1 = w + &ctx.one();
        let n_max = self.order();
        let mut p = Vec::with_capacity(n_max + 1);
        p.push(ctx.one());
        for n in 1..=n_max {
            let mut weighted = ctx.zero();
            let mut plain = ctx.zero();
            for k in 1..=n {
                weighted.add_mul(&ka[k], &p[n - k]);
                plain.add_mul(&self.coeffs[k], &p[n - k]);
            }
            let nn = ctx.real(n as u64);
            let num = &(&w1 * &weighted) - &plain.scale(&nn);
            p.push(num.div_real(&nn)?);
        }
        Ok(Self { coeffs: p })
    }

    /// `outer(inner(z))` by Horner's scheme; `inner` must vanish at 0.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.require_constant_zero()?;
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner).add_constant(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Term-wise derivative; the order drops by one.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::InvalidParameter(
                "derivative of an order-0 series is undetermined".into(),
            ));
        }
        let ctx = self.ctx();
        Ok(Self {
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k].scale(&ctx.real(k as u64)))
                .collect(),
        })
    }

    /// `integral_0^z a(t)/t dt`: maps `sum_{n>=1} a_n z^n` to `sum_{n>=1} (a_n/n) z^n`.
    pub fn integrate_div_t(&self) -> Result<Self> {
        self.require_constant_zero()?;
        let ctx = self.ctx();
        let mut out = vec![ctx.zero()];
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.div_real(&ctx.real(n as u64))?);
        }
        Ok(Self { coeffs: out })
    }

    /// `integral_0^z a(t) dt`; the order grows by one.
    pub fn integrate(&self) -> Result<Self> {
        let ctx = self.ctx();
        let mut out = vec![ctx.zero()];
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push(c.div_real(&ctx.real(n as u64 + 1))?);
        }
        Ok(Self { coeffs: out })
    }

    /// Division by `z` of a series with vanishing constant term; the order drops by one.
    pub fn div_z(&self) -> Result<Self> {
        self.require_constant_zero()?;
        if self.order() == 0 {
            return Err(Error::InvalidParameter("cannot divide an order-0 series by z".into()));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplication by `z`; the order grows by one.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.ctx().zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: &CNum) -> CNum {
        let mut acc = self.coeffs[self.order()].clone();
        for c in self.coeffs[..self.order()].iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Largest coefficient-wise `|a_n - b_n|` over the common order.
    pub fn max_abs_diff(&self, rhs: &Self) -> Real {
        let n = self.order().min(rhs.order());
        let mut worst = Float::new(self.ctx().bits());
        for i in 0..=n {
            let d = (&self.coeffs[i] - &rhs.coeffs[i]).abs();
            if d > worst {
                worst = d;
            }
        }
        worst
    }

    /// Largest `|a_n|`.
    pub fn max_abs(&self) -> Real {
        let mut worst = Float::new(self.ctx().bits());
        for c in &self.coeffs {
            let a = c.abs();
            if a > worst {
                worst = a;
            }
        }
        worst
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization is infallible")
    }

    /// Parses the `[[re, im], ...]` decimal-string form at `ctx` precision.
    pub fn from_json(text: &str, ctx: PrecisionContext) -> Result<Self> {
        let pairs: Vec<[String; 2]> = serde_json::from_str(text)?;
        let coeffs = pairs
            .iter()
            .map(|[re, im]| Ok(CNum::new(ctx.parse_real(re)?, ctx.parse_real(im)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(coeffs)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[decimal(c.re()), decimal(c.im())])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn s(coeffs: &[f64]) -> TruncatedSeries {
        TruncatedSeries::from_f64(ctx(), coeffs).unwrap()
    }

    fn assert_close(a: &TruncatedSeries, b: &TruncatedSeries, slack: u32) {
        let d = a.max_abs_diff(b);
        let scale = b.max_abs().max(&ctx().real(1));
        let tol = ctx().tolerance(slack) * scale;
        assert!(d <= tol, "series differ by {}", d.to_f64());
    }

    fn random_series(seed: &[(f64, f64)]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(seed.iter().map(|&(r, i)| ctx().complex(r, i)).collect()).unwrap()
    }

    #[test]
    fn product_identities() {
        let p = s(&[1.0, 1.0, 0.0]).mul(&s(&[1.0, -1.0, 0.0]));
        assert_eq!(p, s(&[1.0, 0.0, -1.0]));
        let g = TruncatedSeries::geometric(ctx(), 10).mul(&s(&[1.0, -1.0, 0.0, 0.0]));
        assert_eq!(g, s(&[1.0, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn product_matches_schoolbook_oracle() {
        let a: Vec<(f64, f64)> = (0..9).map(|k| (0.3 * k as f64 - 1.0, 0.1 / (k as f64 + 1.0))).collect();
        let b: Vec<(f64, f64)> = (0..9).map(|k| ((k * k) as f64 * 0.07, -0.2 * k as f64)).collect();
        let prod = random_series(&a).mul(&random_series(&b));
        for n in 0..9 {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for j in 0..=n {
                let (ar, ai) = a[j];
                let (br, bi) = b[n - j];
                re += ar * br - ai * bi;
                im += ar * bi + ai * br;
            }
            let (pr, pi) = prod.coeff(n).to_f64_pair();
            assert!((pr - re).abs() < 1e-12 && (pi - im).abs() < 1e-12);
        }
    }

    #[test]
    fn reciprocal_cases() {
        let r = s(&[1.0, -1.0, 0.0, 0.0, 0.0]).recip().unwrap();
        assert_eq!(r, TruncatedSeries::geometric(ctx(), 4));
        assert_eq!(s(&[1.0]).recip().unwrap(), s(&[1.0]));
        assert!(s(&[0.0, 1.0]).recip().is_err());

        // (1 + Bz) * log-type factor, B = -0.5
        let c = ctx();
        let one_bz = s(&[1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let lg = TruncatedSeries::from_f64(c, &(0..=10).map(|k| 1.0 / (k as f64 + 1.0)).collect::<Vec<_>>()).unwrap();
        let a = one_bz.mul(&lg);
        let back = a.mul(&a.recip().unwrap());
        assert_close(&back, &TruncatedSeries::one(c, 10), 16);
    }

    #[test]
    fn log_and_exp_closed_forms() {
        let c = ctx();
        let l = TruncatedSeries::geometric(c, 12).log_series().unwrap();
        for n in 1..=12 {
            let expect = c.from_real(&(c.real(1) / c.real(n as u32)));
            assert!((l.coeff(n) - &expect).abs() < c.tolerance(8));
        }
        assert!(l.coeff(0).is_zero());
        assert_eq!(s(&[1.0, 0.0, 0.0]).log_series().unwrap(), s(&[0.0, 0.0, 0.0]));
        assert!(s(&[2.0, 1.0]).log_series().is_err());
        assert_eq!(s(&[0.0, 0.0, 0.0]).exp_series().unwrap(), s(&[1.0, 0.0, 0.0]));
        assert!(s(&[1.0, 1.0]).exp_series().is_err());
        let one_plus_z = s(&[1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_close(&one_plus_z.log_series().unwrap().exp_series().unwrap(), &one_plus_z, 8);
    }

    #[test]
    fn koebe_log_coefficients() {
        // log(k(z)/z) = -2 log(1-z) = sum 2 z^n / n
        let c = ctx();
        let k_over_z = s(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
            .pow_series(&c.complex(-2.0, 0.0))
            .unwrap();
        let l = k_over_z.log_series().unwrap();
        for n in 1..=8 {
            let expect = c.real(2) / c.real(n as u32);
            assert!((l.coeff(n) - &c.from_real(&expect)).abs() < c.tolerance(8));
        }
    }

    #[test]
    fn exp_matches_factorial_oracle() {
        // exp(A z), A = e^{-0.6 i}: coefficient n is A^n / n!
        let c = ctx();
        let a = CNum::new(c.real(0.6).cos(), -c.real(0.6).sin());
        let mut az = TruncatedSeries::zero(c, 20);
        az.coeffs[1] = a.clone();
        let e = az.exp_series().unwrap();
        let mut term = c.one();
        for n in 0..=20u32 {
            if n > 0 {
                term = (&term * &a).div_real(&c.real(n)).unwrap();
            }
            assert!((e.coeff(n as usize) - &term).abs() < c.tolerance(8));
        }
    }

    #[test]
    fn pow_cases() {
        let c = ctx();
        let one_minus_z = s(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_close(
            &one_minus_z.pow_series(&c.complex(-1.0, 0.0)).unwrap(),
            &TruncatedSeries::geometric(c, 6),
            8,
        );
        let sq = one_minus_z.pow_series(&c.complex(-2.0, 0.0)).unwrap();
        assert_close(&sq, &s(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]), 8);

        // (1 + Bz)^{A/B}, (A, B) = (0.5, -0.5): generalized binomial oracle
        let one_bz = s(&[1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let w = -1.0f64;
        let p = one_bz.pow_series(&c.complex(w, 0.0)).unwrap();
        let mut binom = 1.0f64;
        for n in 0..=7usize {
            if n > 0 {
                binom *= (w - (n as f64 - 1.0)) / n as f64;
            }
            let expect = binom * (-0.5f64).powi(n as i32);
            assert!((p.coeff(n).re().to_f64() - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn compose_cases() {
        let c = ctx();
        let z2 = TruncatedSeries::monomial(c, 2, 8);
        let g = TruncatedSeries::geometric(c, 8).compose(&z2).unwrap();
        assert_eq!(g, s(&[1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0]));
        let a = random_series(&[(0.5, 0.1), (-1.0, 2.0), (0.25, 0.0), (3.0, -1.0)]);
        assert_close(&a.compose(&TruncatedSeries::monomial(c, 1, 3)).unwrap(), &a, 4);
        assert!(a.compose(&a).is_err());
    }

    #[test]
    fn calculus_helpers() {
        assert_eq!(s(&[0.0, 1.0, 1.0]).derive().unwrap(), s(&[1.0, 2.0]));
        assert_eq!(s(&[0.0, 1.0]).integrate_div_t().unwrap(), s(&[0.0, 1.0]));
        assert!(s(&[1.0, 1.0]).integrate_div_t().is_err());
        assert!(s(&[1.0]).derive().is_err());

        // derive then integrate_div_t on z * r(z) recovers the n >= 1 tail of z * r
        let r = random_series(&[(0.3, -0.2), (1.5, 0.5), (-0.7, 0.0), (0.1, 0.9), (2.0, 1.0)]);
        let zr = r.mul_z();
        let back = zr.derive().unwrap().mul_z().integrate_div_t().unwrap();
        assert_close(&back, &zr.truncate(back.order()), 8);
    }

    #[test]
    fn json_round_trip() {
        let c = ctx();
        let a = random_series(&[(1.0 / 3.0, -0.25), (1e-30, 7.0)]);
        let text = a.to_json();
        assert!(text.starts_with("[[\""));
        let back = TruncatedSeries::from_json(&text, c).unwrap();
        // 40 significant digits survive
        let d = a.max_abs_diff(&back);
        assert!(d < 1e-39);
        assert!(TruncatedSeries::from_json("[]", c).is_err());
        assert!(TruncatedSeries::from_json("[[\"x\", \"0\"]]", c).is_err());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order + 1)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn exp_log_round_trip(tail in arb_series(64)) {
            let mut t = tail;
            t[0] = (0.0, 0.0);
            let a = random_series(&t);
            // the round trip loses accuracy in proportion to the size of the
            // intermediate series, which grows geometrically for random input
            let e = a.exp_series().unwrap();
            let d = e.log_series().unwrap().max_abs_diff(&a);
            prop_assert!(d <= ctx().tolerance(24) * e.max_abs().max(&ctx().real(1)));
            let mut u = t.clone();
            u[0] = (1.0, 0.0);
            let b = random_series(&u);
            let l = b.log_series().unwrap();
            let back = l.exp_series().unwrap();
            let d = back.max_abs_diff(&b);
            let scale = l.max_abs().max(&ctx().real(1)) * b.max_abs().max(&ctx().real(1));
            prop_assert!(d <= ctx().tolerance(24) * scale);
        }

        #[test]
        fn mul_commutes_and_associates(a in arb_series(16), b in arb_series(16), c in arb_series(16)) {
            let (a, b, c) = (random_series(&a), random_series(&b), random_series(&c));
            assert_close(&a.mul(&b), &b.mul(&a), 8);
            assert_close(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)), 12);
        }

        #[test]
        fn pow_identities(tail in arb_series(24), wr in -2.0f64..2.0, wi in -2.0f64..2.0) {
            let mut t = tail;
            t[0] = (1.0, 0.0);
            let a = random_series(&t);
            let c = ctx();
            assert_close(&a.pow_series(&c.one()).unwrap(), &a, 12);
            assert_close(&a.pow_series(&c.zero()).unwrap(), &TruncatedSeries::one(c, 24), 12);
            let w = c.complex(wr, wi);
            let via_exp = a.log_series().unwrap().scale(&w).exp_series().unwrap();
            assert_close(&a.pow_series(&w).unwrap(), &via_exp, 20);
        }

        #[test]
        fn compose_associates(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
            let a = random_series(&a);
            let mut b = b; b[0] = (0.0, 0.0);
            let mut c = c; c[0] = (0.0, 0.0);
            let (b, c) = (random_series(&b).scale_real(&ctx().real(0.5)), random_series(&c).scale_real(&ctx().real(0.5)));
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            assert_close(&left, &right, 20);
        }
    }
}
