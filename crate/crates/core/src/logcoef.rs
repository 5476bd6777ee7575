//! Logarithmic coefficients `log(f(z)/z) = 2 sum gamma_n z^n` and the closed
//! gamma_1..gamma_3 formulas in terms of Schwarz coefficients.

use serde_json::{json, Value};

use crate::arith::{CNum, PrecisionContext};
use crate::classes::ClassSpec;
use crate::error::{Error, Result};
use crate::series::{decimal, TruncatedSeries};

/// `gamma_1..gamma_N`; `get(n)` is 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaVector {
    gammas: Vec<CNum>,
}

impl GammaVector {
    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// `gamma_n`, `1 <= n <= len`.
    pub fn get(&self, n: usize) -> &CNum {
        assert!(
            n >= 1 && n <= self.gammas.len(),
            "gamma index {n} out of 1..={}",
            self.gammas.len()
        );
        &self.gammas[n - 1]
    }

    pub fn as_slice(&self) -> &[CNum] {
        &self.gammas
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.gammas
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    json!({
                        "n": i + 1,
                        "re": decimal(g.re()),
                        "im": decimal(g.im()),
                        "abs": decimal(&g.abs()),
                    })
                })
                .collect(),
        )
    }
}

/// `gamma_n = [z^n] log(f(z)/z) / 2` for `n = 1..=count`.
///
/// `f` must be normalized (`a_0 = 0`, `a_1 = 1`) and known to order `count + 1`.
pub fn log_coeffs(f: &TruncatedSeries, count: usize) -> Result<GammaVector> {
    let ctx = f.ctx();
    if !f.coeff(0).is_zero() {
        return Err(Error::ConstantTerm {
            expected: "0",
            found: format!("{:.12}", f.coeff(0)),
        });
    }
    if f.order() < count + 1 {
        return Err(Error::InvalidParameter(format!(
            "gamma_{count} needs f to order {}, have {}",
            count + 1,
            f.order()
        )));
    }
    let l = f.div_z()?.truncate(count).log_series()?;
    let half = ctx.real(0.5);
    Ok(GammaVector {
        gammas: l.coeffs()[1..].iter().map(|c| c.scale(&half)).collect(),
    })
}

/// `(gamma_1, gamma_2, gamma_3)` from `a_2, a_3, a_4`.
pub fn gamma123_from_a(a2: &CNum, a3: &CNum, a4: &CNum) -> [CNum; 3] {
    let ctx = a2.ctx();
    let half = ctx.real(0.5);
    let a2sq = a2 * a2;
    let g1 = a2.scale(&half);
    let g2 = (a3 - &a2sq.scale(&half)).scale(&half);
    let third = ctx.real(1) / 3u32;
    let g3 = (&(a4 - &(a2 * a3)) + &(&a2sq * a2).scale(&third)).scale(&half);
    [g1, g2, g3]
}

/// Closed gamma_1..gamma_3 for `phi = (1 + P z)/(1 + Q z)` with complex `P, Q`:
/// `(P - Q)/4 c1`, `(P - Q)/48 ((P - 5Q) c1^2 + 4 c2)`,
/// `(P - Q)/24 (c3 + (P - 5Q)/2 c1 c2 + (3Q^2 - PQ)/2 c1^3)`.
pub fn gamma123_mobius(c: [&CNum; 3], p: &CNum, q: &CNum) -> [CNum; 3] {
    let ctx = p.ctx();
    let [c1, c2, c3] = c;
    let pq = p - q;
    let five_q = q.scale(&ctx.real(5));
    let t = p - &five_q;
    let g1 = (&pq * c1).scale(&ctx.real(0.25));
    let mut inner2 = c2.scale(&ctx.real(4));
    inner2.add_mul(&t, &(c1 * c1));
    let g2 = (&pq * &inner2).scale(&(ctx.real(1) / 48u32));
    let half = ctx.real(0.5);
    let mu = t.scale(&half);
    let nu = (&(q * q).scale(&ctx.real(3)) - &(p * q)).scale(&half);
    let mut inner3 = c3.clone();
    inner3.add_mul(&mu, &(c1 * c2));
    inner3.add_mul(&nu, &(&(c1 * c1) * c1));
    let g3 = (&pq * &inner3).scale(&(ctx.real(1) / 24u32));
    [g1, g2, g3]
}

/// gamma_1..gamma_3 of a `C(A, B)` member with Schwarz coefficients `c1, c2, c3`.
pub fn gamma123_janowski(c1: &CNum, c2: &CNum, c3: &CNum, a: f64, b: f64) -> Result<[CNum; 3]> {
    ClassSpec::janowski(a, b)?;
    let ctx = c1.ctx();
    Ok(gamma123_mobius(
        [c1, c2, c3],
        &ctx.complex(a, 0.0),
        &ctx.complex(b, 0.0),
    ))
}

fn robertson_terms(c1: &CNum, c2: &CNum, c3: &CNum, alpha: f64) -> Result<[CNum; 4]> {
    ClassSpec::robertson(alpha)?;
    let ctx = c1.ctx();
    let a = ClassSpec::robertson_a(alpha, ctx);
    let one_a = &ctx.one() + &a;
    let five_a = &ctx.complex(5.0, 0.0) + &a;
    let three_a = &ctx.complex(3.0, 0.0) + &a;
    // (5 + A) c1^2 + 4 c2
    let mut t2 = c2.scale(&ctx.real(4));
    t2.add_mul(&five_a, &(c1 * c1));
    // 2 c3 + (5 + A) c1 c2 + (3 + A) c1^3
    let mut t3 = c3.scale(&ctx.real(2));
    t3.add_mul(&five_a, &(c1 * c2));
    t3.add_mul(&three_a, &(&(c1 * c1) * c1));
    let g1 = (&one_a * c1).scale(&ctx.real(0.25));
    Ok([g1, one_a, t2, t3])
}

/// gamma_1..gamma_3 of an `S_alpha` member, `A = e^{-2 i alpha}`:
/// `(1 + A)/4 c1`, `(1 + A)/48 ((5 + A) c1^2 + 4 c2)`,
/// `(1 + A)/48 (2 c3 + (5 + A) c1 c2 + (3 + A) c1^3)`.
pub fn gamma123_robertson(c1: &CNum, c2: &CNum, c3: &CNum, alpha: f64) -> Result<[CNum; 3]> {
    let [g1, one_a, t2, t3] = robertson_terms(c1, c2, c3, alpha)?;
    let k = c1.ctx().real(1) / 48u32;
    Ok([g1, (&one_a * &t2).scale(&k), (&one_a * &t3).scale(&k)])
}

/// As [`gamma123_robertson`] but with the `(1 + A)/24` prefactor, for comparison.
pub fn gamma123_robertson_printed(c1: &CNum, c2: &CNum, c3: &CNum, alpha: f64) -> Result<[CNum; 3]> {
    let [g1, one_a, t2, t3] = robertson_terms(c1, c2, c3, alpha)?;
    let k = c1.ctx().real(1) / 24u32;
    Ok([g1, (&one_a * &t2).scale(&k), (&one_a * &t3).scale(&k)])
}

/// `a_2, a_3, a_4` of an `S_alpha` member from `c1, c2, c3`, by direct
/// coefficient comparison in `1 + z f''/f' = (1 + A w)/(1 - w)`.
pub fn robertson_a234(c1: &CNum, c2: &CNum, c3: &CNum, alpha: f64, ctx: PrecisionContext) -> Result<[CNum; 3]> {
    ClassSpec::robertson(alpha)?;
    let a = ClassSpec::robertson_a(alpha, ctx);
    let one_a = &ctx.one() + &a;
    let a2 = (&one_a * c1).scale(&ctx.real(0.5));
    // (1 + A)/6 ((2 + A) c1^2 + c2)
    let mut t = c2.clone();
    t.add_mul(&(&ctx.complex(2.0, 0.0) + &a), &(c1 * c1));
    let a3 = (&one_a * &t).scale(&(ctx.real(1) / 6u32));
    // (1 + A)/24 (2 c3 + (7 + 3A) c1 c2 + (6 + 5A + A^2) c1^3)
    let mut u = c3.scale(&ctx.real(2));
    let seven_3a = &ctx.complex(7.0, 0.0) + &a.scale(&ctx.real(3));
    u.add_mul(&seven_3a, &(c1 * c2));
    let quad = &(&ctx.complex(6.0, 0.0) + &a.scale(&ctx.real(5))) + &(&a * &a);
    u.add_mul(&quad, &(&(c1 * c1) * c1));
    let a4 = (&one_a * &u).scale(&(ctx.real(1) / 24u32));
    Ok([a2, a3, a4])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{member_from_schwarz, sample_schwarz, sample_seed, SampleKind};

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn near(a: &CNum, b: &CNum) -> bool {
        (a - b).abs() < ctx().tolerance(20)
    }

    fn cr(x: f64) -> CNum {
        ctx().complex(x, 0.0)
    }

    #[test]
    fn koebe_and_half_plane() {
        let c = ctx();
        // Koebe: a_n = n
        let coeffs: Vec<f64> = (0..=21).map(|n| n as f64).collect();
        let k = TruncatedSeries::from_f64(c, &coeffs).unwrap();
        let g = log_coeffs(&k, 20).unwrap();
        for n in 1..=20 {
            assert!(near(g.get(n), &c.from_real(&(c.real(1) / n as u32))));
        }
        // z/(1 - z)
        let l = TruncatedSeries::geometric(c, 21).mul_z().truncate(21);
        let g = log_coeffs(&l, 20).unwrap();
        for n in 1..=20 {
            assert!(near(g.get(n), &c.from_real(&(c.real(1) / (2 * n) as u32))));
        }
        // f = z
        let z = TruncatedSeries::monomial(c, 1, 6);
        assert!(log_coeffs(&z, 5).unwrap().as_slice().iter().all(CNum::is_zero));
    }

    #[test]
    fn rejects_bad_input() {
        let c = ctx();
        let f = TruncatedSeries::from_f64(c, &[1.0, 1.0, 0.0]).unwrap();
        assert!(log_coeffs(&f, 1).is_err());
        let f = TruncatedSeries::from_f64(c, &[0.0, 1.0, 0.0]).unwrap();
        assert!(log_coeffs(&f, 2).is_err());
        assert!(log_coeffs(&f, 1).is_ok());
    }

    #[test]
    fn from_a_examples() {
        let [g1, g2, g3] = gamma123_from_a(&cr(2.0), &cr(3.0), &cr(4.0));
        assert!(near(&g1, &cr(1.0)) && near(&g2, &cr(0.5)));
        assert!(near(&g3, &ctx().from_real(&(ctx().real(1) / 3u32))));
        let [g1, g2, g3] = gamma123_from_a(&cr(1.0), &cr(1.0), &cr(1.0));
        assert!(near(&g1, &cr(0.5)) && near(&g2, &cr(0.25)));
        assert!(near(&g3, &ctx().from_real(&(ctx().real(1) / 6u32))));
        let z = cr(0.0);
        assert!(gamma123_from_a(&z, &z, &z).iter().all(CNum::is_zero));
    }

    #[test]
    fn janowski_examples() {
        let c = ctx();
        let [g1, g2, g3] = gamma123_janowski(&cr(1.0), &cr(0.0), &cr(0.0), 1.0, -1.0).unwrap();
        assert!(near(&g1, &cr(0.5)) && near(&g2, &cr(0.25)));
        assert!(near(&g3, &c.from_real(&(c.real(1) / 6u32))));
        let [_, g2, _] = gamma123_janowski(&cr(0.0), &cr(1.0), &cr(0.0), 0.3, -0.6).unwrap();
        assert!(near(&g2, &c.from_real(&((c.real(0.3) + c.real(0.6)) / 12u32))));
        assert!(gamma123_janowski(&cr(0.0), &cr(0.0), &cr(0.0), 0.3, 0.6).is_err());
    }

    #[test]
    fn robertson_identity_oracle() {
        // alpha = 0: h2 = z/(1-z) has gamma = (1/2, 1/4, 1/6); the printed
        // prefactor doubles gamma_2 and gamma_3
        let c = ctx();
        let [g1, g2, g3] = gamma123_robertson(&cr(1.0), &cr(0.0), &cr(0.0), 0.0).unwrap();
        assert!(near(&g1, &cr(0.5)) && near(&g2, &cr(0.25)));
        assert!(near(&g3, &c.from_real(&(c.real(1) / 6u32))));
        let [_, p2, p3] = gamma123_robertson_printed(&cr(1.0), &cr(0.0), &cr(0.0), 0.0).unwrap();
        assert!(near(&p2, &cr(0.5)));
        assert!(near(&p3, &c.from_real(&(c.real(1) / 3u32))));
    }

    #[test]
    fn three_robertson_oracles_agree() {
        let c = ctx();
        for i in 0..8 {
            let alpha = -1.2 + 0.3 * i as f64;
            let w = sample_schwarz(sample_seed(5, i), SampleKind::Mixed, 3, c).unwrap();
            let (c1, c2, c3) = (w.coeff(1), w.coeff(2), w.coeff(3));
            let closed = gamma123_robertson(c1, c2, c3, alpha).unwrap();
            let [a2, a3, a4] = robertson_a234(c1, c2, c3, alpha, c).unwrap();
            let via_a = gamma123_from_a(&a2, &a3, &a4);
            let a = ClassSpec::robertson_a(alpha, c);
            let mobius = gamma123_mobius([c1, c2, c3], &a, &cr(-1.0));
            let spec = ClassSpec::robertson(alpha).unwrap();
            let f = member_from_schwarz(&spec, &w, 4).unwrap();
            let series = log_coeffs(f.series(), 3).unwrap();
            for k in 0..3 {
                assert!(near(&closed[k], &via_a[k]), "alpha {alpha} k {k}");
                assert!(near(&closed[k], &mobius[k]));
                assert!(near(&closed[k], series.get(k + 1)));
            }
        }
    }
}
