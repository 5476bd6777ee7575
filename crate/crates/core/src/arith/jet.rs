use crate::error::{Error, Result};

use super::{principal_log, CNum, PrecisionContext};

/// Value, first and second derivative of a function at one fixed point.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2 {
    pub f: CNum,
    pub df: CNum,
    pub d2f: CNum,
}

/// Binary and unary jet operations, for callers that dispatch dynamically.
#[derive(Clone, Debug)]
pub enum JetOp {
    Add,
    Mul,
    Div,
    Log,
    Pow(CNum),
}

/// Applies `op` to `a` (and `b` for the binary operations).
pub fn jet_eval(a: &Jet2, b: &Jet2, op: &JetOp) -> Result<Jet2> {
    match op {
        JetOp::Add => Ok(a.add(b)),
        JetOp::Mul => Ok(a.mul(b)),
        JetOp::Div => a.div(b),
        JetOp::Log => a.ln(),
        JetOp::Pow(w) => a.pow(w),
    }
}

impl Jet2 {
    pub fn new(f: CNum, df: CNum, d2f: CNum) -> Self {
        Self { f, df, d2f }
    }

    pub fn constant(c: CNum) -> Self {
        let ctx = c.ctx();
        Self::new(c, ctx.zero(), ctx.zero())
    }

    /// The identity function `z` at `z0`.
    pub fn variable(z0: CNum) -> Self {
        let ctx = z0.ctx();
        Self::new(z0, ctx.one(), ctx.zero())
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.f.ctx()
    }

    pub fn add(&self, rhs: &Jet2) -> Jet2 {
        Jet2::new(&self.f + &rhs.f, &self.df + &rhs.df, &self.d2f + &rhs.d2f)
    }

    pub fn sub(&self, rhs: &Jet2) -> Jet2 {
        Jet2::new(&self.f - &rhs.f, &self.df - &rhs.df, &self.d2f - &rhs.d2f)
    }

    pub fn scale(&self, k: &CNum) -> Jet2 {
        Jet2::new(k * &self.f, k * &self.df, k * &self.d2f)
    }

    pub fn mul(&self, rhs: &Jet2) -> Jet2 {
        let f = &self.f * &rhs.f;
        let mut df = &self.df * &rhs.f;
        df.add_mul(&self.f, &rhs.df);
        let cross = &self.df * &rhs.df;
        let mut d2f = &self.d2f * &rhs.f;
        d2f.add_mul(&self.f, &rhs.d2f);
        let d2f = d2f + cross.clone() + cross;
        Jet2::new(f, df, d2f)
    }

    pub fn div(&self, rhs: &Jet2) -> Result<Jet2> {
        if rhs.f.is_zero() {
            return Err(Error::DivisionByZero("jet division by a zero-valued jet"));
        }
        let q = self.f.checked_div(&rhs.f)?;
        let mut num1 = self.df.clone();
        num1.sub_mul(&q, &rhs.df);
        let dq = num1.checked_div(&rhs.f)?;
        let mut num2 = self.d2f.clone();
        num2.sub_mul(&dq, &rhs.df);
        num2.sub_mul(&dq, &rhs.df);
        num2.sub_mul(&q, &rhs.d2f);
        let d2q = num2.checked_div(&rhs.f)?;
        Ok(Jet2::new(q, dq, d2q))
    }

    /// Principal logarithm of the jet.
    pub fn ln(&self) -> Result<Jet2> {
        if self.f.is_zero() {
            return Err(Error::Domain("logarithm of a zero-valued jet".into()));
        }
        let l = principal_log(&self.f)?;
        let r1 = self.df.checked_div(&self.f)?;
        let r2 = self.d2f.checked_div(&self.f)?;
        let d2 = &r2 - &(&r1 * &r1);
        Ok(Jet2::new(l, r1, d2))
    }

    pub fn exp(&self) -> Jet2 {
        let e = self.f.exp();
        let de = &e * &self.df;
        let inner = &self.d2f + &(&self.df * &self.df);
        let d2e = &e * &inner;
        Jet2::new(e, de, d2e)
    }

    /// Principal power `exp(w log a)`.
    pub fn pow(&self, w: &CNum) -> Result<Jet2> {
        if self.f.is_zero() {
            return Err(Error::Domain("power of a zero-valued jet".into()));
        }
        Ok(self.ln()?.scale(w).exp())
    }
}
