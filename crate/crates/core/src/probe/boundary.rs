//! `Re Psi(z)` with `Psi = 1 + z psi''/psi'` for the `F(c)` best dominant
//! `psi(z) = (c-1) z / ((1-z)(1 - (1-z)^{c-1}))`, evaluated on or just inside
//! the unit circle next to the singular point `z = 1`.

use serde_json::{json, Value};

use crate::arith::{
    boundary_point, one_minus_boundary_point, radial_one_minus, radial_point, CNum, Jet2, PrecisionContext, Real,
};
use crate::error::{Error, Result};
use crate::series::decimal;

/// Extra bits used to re-evaluate a probe for the stability gate.
pub const GATE_EXTRA_BITS: u32 = 64;
/// Largest precision the gate escalates to before giving up.
pub const GATE_MAX_BITS: u32 = 4096;

/// Where on the ray `theta = (2 - eps) pi` the probe sits.
#[derive(Clone, Debug, PartialEq)]
pub enum ProbeMode {
    /// `z = e^{i theta}`, principal-branch continuation of the closed form.
    Boundary,
    /// `z = (1 - gap) e^{i theta}`.
    Radial { gap: Real },
}

/// One evaluation of `Psi` that passed the stability gate.
#[derive(Clone, Debug)]
pub struct BoundaryProbe {
    pub c: Real,
    pub eps: Real,
    pub mode: ProbeMode,
    pub psi_cap: CNum,
    pub re_psi_cap: Real,
    pub bits_used: u32,
}

impl BoundaryProbe {
    pub fn to_json(&self) -> Value {
        let gap = match &self.mode {
            ProbeMode::Boundary => Value::Null,
            ProbeMode::Radial { gap } => json!(decimal(gap)),
        };
        json!({
            "c": decimal(&self.c),
            "eps": decimal(&self.eps),
            "radial_gap": gap,
            "re_psi": decimal(&self.re_psi_cap),
            "im_psi": decimal(self.psi_cap.im()),
            "bits": self.bits_used,
        })
    }
}

fn check_c(c: &Real) -> Result<()> {
    if !(*c > 0 && *c <= 3) {
        return Err(Error::InvalidParameter(format!(
            "c must lie in (0, 3], got {}",
            decimal(c)
        )));
    }
    Ok(())
}

/// `Psi(z0)` given `z0` and `u0 = 1 - z0` (passed separately so that `u0`
/// keeps full relative accuracy near `z = 1`).
pub fn psi_cap_at(c: &Real, z0: &CNum, u0: &CNum) -> Result<CNum> {
    let ctx = z0.ctx();
    let one = ctx.one();
    let z = Jet2::variable(z0.clone());
    let u = Jet2::new(u0.clone(), -one.clone(), ctx.zero());
    let psi = if *c == 1u32 {
        // z/((1-z)(-log(1-z)))
        let den = u.mul(&u.ln()?).scale(&-one.clone());
        z.div(&den)?
    } else {
        let cm1 = ctx.from_real(&ctx.real(c - 1u32));
        let w = u.pow(&cm1)?;
        let den = u.mul(&Jet2::constant(one.clone()).sub(&w));
        z.scale(&cm1).div(&den)?
    };
    if psi.df.is_zero() {
        return Err(Error::VanishingDerivative);
    }
    let ratio = (z0 * &psi.d2f).checked_div(&psi.df)?;
    Ok(&one + &ratio)
}

fn eval_mode(c: &Real, eps: &Real, mode: &ProbeMode) -> Result<CNum> {
    let (z0, u0) = match mode {
        ProbeMode::Boundary => (boundary_point(eps)?, one_minus_boundary_point(eps)?),
        ProbeMode::Radial { gap } => {
            let gap = Real::with_val(eps.prec(), gap);
            (radial_point(eps, &gap)?, radial_one_minus(eps, &gap)?)
        }
    };
    psi_cap_at(c, &z0, &u0)
}

/// The gate: `Re Psi` at `bits` and `bits + 64` agree to 1 ppm, or differ by
/// less than `2^-(bits-32) |Psi|` (which covers true zeros of `Re Psi`).
fn gate_passes(lo: &CNum, hi: &CNum, bits: u32) -> bool {
    let ctx = hi.ctx();
    let diff = ctx.real(hi.re() - lo.re()).abs();
    let rel = ctx.real(hi.re()).abs() * 1e-6f64;
    if diff < rel {
        return true;
    }
    let floor = ctx.real(1) >> (bits.saturating_sub(32) as i32);
    diff < floor * hi.abs()
}

fn probe(c: &Real, eps: &Real, mode: ProbeMode, ctx: PrecisionContext) -> Result<BoundaryProbe> {
    check_c(c)?;
    let at = |bits: u32| -> Result<CNum> {
        let c = Real::with_val(bits, c);
        let eps = Real::with_val(bits, eps);
        eval_mode(&c, &eps, &mode)
    };
    let base = at(ctx.bits())?;
    let mut bits = ctx.bits();
    let mut lo = base.clone();
    loop {
        let hi = at(bits + GATE_EXTRA_BITS)?;
        if gate_passes(&lo, &hi, bits) {
            if bits != ctx.bits() {
                return Err(Error::InsufficientPrecision {
                    bits_tried: ctx.bits(),
                    required_bits: bits,
                });
            }
            break;
        }
        bits += GATE_EXTRA_BITS;
        if bits > GATE_MAX_BITS {
            return Err(Error::InsufficientPrecision {
                bits_tried: ctx.bits(),
                required_bits: GATE_MAX_BITS + GATE_EXTRA_BITS,
            });
        }
        lo = hi;
    }
    Ok(BoundaryProbe {
        c: ctx.real(c),
        eps: ctx.real(eps),
        mode,
        re_psi_cap: base.re().clone(),
        psi_cap: base,
        bits_used: ctx.bits(),
    })
}

/// `Re Psi(e^{i(2 - eps) pi})`, gated: fails with
/// [`Error::InsufficientPrecision`] when `ctx` is too coarse to settle the value.
pub fn re_psi_boundary(c: &Real, eps: &Real, ctx: PrecisionContext) -> Result<BoundaryProbe> {
    probe(c, eps, ProbeMode::Boundary, ctx)
}

/// `Re Psi((1 - gap) e^{i(2 - eps) pi})`, gated as [`re_psi_boundary`].
pub fn re_psi_radial(c: &Real, eps: &Real, gap: &Real, ctx: PrecisionContext) -> Result<BoundaryProbe> {
    probe(c, eps, ProbeMode::Radial { gap: ctx.real(gap) }, ctx)
}

/// Probes over a list of offsets; failures are kept per point.
#[derive(Debug)]
pub struct ThetaScan {
    pub points: Vec<(Real, Result<BoundaryProbe>)>,
}

impl ThetaScan {
    /// Index and value of the smallest `Re Psi` among successful points.
    pub fn min(&self) -> Option<(usize, &Real)> {
        self.points
            .iter()
            .enumerate()
            .filter_map(|(i, (_, p))| p.as_ref().ok().map(|p| (i, &p.re_psi_cap)))
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(std::cmp::Ordering::Equal))
    }
}

pub fn scan_theta(c: &Real, eps_grid: &[Real], ctx: PrecisionContext) -> ThetaScan {
    ThetaScan {
        points: eps_grid
            .iter()
            .map(|eps| (eps.clone(), re_psi_boundary(c, eps, ctx)))
            .collect(),
    }
}

/// Printed rows `(c, eps, Re Psi)`; the `c = 0.4` row appears twice.
pub const TABLE1_ROWS: [(&str, &str, f64); 10] = [
    ("0.1", "1e-20", -1.66e6),
    ("0.15", "1e-31", -1.02e24),
    ("0.2", "1e-28", -1.077e22),
    ("0.25", "1e-13", -375.774),
    ("0.3", "1e-30", -9.57e31),
    ("0.35", "1e-17", -4.65e12),
    ("0.4", "1e-20", -2.05e19),
    ("0.45", "1e-19", -3.41e19),
    ("0.4", "1e-20", -2.05e19),
    ("0.5", "1e-20", -2.18e13),
];

/// Radial offset used for the cross-check of each row.
pub const TABLE1_RADIAL_GAP: &str = "1e-40";

#[derive(Debug)]
pub struct Table1Row {
    pub c: String,
    pub eps: String,
    pub printed_re_psi: f64,
    pub boundary: BoundaryProbe,
    pub radial: BoundaryProbe,
}

impl Table1Row {
    pub fn theta_description(&self) -> String {
        format!("(2-{})pi", self.eps)
    }

    pub fn sign_agrees(&self) -> bool {
        self.boundary.re_psi_cap.is_sign_negative() == (self.printed_re_psi < 0.0)
            && !self.boundary.re_psi_cap.is_zero()
    }

    pub fn radial_sign_agrees(&self) -> bool {
        self.boundary.re_psi_cap.is_sign_negative() == self.radial.re_psi_cap.is_sign_negative()
    }

    /// `|computed / printed|`.
    pub fn magnitude_ratio(&self) -> f64 {
        (self.boundary.re_psi_cap.to_f64() / self.printed_re_psi).abs()
    }
}

/// Evaluates every printed row on the circle and radially; repeated rows are
/// computed once.
pub fn table1(ctx: PrecisionContext) -> Result<Vec<Table1Row>> {
    let gap = ctx.parse_real(TABLE1_RADIAL_GAP)?;
    let mut rows: Vec<Table1Row> = Vec::with_capacity(TABLE1_ROWS.len());
    for (c, eps, printed) in TABLE1_ROWS {
        if let Some(prev) = rows.iter().find(|r| r.c == c && r.eps == eps) {
            let copy = Table1Row {
                c: prev.c.clone(),
                eps: prev.eps.clone(),
                printed_re_psi: printed,
                boundary: prev.boundary.clone(),
                radial: prev.radial.clone(),
            };
            rows.push(copy);
            continue;
        }
        let cr = ctx.parse_real(c)?;
        let er = ctx.parse_real(eps)?;
        rows.push(Table1Row {
            c: c.to_string(),
            eps: eps.to_string(),
            printed_re_psi: printed,
            boundary: re_psi_boundary(&cr, &er, ctx)?,
            radial: re_psi_radial(&cr, &er, &gap, ctx)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn r(s: &str) -> Real {
        ctx().parse_real(s).unwrap()
    }

    #[test]
    fn half_plane_case_has_zero_real_part() {
        // c = 2: Psi = (1 + z)/(1 - z), purely imaginary on the circle
        for eps in ["0.5", "1e-10", "1e-31", "1.7"] {
            let p = re_psi_boundary(&r("2"), &r(eps), ctx()).unwrap();
            assert!(p.re_psi_cap.clone().abs() < 1e-30, "{eps}");
            let z = boundary_point(&r(eps)).unwrap();
            let expect = (&ctx().one() + &z)
                .checked_div(&one_minus_boundary_point(&r(eps)).unwrap())
                .unwrap();
            assert!((&p.psi_cap - &expect).abs() < ctx().tolerance(32) * expect.abs());
        }
    }

    #[test]
    fn jets_match_the_series_inside_the_disk() {
        // at |z| = 0.3 compare against Psi from the psi series
        use crate::classes::{psi_series_closed, ClassSpec};
        let c = ctx();
        for cv in [0.25, 1.0, 1.5, 2.7] {
            let spec = ClassSpec::fc(cv).unwrap();
            let psi = psi_series_closed(&spec, 400, c).unwrap();
            let d1 = psi.derive().unwrap();
            let d2 = d1.derive().unwrap();
            let z0 = c.complex(0.18, -0.24);
            let u0 = &c.one() - &z0;
            let series = &c.one() + &(&z0 * &d2.eval(&z0)).checked_div(&d1.eval(&z0)).unwrap();
            let jet = psi_cap_at(&c.real(cv), &z0, &u0).unwrap();
            assert!((&jet - &series).abs() < 1e-60, "c = {cv}");
        }
    }

    #[test]
    fn table1_points_have_positive_real_part() {
        // high-precision values at the printed points; the printed column is
        // negative at every row
        let expect = [
            ("0.1", "1e-20", 625.6663534),
            ("0.25", "1e-13", 1848.42921),
            ("0.5", "1e-20", 0.25),
        ];
        for (cv, eps, val) in expect {
            let p = re_psi_boundary(&r(cv), &r(eps), ctx()).unwrap();
            let got = p.re_psi_cap.to_f64();
            assert!((got - val).abs() < 1e-6 * val.abs(), "c = {cv}: {got}");
        }
    }

    #[test]
    fn negative_real_part_for_c_above_one_half() {
        // near z = 1 the dominant fails to be convex once c is in (1/2, 2)
        let p = re_psi_boundary(&r("0.75"), &r("1e-6"), ctx()).unwrap();
        assert!(p.re_psi_cap.is_sign_negative());
        let p = re_psi_boundary(&r("1.5"), &r("1e-6"), ctx()).unwrap();
        assert!(p.re_psi_cap.is_sign_negative());
    }

    #[test]
    fn radial_and_boundary_agree() {
        let gap = r("1e-40");
        let a = re_psi_boundary(&r("0.3"), &r("1e-10"), ctx()).unwrap();
        let b = re_psi_radial(&r("0.3"), &r("1e-10"), &gap, ctx()).unwrap();
        let rel = ((a.re_psi_cap - b.re_psi_cap.clone()) / b.re_psi_cap).abs();
        assert!(rel < 1e-20);
    }

    #[test]
    fn scan_handles_empty_and_bad_points() {
        assert!(scan_theta(&r("0.3"), &[], ctx()).points.is_empty());
        let s = scan_theta(&r("0.3"), &[r("1e-5"), r("3"), r("1e-8")], ctx());
        assert!(s.points[1].1.is_err());
        assert!(s.min().is_some());
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(re_psi_boundary(&r("0"), &r("1e-5"), ctx()).is_err());
        assert!(re_psi_boundary(&r("3.5"), &r("1e-5"), ctx()).is_err());
        assert!(re_psi_boundary(&r("0.3"), &r("0"), ctx()).is_err());
    }

    #[test]
    fn coarse_precision_is_reported() {
        // 64 bits cannot resolve 1 - z at eps = 1e-31 against the gate
        let c64 = PrecisionContext::new(64).unwrap();
        let c = c64.parse_real("0.15").unwrap();
        let eps = c64.parse_real("1e-31").unwrap();
        match re_psi_boundary(&c, &eps, c64) {
            Ok(p) => assert!(p.re_psi_cap > 0),
            Err(Error::InsufficientPrecision { required_bits, .. }) => assert!(required_bits > 64),
            Err(e) => panic!("{e}"),
        }
    }
}
