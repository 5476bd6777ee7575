//! C interface to `logcoeff`.
//!
//! Classes and series cross the boundary as opaque handles owned by the caller
//! and released with the matching `*_free`. Every fallible call returns an
//! [`LcStatus`]; on failure `lc_last_error` describes the problem. Strings
//! returned by the library are freed with [`lc_string_free`].
//!
//! `bits = 0` selects the default precision of 256 bits.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use logcoeff::arith::{PrecisionContext, DEFAULT_BITS};
use logcoeff::bounds::{class_gamma_bounds, ps_bound, ps_classify, RegionId};
use logcoeff::classes::{extremal_series, psi_series_closed, psi_series_recurrence};
use logcoeff::logcoef::log_coeffs;
use logcoeff::probe::re_psi_boundary;
use logcoeff::{ClassSpec, Error, TruncatedSeries};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Domain = 4,
    InsufficientPrecision = 5,
    /// The class's parameters fall outside the regions its bound is stated for.
    UncoveredRegion = 6,
    OutOfRange = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 8,
}

/// Prokhorov-Szynal regions; `LC_REGION_POINT21` is the point `(2, 1)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcRegion {
    D1 = 1,
    D2 = 2,
    D3 = 3,
    D4 = 4,
    D5 = 5,
    D6 = 6,
    D7 = 7,
    D8 = 8,
    D9 = 9,
    D10 = 10,
    D11 = 11,
    D12 = 12,
    Point21 = 13,
}

impl From<RegionId> for LcRegion {
    fn from(r: RegionId) -> Self {
        match r {
            RegionId::D1 => Self::D1,
            RegionId::D2 => Self::D2,
            RegionId::D3 => Self::D3,
            RegionId::D4 => Self::D4,
            RegionId::D5 => Self::D5,
            RegionId::D6 => Self::D6,
            RegionId::D7 => Self::D7,
            RegionId::D8 => Self::D8,
            RegionId::D9 => Self::D9,
            RegionId::D10 => Self::D10,
            RegionId::D11 => Self::D11,
            RegionId::D12 => Self::D12,
            RegionId::SpecialPoint21 => Self::Point21,
        }
    }
}

/// Opaque class handle.
pub struct LcClass {
    spec: ClassSpec,
}

/// Opaque truncated power series handle.
pub struct LcSeries {
    series: TruncatedSeries,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LcStatus {
    match e {
        Error::Parse(_) => LcStatus::Parse,
        Error::InvalidSpec(_) | Error::InvalidParameter(_) | Error::InvalidSchwarz(_) => LcStatus::InvalidArgument,
        Error::InsufficientPrecision { .. } => LcStatus::InsufficientPrecision,
        Error::UncoveredRegion(_) => LcStatus::UncoveredRegion,
        _ => LcStatus::Domain,
    }
}

struct Fail(LcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error: panic caught at the C boundary");
            LcStatus::Internal
        }
    }
}

fn context(bits: u32) -> Result<PrecisionContext, Fail> {
    Ok(PrecisionContext::new(if bits == 0 { DEFAULT_BITS } else { bits })?)
}

fn null(what: &str) -> Fail {
    Fail(LcStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(LcStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn class_ref<'a>(p: *const LcClass) -> Result<&'a ClassSpec, Fail> {
    p.as_ref().map(|c| &c.spec).ok_or_else(|| null("class"))
}

unsafe fn series_ref<'a>(p: *const LcSeries) -> Result<&'a TruncatedSeries, Fail> {
    p.as_ref().map(|s| &s.series).ok_or_else(|| null("series"))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn boxed_series(series: TruncatedSeries) -> *mut LcSeries {
    Box::into_raw(Box::new(LcSeries { series }))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn lc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `fc=<c>`, `janowski=<A>,<B>` or `robertson=<alpha>`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_class_parse(text: *const c_char, out: *mut *mut LcClass) -> LcStatus {
    guard(|| {
        let spec: ClassSpec = read_str(text, "text")?.parse()?;
        put(out, Box::into_raw(Box::new(LcClass { spec })), "out")
    })
}

/// # Safety
/// `class` must come from [`lc_class_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lc_class_free(class: *mut LcClass) {
    if !class.is_null() {
        drop(Box::from_raw(class));
    }
}

/// Coefficients `psi_0..psi_order` of the class's best dominant, from the
/// recurrence, or from the closed form when `closed` is nonzero.
///
/// # Safety
/// `class` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_psi_series(
    class: *const LcClass,
    order: usize,
    bits: u32,
    closed: c_int,
    out: *mut *mut LcSeries,
) -> LcStatus {
    guard(|| {
        let spec = class_ref(class)?;
        let ctx = context(bits)?;
        let s = if closed != 0 {
            psi_series_closed(spec, order, ctx)?
        } else {
            psi_series_recurrence(spec, order, ctx)
        };
        put(out, boxed_series(s), "out")
    })
}

/// The class's extremal function `z + a_2 z^2 + ...` to `order`.
///
/// # Safety
/// `class` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_extremal_series(
    class: *const LcClass,
    order: usize,
    bits: u32,
    out: *mut *mut LcSeries,
) -> LcStatus {
    guard(|| {
        let s = extremal_series(class_ref(class)?, order, context(bits)?)?;
        put(out, boxed_series(s), "out")
    })
}

/// Logarithmic coefficients of a normalized series `f`: the result has
/// `gamma_n` at index `n` for `1 <= n <= count` and zero at index 0.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_log_coeffs(f: *const LcSeries, count: usize, out: *mut *mut LcSeries) -> LcStatus {
    guard(|| {
        let f = series_ref(f)?;
        let g = log_coeffs(f, count)?;
        let mut coeffs = vec![f.ctx().zero()];
        coeffs.extend(g.as_slice().iter().cloned());
        put(out, boxed_series(TruncatedSeries::from_coeffs(coeffs)?), "out")
    })
}

/// Number of stored coefficients (`order + 1`); 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_series_len(s: *const LcSeries) -> usize {
    s.as_ref().map_or(0, |s| s.series.order() + 1)
}

/// Coefficient `n` rounded to doubles.
///
/// # Safety
/// `s` must be a live handle; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_series_coeff(s: *const LcSeries, n: usize, re: *mut f64, im: *mut f64) -> LcStatus {
    guard(|| {
        let s = series_ref(s)?;
        if n > s.order() {
            return Err(Fail(
                LcStatus::OutOfRange,
                format!("index {n} beyond order {}", s.order()),
            ));
        }
        let (r, i) = s.coeff(n).to_f64_pair();
        put(re, r, "re")?;
        put(im, i, "im")
    })
}

/// The series as a JSON array of `[re, im]` decimal strings at full
/// precision; free the result with [`lc_string_free`].
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_series_json(s: *const LcSeries, out: *mut *mut c_char) -> LcStatus {
    guard(|| {
        let text = CString::new(series_ref(s)?.to_json()).map_err(|e| Fail(LcStatus::Internal, e.to_string()))?;
        put(out, text.into_raw(), "out")
    })
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lc_series_free(s: *mut LcSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Region of `(mu, nu)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_ps_classify(mu: f64, nu: f64, out: *mut LcRegion) -> LcStatus {
    guard(|| {
        let ctx = PrecisionContext::default();
        let r = ps_classify(&ctx.real(mu), &ctx.real(nu))?;
        put(out, r.into(), "out")
    })
}

/// Sharp bound of `|c_3 + mu c_1 c_2 + nu c_1^3|` over Schwarz functions.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_ps_bound(mu: f64, nu: f64, out: *mut f64) -> LcStatus {
    guard(|| {
        let ctx = PrecisionContext::default();
        let b = ps_bound(&ctx.real(mu), &ctx.real(nu))?;
        put(out, b.to_f64(), "out")
    })
}

/// Bounds of `|gamma_1|, |gamma_2|, |gamma_3|` over the class, written to
/// `out[0..3]`. Janowski parameters outside the covered regions give
/// `LC_STATUS_UNCOVERED_REGION`.
///
/// # Safety
/// `class` must be a live handle; `out` must point to 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn lc_gamma_bounds(class: *const LcClass, bits: u32, out: *mut f64) -> LcStatus {
    guard(|| {
        let spec = class_ref(class)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let b = class_gamma_bounds(spec, context(bits)?)?;
        for (k, r) in b.iter().enumerate() {
            out.add(k).write(r.value.to_f64());
        }
        Ok(())
    })
}

/// `Re Psi` at `e^{i (2 - eps) pi}` for the `F(c)` dominant; `c` and `eps` are
/// decimal strings so tiny offsets survive exactly. `bits_used` (may be NULL)
/// receives the precision at which the result was stable.
///
/// # Safety
/// `c` and `eps` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_re_psi_boundary(
    c: *const c_char,
    eps: *const c_char,
    bits: u32,
    out: *mut f64,
    bits_used: *mut u32,
) -> LcStatus {
    guard(|| {
        let ctx = context(bits)?;
        let cr = ctx.parse_real(read_str(c, "c")?)?;
        let er = ctx.parse_real(read_str(eps, "eps")?)?;
        let p = re_psi_boundary(&cr, &er, ctx)?;
        put(out, p.re_psi_cap.to_f64(), "out")?;
        if !bits_used.is_null() {
            bits_used.write(p.bits_used);
        }
        Ok(())
    })
}
