//! C ABI for lucaslab.
//!
//! Every function returns an [`LlStatus`]; results go through out-pointers.
//! Objects are opaque handles released with the matching `*_free`. On a
//! non-OK status, `ll_last_error_message` describes the failure for the
//! calling thread. Strings returned by the library are freed with
//! `ll_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lucaslab::counting;
use lucaslab::rootfind;
use lucaslab::{
    CoefficientPolynomial, ComplexPoint, ConvexDomain, Error, RootSolveResult, SequenceSpec,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LlComplex {
    pub re: f64,
    pub im: f64,
}

impl From<LlComplex> for ComplexPoint {
    fn from(z: LlComplex) -> Self {
        ComplexPoint::new(z.re, z.im)
    }
}

impl From<ComplexPoint> for LlComplex {
    fn from(z: ComplexPoint) -> Self {
        LlComplex { re: z.re, im: z.im }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    InvalidDomain = 3,
    Overflow = 4,
    /// the solver stopped before every residual met the tolerance
    NotConverged = 5,
    /// a point lies too close to a pole, contour or sampling radius
    Geometry = 6,
    /// quadrature or construction check failed
    Numerical = 7,
    Panic = 8,
}

/// Coefficient-form polynomial.
pub struct LlPolynomial(CoefficientPolynomial);

/// Open convex domain (disk or polygon).
pub struct LlDomain(ConvexDomain);

/// Roots with per-root residuals.
pub struct LlRoots(RootSolveResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LlStatus {
    match e {
        Error::InvalidDomain(_) => LlStatus::InvalidDomain,
        Error::EvaluationOverflow
        | Error::CoefficientOverflow { .. }
        | Error::UnsupportedDegree { .. } => LlStatus::Overflow,
        Error::Pole { .. }
        | Error::DegenerateRadius { .. }
        | Error::AnalyticityViolated { .. }
        | Error::ContourTooClose { .. } => LlStatus::Geometry,
        Error::NonIntegerWinding { .. } | Error::ConstructionInvariant(_) => LlStatus::Numerical,
        _ => LlStatus::InvalidInput,
    }
}

struct Fail(LlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LlStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(LlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn points(ptr: *const LlComplex, len: usize, what: &str) -> Result<Vec<ComplexPoint>, Fail> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len)
        .iter()
        .map(|&z| z.into())
        .collect())
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(LlStatus::InvalidInput, format!("{what} is not UTF-8")))
}

fn json_out(value: &impl serde::Serialize, dst: &mut *mut c_char) -> Result<(), Fail> {
    let s =
        serde_json::to_string(value).map_err(|e| Fail(LlStatus::InvalidInput, e.to_string()))?;
    *dst = CString::new(s)
        .expect("JSON has no interior NUL")
        .into_raw();
    Ok(())
}

fn parse<T: serde::de::DeserializeOwned>(s: &str, what: &str) -> Result<T, Fail> {
    serde_json::from_str(s)
        .map_err(|e| Fail(LlStatus::InvalidInput, format!("invalid {what}: {e}")))
}

/// Message for the last failed call on this thread; empty if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ll_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ll_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Polynomial from `len` ascending coefficients.
///
/// # Safety
/// `coeffs` must point to `len` values; `out_poly` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_new(
    coeffs: *const LlComplex,
    len: usize,
    out_poly: *mut *mut LlPolynomial,
) -> LlStatus {
    guard(|| {
        let dst = out(out_poly, "out_poly")?;
        let p = CoefficientPolynomial::new(points(coeffs, len, "coeffs")?)?;
        *dst = Box::into_raw(Box::new(LlPolynomial(p)));
        Ok(())
    })
}

/// Polynomial from JSON `{"coeffs": [[re, im], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out_poly` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_from_json(
    json: *const c_char,
    out_poly: *mut *mut LlPolynomial,
) -> LlStatus {
    guard(|| {
        let dst = out(out_poly, "out_poly")?;
        let p: CoefficientPolynomial = parse(text(json, "json")?, "polynomial")?;
        *dst = Box::into_raw(Box::new(LlPolynomial(p)));
        Ok(())
    })
}

/// Monic-times-`leading` polynomial with the given roots.
///
/// # Safety
/// `roots` must point to `len` values; `out_poly` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_from_roots(
    roots: *const LlComplex,
    len: usize,
    leading: LlComplex,
    out_poly: *mut *mut LlPolynomial,
) -> LlStatus {
    guard(|| {
        let dst = out(out_poly, "out_poly")?;
        let p = CoefficientPolynomial::from_roots(&points(roots, len, "roots")?, leading.into())?;
        *dst = Box::into_raw(Box::new(LlPolynomial(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_free(p: *mut LlPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree, or -1 for the zero polynomial.
///
/// # Safety
/// Valid handle and writable `out_degree`.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_degree(
    p: *const LlPolynomial,
    out_degree: *mut i64,
) -> LlStatus {
    guard(|| {
        let p = get(p, "p")?;
        *out(out_degree, "out_degree")? = p.0.degree().map_or(-1, |d| d as i64);
        Ok(())
    })
}

/// # Safety
/// Valid handle and writable `out_value`.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_evaluate(
    p: *const LlPolynomial,
    z: LlComplex,
    out_value: *mut LlComplex,
) -> LlStatus {
    guard(|| {
        let p = get(p, "p")?;
        let dst = out(out_value, "out_value")?;
        *dst = p.0.evaluate(z.into())?.into();
        Ok(())
    })
}

/// # Safety
/// Valid handle and writable `out_poly`.
#[no_mangle]
pub unsafe extern "C" fn ll_polynomial_derivative(
    p: *const LlPolynomial,
    out_poly: *mut *mut LlPolynomial,
) -> LlStatus {
    guard(|| {
        let p = get(p, "p")?;
        let dst = out(out_poly, "out_poly")?;
        *dst = Box::into_raw(Box::new(LlPolynomial(p.0.derivative())));
        Ok(())
    })
}

/// # Safety
/// `out_domain` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_domain_disk(
    center: LlComplex,
    radius: f64,
    out_domain: *mut *mut LlDomain,
) -> LlStatus {
    guard(|| {
        let dst = out(out_domain, "out_domain")?;
        *dst = Box::into_raw(Box::new(LlDomain(ConvexDomain::disk(
            center.into(),
            radius,
        )?)));
        Ok(())
    })
}

/// Convex polygon from counterclockwise vertices.
///
/// # Safety
/// `vertices` must point to `len` values; `out_domain` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_domain_polygon(
    vertices: *const LlComplex,
    len: usize,
    out_domain: *mut *mut LlDomain,
) -> LlStatus {
    guard(|| {
        let dst = out(out_domain, "out_domain")?;
        let d = ConvexDomain::polygon(points(vertices, len, "vertices")?)?;
        *dst = Box::into_raw(Box::new(LlDomain(d)));
        Ok(())
    })
}

/// Domain from JSON, e.g. `{"disk": {"center": [0, 0], "radius": 1}}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out_domain` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_domain_from_json(
    json: *const c_char,
    out_domain: *mut *mut LlDomain,
) -> LlStatus {
    guard(|| {
        let dst = out(out_domain, "out_domain")?;
        let d: ConvexDomain = parse(text(json, "json")?, "domain")?;
        *dst = Box::into_raw(Box::new(LlDomain(d)));
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ll_domain_free(d: *mut LlDomain) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Open-set membership: signed distance below `-boundary_tol`.
///
/// # Safety
/// Valid handle and writable `out_inside`.
#[no_mangle]
pub unsafe extern "C" fn ll_domain_contains(
    d: *const LlDomain,
    z: LlComplex,
    boundary_tol: f64,
    out_inside: *mut bool,
) -> LlStatus {
    guard(|| {
        let d = get(d, "d")?;
        *out(out_inside, "out_inside")? = d.0.contains(z.into(), boundary_tol);
        Ok(())
    })
}

/// # Safety
/// Valid handle and writable `out_distance`.
#[no_mangle]
pub unsafe extern "C" fn ll_domain_distance(
    d: *const LlDomain,
    z: LlComplex,
    out_distance: *mut f64,
) -> LlStatus {
    guard(|| {
        let d = get(d, "d")?;
        *out(out_distance, "out_distance")? = d.0.distance_to(z.into());
        Ok(())
    })
}

/// All roots of `p`. A result is stored even when the status is
/// `NOT_CONVERGED`; it then holds the best iterate.
///
/// # Safety
/// Valid handle and writable `out_roots`.
#[no_mangle]
pub unsafe extern "C" fn ll_solve(
    p: *const LlPolynomial,
    tol: f64,
    max_iter: usize,
    out_roots: *mut *mut LlRoots,
) -> LlStatus {
    guard(|| {
        let p = get(p, "p")?;
        let dst = out(out_roots, "out_roots")?;
        store_roots(rootfind::solve(&p.0, tol, max_iter)?, dst)
    })
}

/// Zeros of `p'` for `p` with the given roots.
///
/// # Safety
/// `roots` must point to `len` values; `out_roots` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ll_critical_points(
    roots: *const LlComplex,
    len: usize,
    tol: f64,
    max_iter: usize,
    out_roots: *mut *mut LlRoots,
) -> LlStatus {
    guard(|| {
        let dst = out(out_roots, "out_roots")?;
        let r = rootfind::critical_points(&points(roots, len, "roots")?, tol, max_iter)?;
        store_roots(r, dst)
    })
}

fn store_roots(r: RootSolveResult, dst: &mut *mut LlRoots) -> Result<(), Fail> {
    let converged = r.converged;
    let msg = format!(
        "not converged after {} iterations (max residual {:e})",
        r.iterations,
        r.max_residual()
    );
    *dst = Box::into_raw(Box::new(LlRoots(r)));
    if converged {
        Ok(())
    } else {
        Err(Fail(LlStatus::NotConverged, msg))
    }
}

/// # Safety
/// `r` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ll_roots_free(r: *mut LlRoots) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// Valid handle and writable `out_len`.
#[no_mangle]
pub unsafe extern "C" fn ll_roots_len(r: *const LlRoots, out_len: *mut usize) -> LlStatus {
    guard(|| {
        *out(out_len, "out_len")? = get(r, "r")?.0.roots.len();
        Ok(())
    })
}

/// Root `index` and its scaled residual.
///
/// # Safety
/// Valid handle; `out_root` and `out_residual` writable.
#[no_mangle]
pub unsafe extern "C" fn ll_roots_get(
    r: *const LlRoots,
    index: usize,
    out_root: *mut LlComplex,
    out_residual: *mut f64,
) -> LlStatus {
    guard(|| {
        let r = &get(r, "r")?.0;
        let root_dst = out(out_root, "out_root")?;
        let res_dst = out(out_residual, "out_residual")?;
        if index >= r.roots.len() {
            return Err(Fail(
                LlStatus::InvalidInput,
                format!("index {index} out of range for {} roots", r.roots.len()),
            ));
        }
        *root_dst = r.roots[index].into();
        *res_dst = r.residuals[index];
        Ok(())
    })
}

/// Copies up to `capacity` roots into `buffer`.
///
/// # Safety
/// Valid handle; `buffer` must hold `capacity` values; `out_written` writable.
#[no_mangle]
pub unsafe extern "C" fn ll_roots_copy(
    r: *const LlRoots,
    buffer: *mut LlComplex,
    capacity: usize,
    out_written: *mut usize,
) -> LlStatus {
    guard(|| {
        let r = &get(r, "r")?.0;
        let written = out(out_written, "out_written")?;
        let n = r.roots.len().min(capacity);
        if n > 0 && buffer.is_null() {
            return Err(null("buffer"));
        }
        for (k, z) in r.roots[..n].iter().enumerate() {
            *buffer.add(k) = (*z).into();
        }
        *written = n;
        Ok(())
    })
}

/// # Safety
/// Valid handle and writable `out_converged`.
#[no_mangle]
pub unsafe extern "C" fn ll_roots_converged(
    r: *const LlRoots,
    out_converged: *mut bool,
) -> LlStatus {
    guard(|| {
        *out(out_converged, "out_converged")? = get(r, "r")?.0.converged;
        Ok(())
    })
}

/// Points in `Ω_eps` (or in Ω when `eps == 0`), plus the number of points
/// within grazing distance of the boundary.
///
/// # Safety
/// `pts` must point to `len` values; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn ll_count_in(
    pts: *const LlComplex,
    len: usize,
    d: *const LlDomain,
    eps: f64,
    out_count: *mut usize,
    out_grazing: *mut usize,
) -> LlStatus {
    guard(|| {
        let d = get(d, "d")?;
        let count = out(out_count, "out_count")?;
        let grazing = out(out_grazing, "out_grazing")?;
        if !(eps >= 0.0) {
            return Err(Fail(
                LlStatus::InvalidInput,
                format!("eps must be >= 0, got {eps}"),
            ));
        }
        let c = counting::count_in(&points(pts, len, "pts")?, &d.0, eps);
        *count = c.count;
        *grazing = c.grazing;
        Ok(())
    })
}

/// Zeros of `p` inside `∂Ω_eps` by the argument principle.
///
/// # Safety
/// Valid handles and writable `out_count`.
#[no_mangle]
pub unsafe extern "C" fn ll_argument_principle_count(
    p: *const LlPolynomial,
    d: *const LlDomain,
    eps: f64,
    nodes_per_unit: usize,
    out_count: *mut i64,
) -> LlStatus {
    guard(|| {
        let p = get(p, "p")?;
        let d = get(d, "d")?;
        let dst = out(out_count, "out_count")?;
        *dst = counting::argument_principle_count(&p.0, &d.0, eps, nodes_per_unit)?.count;
        Ok(())
    })
}

/// Ratio report as JSON; free the string with `ll_string_free`.
///
/// # Safety
/// `p_roots`/`dp_roots` must point to their lengths; valid domain handle;
/// `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ll_ratio_report_json(
    p_roots: *const LlComplex,
    p_len: usize,
    dp_roots: *const LlComplex,
    dp_len: usize,
    d: *const LlDomain,
    eps: f64,
    n: usize,
    out_json: *mut *mut c_char,
) -> LlStatus {
    guard(|| {
        let d = get(d, "d")?;
        let dst = out(out_json, "out_json")?;
        let report = counting::ratio_report(
            &points(p_roots, p_len, "p_roots")?,
            &points(dp_roots, dp_len, "dp_roots")?,
            &d.0,
            eps,
            n,
        )?;
        json_out(&report, dst)
    })
}

/// The degree-`n` member of a sequence given as SequenceSpec JSON, itself
/// serialized as JSON; free with `ll_string_free`.
///
/// # Safety
/// `spec_json` must be a NUL-terminated string; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ll_sequence_instance_json(
    spec_json: *const c_char,
    n: usize,
    out_json: *mut *mut c_char,
) -> LlStatus {
    guard(|| {
        let dst = out(out_json, "out_json")?;
        let spec: SequenceSpec = parse(text(spec_json, "spec_json")?, "sequence spec")?;
        json_out(&spec.instance(n)?, dst)
    })
}
