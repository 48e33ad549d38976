//! C ABI over `sl2-epoly`.
//!
//! Conventions:
//! - every fallible function returns an [`Sl2Status`]; results go through
//!   out-pointers, and on failure [`sl2_last_error`] describes the problem;
//! - polynomials are opaque [`Sl2Poly`] handles released with [`sl2_poly_free`];
//! - returned strings are NUL-terminated, owned by the caller and released
//!   with [`sl2_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sl2_epoly::fforacle::verify_counts;
use sl2_epoly::moduli::moduli_epoly;
use sl2_epoly::{check_identities, glue, sector_vector, Error, HolonomyClass, IntPoly};

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    GenusOutOfRange = 3,
    UnknownHolonomy = 4,
    BadPrime = 5,
    Arithmetic = 6,
    Panic = 7,
}

/// An integer polynomial in `q`.
pub struct Sl2Poly(IntPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

struct Failure(Sl2Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::GenusOutOfRange { .. } => Sl2Status::GenusOutOfRange,
            Error::UnknownHolonomy(_) => Sl2Status::UnknownHolonomy,
            Error::NotOddPrime(_) | Error::PrimeTooSmall { .. } | Error::PrimeTooLarge { .. } => {
                Sl2Status::BadPrime
            }
            Error::DivisionByZero | Error::NonExactDivision { .. } => Sl2Status::Arithmetic,
            _ => Sl2Status::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(Sl2Status::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Sl2Status {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".to_owned());
        Err(Failure(Sl2Status::Panic, msg))
    });
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| e.borrow_mut().take());
            Sl2Status::Ok
        }
        Err(Failure(status, msg)) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
            status
        }
    }
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(Sl2Status::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn poly_ref<'a>(p: *const Sl2Poly) -> Result<&'a IntPoly, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("poly"))
}

fn boxed(p: IntPoly) -> *mut Sl2Poly {
    Box::into_raw(Box::new(Sl2Poly(p)))
}

/// Message for the last failed call on this thread, or NULL if it succeeded.
/// Free with [`sl2_string_free`].
#[no_mangle]
pub extern "C" fn sl2_last_error() -> *mut c_char {
    LAST_ERROR
        .with(|e| e.borrow().clone())
        .map_or(ptr::null_mut(), to_c)
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn sl2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// E-polynomial of the character variety with holonomy tag `holonomy`
/// (`id`, `minus-id`, `jplus`, `jminus`, `xi`) at genus `genus >= 1`.
///
/// # Safety
/// `holonomy` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_moduli_epoly(
    holonomy: *const c_char,
    genus: u32,
    out: *mut *mut Sl2Poly,
) -> Sl2Status {
    guard(|| {
        let c: HolonomyClass = read_str(holonomy, "holonomy")?.parse()?;
        let p = moduli_epoly(c, genus)?;
        write_out(out, boxed(p), "out")
    })
}

/// Component `index` (0..8: e0, e1, e2, e3, a, b, c, d) of the genus-`genus`
/// sector vector.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_sector_component(
    genus: u32,
    index: u32,
    out: *mut *mut Sl2Poly,
) -> Sl2Status {
    guard(|| {
        if index >= 8 {
            return Err(Failure(
                Sl2Status::InvalidArgument,
                format!("component index {index} is not in 0..8"),
            ));
        }
        let v = sector_vector(genus);
        write_out(out, boxed(v.components()[index as usize].clone()), "out")
    })
}

/// Parses the `{"var":"q","coeffs":[[deg,"coeff"],...]}` JSON form.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_from_json(
    json: *const c_char,
    out: *mut *mut Sl2Poly,
) -> Sl2Status {
    guard(|| {
        let p: IntPoly = serde_json::from_str(read_str(json, "json")?)
            .map_err(|e| Failure(Sl2Status::InvalidArgument, e.to_string()))?;
        write_out(out, boxed(p), "out")
    })
}

/// Degree of `p`, or -1 for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_degree(p: *const Sl2Poly, out: *mut i64) -> Sl2Status {
    guard(|| {
        let d = poly_ref(p)?.degree().map_or(-1, |d| d as i64);
        write_out(out, d, "out")
    })
}

/// Human-readable form, e.g. `q^6 - 2q^4 - 30q^3 - 2q^2 + 1`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_to_string(p: *const Sl2Poly, out: *mut *mut c_char) -> Sl2Status {
    guard(|| {
        let s = poly_ref(p)?.to_string();
        write_out(out, to_c(s), "out")
    })
}

/// JSON form, the inverse of [`sl2_poly_from_json`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_to_json(p: *const Sl2Poly, out: *mut *mut c_char) -> Sl2Status {
    guard(|| {
        let s = serde_json::to_string(poly_ref(p)?).expect("polynomials serialize");
        write_out(out, to_c(s), "out")
    })
}

/// Coefficient of `q^exp` as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_coeff(
    p: *const Sl2Poly,
    exp: usize,
    out: *mut *mut c_char,
) -> Sl2Status {
    guard(|| {
        let s = poly_ref(p)?.coeff(exp).to_string();
        write_out(out, to_c(s), "out")
    })
}

/// `p(x)` as a decimal string; exact for any `x`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_eval(
    p: *const Sl2Poly,
    x: i64,
    out: *mut *mut c_char,
) -> Sl2Status {
    guard(|| {
        let s = poly_ref(p)?.eval_i64(x).to_string();
        write_out(out, to_c(s), "out")
    })
}

/// Whether `q^d p(1/q) = p`. Fails if `d` is below the degree.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_is_palindromic(
    p: *const Sl2Poly,
    d: usize,
    out: *mut bool,
) -> Sl2Status {
    guard(|| {
        let b = poly_ref(p)?.is_palindromic(d)?;
        write_out(out, b, "out")
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl2_poly_free(p: *mut Sl2Poly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn write_report<T: serde::Serialize>(
    report: &T,
    passed: bool,
    out_passed: *mut bool,
    out_json: *mut *mut c_char,
) -> Result<(), Failure> {
    write_out(out_passed, passed, "passed")?;
    if !out_json.is_null() {
        out_json.write(to_c(
            serde_json::to_string(report).expect("reports serialize"),
        ));
    }
    Ok(())
}

/// Runs the identity suite for genus 1..=`max_genus`. `report_json` may be
/// NULL; otherwise it receives the JSON report.
///
/// # Safety
/// `passed` must be writable; `report_json` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_check_identities(
    max_genus: u32,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> Sl2Status {
    guard(|| {
        let report = check_identities(max_genus)?;
        write_report(&report, report.passed(), passed, report_json)
    })
}

/// Compares point counts over `F_prime` with the polynomials for genus
/// 1..=`max_genus`. `report_json` may be NULL.
///
/// # Safety
/// `passed` must be writable; `report_json` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_verify_counts(
    prime: u64,
    max_genus: u32,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> Sl2Status {
    guard(|| {
        let report = verify_counts(prime, max_genus)?;
        write_report(&report, report.passed(), passed, report_json)
    })
}

/// Glues genus `left` and `right` sector data; JSON with the four sectors
/// and the pushed `(T, N)` monodromy.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl2_glue_json(left: u32, right: u32, out: *mut *mut c_char) -> Sl2Status {
    guard(|| {
        let g = glue(&sector_vector(left), &sector_vector(right));
        write_out(
            out,
            to_c(serde_json::to_string(&g).expect("glue output serializes")),
            "out",
        )
    })
}
