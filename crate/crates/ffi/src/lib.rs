//! C ABI for `harmonia`.
//!
//! Every fallible function returns an [`HmStatus`]; on failure a message is
//! available from [`hm_last_error_message`] on the same thread. Objects are
//! opaque handles created by `*_new` functions and released by the matching
//! `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use harmonia::cli::{exit_code, EXIT_USAGE};
use harmonia::cone::HarmonicCone;
use harmonia::freeness::center_matrix_det;
use harmonia::kostka::{generalized_exponents, kostka_foulkes, weight_multiplicity};
use harmonia::{QPolynomial, ReducedWord, RootDatum, Weight, WordStyle};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HmStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed input: unknown type, wrong length, bad word, index out of range.
    InvalidInput = 2,
    /// Well-formed input the library declines: non-dominant weight, budget,
    /// unsupported type for the operation.
    Rejected = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

pub struct HmDatum(RootDatum);

pub struct HmPoly(QPolynomial);

pub struct HmCone(HarmonicCone);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(HmStatus, String);

impl From<harmonia::Error> for Fail {
    fn from(e: harmonia::Error) -> Self {
        let status = if exit_code(&e) == EXIT_USAGE {
            HmStatus::InvalidInput
        } else {
            HmStatus::Rejected
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(HmStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HmStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            HmStatus::Panic
        }
    }
}

unsafe fn slice<'a, T>(ptr: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

unsafe fn deref<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Fail> {
    ptr.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `label` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_datum_new(label: *const c_char, rank: usize, out: *mut *mut HmDatum) -> HmStatus {
    guard(|| {
        if label.is_null() {
            return Err(null("label"));
        }
        let label = CStr::from_ptr(label)
            .to_str()
            .map_err(|_| Fail(HmStatus::InvalidInput, "label is not UTF-8".into()))?;
        let d = RootDatum::from_label(label, rank)?;
        write_out(out, Box::into_raw(Box::new(HmDatum(d))))
    })
}

/// # Safety
/// `datum` must come from [`hm_datum_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_datum_free(datum: *mut HmDatum) {
    if !datum.is_null() {
        drop(Box::from_raw(datum));
    }
}

/// Rank, or 0 for a null handle.
///
/// # Safety
/// `datum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hm_datum_rank(datum: *const HmDatum) -> usize {
    datum.as_ref().map_or(0, |d| d.0.rank())
}

/// # Safety
/// `datum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hm_datum_num_positive_roots(datum: *const HmDatum) -> usize {
    datum.as_ref().map_or(0, |d| d.0.num_positive_roots())
}

/// `K_{λμ}(q)` for weights given by `len` fundamental coordinates each.
///
/// # Safety
/// `lambda` and `mu` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_kostka(
    datum: *const HmDatum,
    lambda: *const i64,
    mu: *const i64,
    len: usize,
    out: *mut *mut HmPoly,
) -> HmStatus {
    guard(|| {
        let d = deref(datum, "datum")?;
        let l = Weight::fundamental(slice(lambda, len, "lambda")?.to_vec());
        let m = Weight::fundamental(slice(mu, len, "mu")?.to_vec());
        let p = kostka_foulkes(&d.0, &l, &m)?;
        write_out(out, Box::into_raw(Box::new(HmPoly(p))))
    })
}

/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_poly_free(poly: *mut HmPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hm_poly_num_terms(poly: *const HmPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.0.num_terms())
}

/// The `index`-th non-zero term in increasing exponent order.
///
/// # Safety
/// `poly` must be a live handle; `exponent` and `coefficient` valid.
#[no_mangle]
pub unsafe extern "C" fn hm_poly_term(
    poly: *const HmPoly,
    index: usize,
    exponent: *mut u32,
    coefficient: *mut i64,
) -> HmStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        let (e, c) = p.0.terms().nth(index).ok_or_else(|| {
            Fail(
                HmStatus::InvalidInput,
                format!("term {index} of {}", p.0.num_terms()),
            )
        })?;
        write_out(exponent, e)?;
        write_out(coefficient, c)
    })
}

/// # Safety
/// `poly` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hm_poly_eval(poly: *const HmPoly, q: i64, out: *mut i64) -> HmStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        write_out(out, p.0.eval(q))
    })
}

/// `dim V(λ)_μ`.
///
/// # Safety
/// `lambda` and `mu` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_weight_multiplicity(
    datum: *const HmDatum,
    lambda: *const i64,
    mu: *const i64,
    len: usize,
    out: *mut u64,
) -> HmStatus {
    guard(|| {
        let d = deref(datum, "datum")?;
        let l = Weight::fundamental(slice(lambda, len, "lambda")?.to_vec());
        let m = Weight::fundamental(slice(mu, len, "mu")?.to_vec());
        write_out(out, weight_multiplicity(&d.0, &l, &m)?)
    })
}

/// Generalized exponents of `λ` in increasing order. `out_len` receives the
/// number of exponents; if it exceeds `capacity` nothing is written to
/// `buffer` and [`HmStatus::BufferTooSmall`] is returned.
///
/// # Safety
/// `lambda` must point to `len` values, `buffer` to `capacity` slots.
#[no_mangle]
pub unsafe extern "C" fn hm_generalized_exponents(
    datum: *const HmDatum,
    lambda: *const i64,
    len: usize,
    buffer: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> HmStatus {
    guard(|| {
        let d = deref(datum, "datum")?;
        let l = Weight::fundamental(slice(lambda, len, "lambda")?.to_vec());
        let ex = generalized_exponents(&d.0, &l)?;
        write_out(out_len, ex.len())?;
        if ex.len() > capacity {
            return Err(Fail(
                HmStatus::BufferTooSmall,
                format!("{} exponents, capacity {capacity}", ex.len()),
            ));
        }
        if !ex.is_empty() {
            if buffer.is_null() {
                return Err(null("buffer"));
            }
            std::ptr::copy_nonoverlapping(ex.as_slice().as_ptr(), buffer, ex.len());
        }
        Ok(())
    })
}

/// The harmonic cone on an explicit reduced word of `nletters` 1-based
/// letters, or on the default word when `nletters` is 0 (the standard
/// word in type A).
///
/// # Safety
/// `letters` must point to `nletters` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_cone_new(
    datum: *const HmDatum,
    letters: *const usize,
    nletters: usize,
    out: *mut *mut HmCone,
) -> HmStatus {
    guard(|| {
        let d = &deref(datum, "datum")?.0;
        let word = if nletters == 0 {
            let style = if d.is_type_a() {
                WordStyle::TypeAStandard
            } else {
                WordStyle::Any
            };
            d.longest_word(style)?
        } else {
            ReducedWord::new(d, slice(letters, nletters, "letters")?.to_vec())?
        };
        let cone = HarmonicCone::new(d, &word)?;
        write_out(out, Box::into_raw(Box::new(HmCone(cone))))
    })
}

/// # Safety
/// `cone` must come from [`hm_cone_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_cone_free(cone: *mut HmCone) {
    if !cone.is_null() {
        drop(Box::from_raw(cone));
    }
}

/// Number of Lusztig coordinates, or 0 for a null handle.
///
/// # Safety
/// `cone` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hm_cone_word_len(cone: *const HmCone) -> usize {
    cone.as_ref().map_or(0, |c| c.0.word().len())
}

/// # Safety
/// `psi` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_cone_contains(
    cone: *const HmCone,
    psi: *const i64,
    len: usize,
    out: *mut bool,
) -> HmStatus {
    guard(|| {
        let c = deref(cone, "cone")?;
        write_out(out, c.0.in_cone(slice(psi, len, "psi")?)?)
    })
}

/// Determinant of the leading `s × s` block of the rank-`n` centre matrix.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_center_matrix_det(n: usize, s: usize, out: *mut i64) -> HmStatus {
    guard(|| {
        let det = center_matrix_det(n, s)?;
        let det = i64::try_from(det).map_err(|_| {
            Fail(
                HmStatus::Rejected,
                format!("determinant {det} does not fit in 64 bits"),
            )
        })?;
        write_out(out, det)
    })
}
