//! C interface to `bondle-core`.
//!
//! Codes and algebras live behind opaque handles created by the `*_parse`,
//! `*_affine` and `*_from_json` constructors and released with the matching
//! `*_free`. Every fallible call returns a [`BondleStatus`]; after a failure
//! [`bondle_last_error`] describes it. Strings returned by the library are
//! released with [`bondle_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bondle_core::algebra::axioms::check_oriented_bondle;
use bondle_core::algebra::{AffineParams, Bondle, BondleTable};
use bondle_core::coloring::count_best;
use bondle_core::diagram::build_diagram;
use bondle_core::gausscode::{parse, GaussCode};
use bondle_core::rewrite::{apply_move, normalize, MoveSpec, RewriteError};
use num_bigint::BigUint;

/// A parsed Gauss code.
pub struct BondleCode(GaussCode);

/// A quandle with bond maps.
pub struct BondleAlgebra(Bondle);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BondleStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Malformed = 4,
    NotApplicable = 5,
    Algebra = 6,
    Coloring = 7,
    Overflow = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<Vec<u8>>) {
    let mut bytes = message.into();
    bytes.retain(|&b| b != 0);
    let text = CString::new(bytes).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

struct Failure(BondleStatus, String);

type Res<T> = Result<T, Failure>;

fn fail<T>(status: BondleStatus, message: impl Into<String>) -> Res<T> {
    Err(Failure(status, message.into()))
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Res<()>) -> BondleStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BondleStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BondleStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Res<&'a str> {
    if p.is_null() {
        return fail(BondleStatus::NullPointer, "null string");
    }
    match CStr::from_ptr(p).to_str() {
        Ok(s) => Ok(s),
        Err(e) => fail(BondleStatus::InvalidUtf8, e.to_string()),
    }
}

unsafe fn get<'a, T>(p: *const T) -> Res<&'a T> {
    p.as_ref().map_or_else(|| fail(BondleStatus::NullPointer, "null handle"), Ok)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Res<()> {
    if out.is_null() {
        return fail(BondleStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> Res<()> {
    if out.is_null() {
        return fail(BondleStatus::NullPointer, "null output pointer");
    }
    *out = value;
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn rewrite_failure(e: RewriteError) -> Failure {
    let status = match e {
        RewriteError::NotApplicable(_) => BondleStatus::NotApplicable,
        _ => BondleStatus::Malformed,
    };
    Failure(status, e.to_string())
}

/// Message for the last failing call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bondle_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn bondle_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a Gauss code. The code need not be well formed.
///
/// # Safety
/// `code_text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_parse(code_text: *const c_char, out: *mut *mut BondleCode) -> BondleStatus {
    guard(|| {
        let code = parse(text(code_text)?).or_else(|e| fail(BondleStatus::Parse, e.to_string()))?;
        put(out, BondleCode(code))
    })
}

/// # Safety
/// `code` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_free(code: *mut BondleCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Canonical text of the code, or null on a null handle.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_to_string(code: *const BondleCode) -> *mut c_char {
    match code.as_ref() {
        Some(c) => to_c_string(c.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Validation report as JSON, or null on a null handle.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_validate_json(code: *const BondleCode) -> *mut c_char {
    match code.as_ref() {
        Some(c) => to_c_string(c.0.validate().to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_is_well_formed(code: *const BondleCode, out: *mut bool) -> BondleStatus {
    guard(|| put_value(out, get(code)?.0.is_well_formed()))
}

/// Writes a new handle holding the normalized code.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_normalize(code: *const BondleCode, out: *mut *mut BondleCode) -> BondleStatus {
    guard(|| {
        let n = normalize(&get(code)?.0).map_err(rewrite_failure)?;
        put(out, BondleCode(n))
    })
}

/// Applies one move given as JSON, e.g. `{"move": "I_remove", "position": 1}`,
/// and writes a new handle with the result.
///
/// # Safety
/// `code` must be a live handle, `spec` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_code_apply_move(
    code: *const BondleCode,
    spec: *const c_char,
    out: *mut *mut BondleCode,
) -> BondleStatus {
    guard(|| {
        let c = get(code)?;
        let spec: MoveSpec =
            serde_json::from_str(text(spec)?).or_else(|e| fail(BondleStatus::Parse, e.to_string()))?;
        let moved = apply_move(&c.0, &spec).map_err(rewrite_failure)?;
        put(out, BondleCode(moved))
    })
}

/// Affine bondle on `Z_n` with `x ▷ y = a x + (1 - a) y`, `R1 = b x + (1 - b) y`
/// and `R3 = m x + (1 - m) y`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_algebra_affine(
    n: u64,
    a: u64,
    b: u64,
    m: u64,
    out: *mut *mut BondleAlgebra,
) -> BondleStatus {
    guard(|| {
        let bondle = AffineParams::new(n, a, b, Some(m))
            .and_then(Bondle::affine)
            .or_else(|e| fail(BondleStatus::Algebra, e.to_string()))?;
        put(out, BondleAlgebra(bondle))
    })
}

/// Reads a bondle from a JSON table with `order`, `op`, `R1`, `R2` and
/// optionally `inv_op` and `R3`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_algebra_from_json(json: *const c_char, out: *mut *mut BondleAlgebra) -> BondleStatus {
    guard(|| {
        let bondle = BondleTable::from_json(text(json)?)
            .and_then(|t| Bondle::from_table("table", &t))
            .or_else(|e| fail(BondleStatus::Algebra, e.to_string()))?;
        put(out, BondleAlgebra(bondle))
    })
}

/// # Safety
/// `algebra` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bondle_algebra_free(algebra: *mut BondleAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// Carrier size, or 0 on a null handle.
///
/// # Safety
/// `algebra` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bondle_algebra_order(algebra: *const BondleAlgebra) -> usize {
    algebra.as_ref().map_or(0, |a| a.0.order())
}

/// Checks the oriented bondle axioms exhaustively.
///
/// # Safety
/// `algebra` must be a live handle and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_algebra_check(algebra: *const BondleAlgebra, passed: *mut bool) -> BondleStatus {
    guard(|| {
        let a = get(algebra)?;
        put_value(passed, check_oriented_bondle(&a.0.quandle, &a.0.maps).passed)
    })
}

/// Counts colorings of a sheet-free, helix-free code. Fails with
/// `Overflow` if a count does not fit in 64 bits.
///
/// # Safety
/// Handles must be live; `total` and `trivial` writable.
#[no_mangle]
pub unsafe extern "C" fn bondle_count_colorings(
    code: *const BondleCode,
    algebra: *const BondleAlgebra,
    total: *mut u64,
    trivial: *mut u64,
) -> BondleStatus {
    guard(|| {
        let (c, a) = (get(code)?, get(algebra)?);
        if total.is_null() || trivial.is_null() {
            return fail(BondleStatus::NullPointer, "null output pointer");
        }
        let d = build_diagram(&c.0).or_else(|e| fail(BondleStatus::Malformed, e.to_string()))?;
        let count = count_best(&d, &a.0).or_else(|e| fail(BondleStatus::Coloring, e.to_string()))?;
        let narrow = |v: &BigUint| u64::try_from(v).ok();
        match (narrow(&count.total), narrow(&count.trivial)) {
            (Some(t), Some(r)) => {
                *total = t;
                *trivial = r;
                Ok(())
            }
            _ => fail(BondleStatus::Overflow, format!("count {} exceeds 64 bits", count.total)),
        }
    })
}
