//! C ABI over the `rotundus` library.
//!
//! Conventions:
//! - every fallible function returns a [`RotundusStatus`] and writes its
//!   result through an out pointer;
//! - big integers cross the boundary as decimal strings;
//! - strings returned by the library are released with
//!   [`rotundus_string_free`], handles with their own `_free` function;
//! - after a failure, [`rotundus_last_error`] describes it (per thread).

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use rotundus::continuant::{continuant, continuant_symbolic, ContinuantMethod};
use rotundus::rotundus::{rotundus, rotundus_symbolic, RotundusMethod, SYMBOLIC_PFAFFIAN_MAX_N};
use rotundus::triangulation::{enumerate_centrally_symmetric, enumerate_triangulations, solve_rotundus, Dedup};
use rotundus::verify::{verify_suite, SuiteConfig};
use rotundus::{MultiPoly, Triangulation};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotundusStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    TooLarge = 3,
    OutOfRange = 4,
    Internal = 5,
}

pub const ROTUNDUS_CONTINUANT_DETERMINANT: u32 = 0;
pub const ROTUNDUS_CONTINUANT_EULER: u32 = 1;
pub const ROTUNDUS_CONTINUANT_RECURRENCE: u32 = 2;

pub const ROTUNDUS_METHOD_DEFINITION: u32 = 0;
pub const ROTUNDUS_METHOD_CYCLIC_EULER: u32 = 1;
pub const ROTUNDUS_METHOD_TRACE: u32 = 2;
pub const ROTUNDUS_METHOD_PFAFFIAN: u32 = 3;

pub const ROTUNDUS_DEDUP_NONE: u32 = 0;
pub const ROTUNDUS_DEDUP_ROTATION: u32 = 1;
pub const ROTUNDUS_DEDUP_ROTATION_REFLECTION: u32 = 2;

const MAX_MATCHING_N: usize = 30;
const MAX_NUMERIC_PF_N: usize = 10;
const MAX_SYMBOLIC_N: usize = 16;
const MAX_SYMBOLIC_DET_N: usize = 12;
const MAX_POLYGON: usize = 14;
const MAX_SEARCH_SPACE: u128 = 100_000_000;
const MAX_SUITE_N: usize = 8;

/// Opaque multivariate polynomial with integer coefficients.
pub struct RotundusPoly {
    inner: MultiPoly,
}

/// Opaque list of polygon triangulations.
pub struct RotundusTriangulations {
    inner: Vec<Triangulation>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RotundusStatus, String);

type Outcome = Result<(), Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(RotundusStatus::InvalidArgument, msg.into())
}

fn too_large(msg: impl Into<String>) -> Failure {
    Failure(RotundusStatus::TooLarge, msg.into())
}

fn from_lib(e: rotundus::Error) -> Failure {
    let status = match e {
        rotundus::Error::TooLarge { .. } => RotundusStatus::TooLarge,
        _ => RotundusStatus::InvalidArgument,
    };
    Failure(status, e.to_string())
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Run `f`, record any failure, and convert panics into `Internal`.
fn guard(f: impl FnOnce() -> Outcome) -> RotundusStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RotundusStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error (panic)".into());
            RotundusStatus::Internal
        }
    }
}

fn check_out<T>(out: *mut T) -> Outcome {
    if out.is_null() {
        Err(Failure(RotundusStatus::NullPointer, "output pointer is NULL".into()))
    } else {
        Ok(())
    }
}

/// # Safety
/// `values` must point to `len` readable `i64` values unless `len == 0`.
unsafe fn read_values(values: *const i64, len: usize) -> Result<Vec<BigInt>, Failure> {
    if len == 0 {
        return Err(invalid("the sequence must not be empty"));
    }
    if values.is_null() {
        return Err(Failure(RotundusStatus::NullPointer, "values pointer is NULL".into()));
    }
    let slice = std::slice::from_raw_parts(values, len);
    Ok(slice.iter().map(|&v| BigInt::from(v)).collect())
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(RotundusStatus::Internal, "string contains NUL".into()))
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome {
    *out = to_c_string(s)?;
    Ok(())
}

fn continuant_method(m: u32) -> Result<ContinuantMethod, Failure> {
    match m {
        ROTUNDUS_CONTINUANT_DETERMINANT => Ok(ContinuantMethod::Determinant),
        ROTUNDUS_CONTINUANT_EULER => Ok(ContinuantMethod::Euler),
        ROTUNDUS_CONTINUANT_RECURRENCE => Ok(ContinuantMethod::Recurrence),
        other => Err(invalid(format!("unknown continuant method {other}"))),
    }
}

fn rotundus_method(m: u32) -> Result<RotundusMethod, Failure> {
    match m {
        ROTUNDUS_METHOD_DEFINITION => Ok(RotundusMethod::Definition),
        ROTUNDUS_METHOD_CYCLIC_EULER => Ok(RotundusMethod::CyclicEuler),
        ROTUNDUS_METHOD_TRACE => Ok(RotundusMethod::Trace),
        ROTUNDUS_METHOD_PFAFFIAN => Ok(RotundusMethod::PfaffianSquare),
        other => Err(invalid(format!("unknown rotundus method {other}"))),
    }
}

fn dedup_mode(m: u32) -> Result<Dedup, Failure> {
    match m {
        ROTUNDUS_DEDUP_NONE => Ok(Dedup::None),
        ROTUNDUS_DEDUP_ROTATION => Ok(Dedup::Rotation),
        ROTUNDUS_DEDUP_ROTATION_REFLECTION => Ok(Dedup::RotationReflection),
        other => Err(invalid(format!("unknown dedup mode {other}"))),
    }
}

fn bound(value: usize, max: usize, what: &str) -> Outcome {
    if value > max {
        Err(too_large(format!("{what} {value} exceeds {max}")))
    } else {
        Ok(())
    }
}

/// Message describing the last failure on this thread, or NULL.
/// Release with [`rotundus_string_free`].
#[no_mangle]
pub extern "C" fn rotundus_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rotundus_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `K_n(values)` as a decimal string.
///
/// # Safety
/// `values` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_continuant(
    values: *const i64,
    len: usize,
    method: u32,
    out: *mut *mut c_char,
) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let method = continuant_method(method)?;
        let a = read_values(values, len)?;
        if method == ContinuantMethod::Euler {
            bound(len, MAX_MATCHING_N, "sequence length")?;
        }
        write_string(out, continuant(&a, method).to_string())
    })
}

/// `R_n(values)` as a decimal string.
///
/// # Safety
/// `values` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_rotundus(
    values: *const i64,
    len: usize,
    method: u32,
    out: *mut *mut c_char,
) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let method = rotundus_method(method)?;
        let a = read_values(values, len)?;
        match method {
            RotundusMethod::CyclicEuler => bound(len, MAX_MATCHING_N, "sequence length")?,
            RotundusMethod::PfaffianSquare => bound(len, MAX_NUMERIC_PF_N, "sequence length")?,
            _ => {}
        }
        write_string(out, rotundus(&a, method).map_err(from_lib)?.to_string())
    })
}

/// Symbolic `K_n` in the variables `a1..an`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_continuant(n: usize, method: u32, out: *mut *mut RotundusPoly) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let method = continuant_method(method)?;
        let max = if method == ContinuantMethod::Determinant {
            MAX_SYMBOLIC_DET_N
        } else {
            MAX_SYMBOLIC_N
        };
        bound(n, max, "symbolic size")?;
        *out = Box::into_raw(Box::new(RotundusPoly {
            inner: continuant_symbolic(n, method),
        }));
        Ok(())
    })
}

/// Symbolic `R_n` in the variables `a1..an`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_rotundus(n: usize, method: u32, out: *mut *mut RotundusPoly) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let method = rotundus_method(method)?;
        let max = if method == RotundusMethod::PfaffianSquare {
            SYMBOLIC_PFAFFIAN_MAX_N
        } else {
            MAX_SYMBOLIC_N
        };
        bound(n, max, "symbolic size")?;
        let inner = rotundus_symbolic(n, method).map_err(from_lib)?;
        *out = Box::into_raw(Box::new(RotundusPoly { inner }));
        Ok(())
    })
}

/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_arity(poly: *const RotundusPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.arity())
}

/// Number of distinct monomials.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_term_count(poly: *const RotundusPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.term_count())
}

/// Text form, e.g. `a1*a2 - 2`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_to_string(poly: *const RotundusPoly, out: *mut *mut c_char) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let p = poly.as_ref().ok_or_else(|| Failure(RotundusStatus::NullPointer, "poly is NULL".into()))?;
        write_string(out, p.inner.to_string())
    })
}

/// JSON form `{"arity":n,"terms":[{"c":"..","e":[..]}]}`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_to_json(poly: *const RotundusPoly, out: *mut *mut c_char) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let p = poly.as_ref().ok_or_else(|| Failure(RotundusStatus::NullPointer, "poly is NULL".into()))?;
        write_string(out, p.inner.to_json().to_string())
    })
}

/// Value at an integer point of length `arity`, as a decimal string.
///
/// # Safety
/// `poly` must be a live handle, `point` must hold `len` integers and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_eval(
    poly: *const RotundusPoly,
    point: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let p = poly.as_ref().ok_or_else(|| Failure(RotundusStatus::NullPointer, "poly is NULL".into()))?;
        let values = if len == 0 {
            Vec::new()
        } else {
            read_values(point, len)?
        };
        write_string(out, p.inner.eval(&values).map_err(from_lib)?.to_string())
    })
}

/// # Safety
/// `poly` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rotundus_poly_free(poly: *mut RotundusPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// All triangulations of the convex `n`-gon, or only the centrally
/// symmetric ones.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_triangulations(
    n: usize,
    centrally_symmetric: bool,
    out: *mut *mut RotundusTriangulations,
) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        bound(n, MAX_POLYGON, "polygon size")?;
        let inner = if centrally_symmetric {
            if n % 2 == 1 {
                return Err(invalid(format!("centrally symmetric triangulations need an even n, got {n}")));
            }
            enumerate_centrally_symmetric(n)
        } else {
            enumerate_triangulations(n)
        }
        .map_err(from_lib)?;
        *out = Box::into_raw(Box::new(RotundusTriangulations { inner }));
        Ok(())
    })
}

/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rotundus_triangulations_len(list: *const RotundusTriangulations) -> usize {
    list.as_ref().map_or(0, |l| l.inner.len())
}

/// Copy the quiddity of triangulation `index` into `buf` (capacity
/// `capacity`); `written` receives its length `n`.
///
/// # Safety
/// `list` must be a live handle, `buf` must have room for `capacity`
/// values and `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_triangulations_quiddity(
    list: *const RotundusTriangulations,
    index: usize,
    buf: *mut i64,
    capacity: usize,
    written: *mut usize,
) -> RotundusStatus {
    guard(|| {
        check_out(written)?;
        check_out(buf)?;
        let l = list.as_ref().ok_or_else(|| Failure(RotundusStatus::NullPointer, "list is NULL".into()))?;
        let t = l.inner.get(index).ok_or_else(|| {
            Failure(RotundusStatus::OutOfRange, format!("index {index} out of range for {} triangulations", l.inner.len()))
        })?;
        let q = t.quiddity();
        if q.len() > capacity {
            return Err(Failure(RotundusStatus::OutOfRange, format!("buffer holds {capacity}, need {}", q.len())));
        }
        for (k, v) in q.values().iter().enumerate() {
            // quiddity entries are at most n - 2
            *buf.add(k) = i64::try_from(v).expect("small entry");
        }
        *written = q.len();
        Ok(())
    })
}

/// JSON array of `{"n":..,"diagonals":[[i,j],..],"quiddity":[..]}`.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_triangulations_to_json(
    list: *const RotundusTriangulations,
    out: *mut *mut c_char,
) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let l = list.as_ref().ok_or_else(|| Failure(RotundusStatus::NullPointer, "list is NULL".into()))?;
        let items: Vec<_> = l.inner.iter().map(Triangulation::to_json).collect();
        write_string(out, serde_json::Value::Array(items).to_string())
    })
}

/// # Safety
/// `list` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rotundus_triangulations_free(list: *mut RotundusTriangulations) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Positive solutions of `R_n = 0` with entries up to `max_entry`, as a
/// JSON array of integer arrays.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_solve(
    n: usize,
    max_entry: u64,
    tp_only: bool,
    dedup: u32,
    out: *mut *mut c_char,
) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        let dedup = dedup_mode(dedup)?;
        if n == 0 || max_entry == 0 {
            return Err(invalid("n and max_entry must be >= 1"));
        }
        let space = (max_entry as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if space > MAX_SEARCH_SPACE {
            return Err(too_large(format!("search space {max_entry}^{n} exceeds {MAX_SEARCH_SPACE}")));
        }
        let found = solve_rotundus(n, max_entry, tp_only, dedup).map_err(from_lib)?;
        write_string(out, serde_json::to_string(&found).expect("sequences serialize"))
    })
}

/// Run the seeded identity suite. `passed` receives the overall verdict
/// and `out` the JSON report.
///
/// # Safety
/// `passed` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rotundus_verify(n_max: usize, seed: u64, passed: *mut bool, out: *mut *mut c_char) -> RotundusStatus {
    guard(|| {
        check_out(out)?;
        check_out(passed)?;
        bound(n_max, MAX_SUITE_N, "n_max")?;
        let report = verify_suite(&SuiteConfig::new(n_max, seed)).map_err(from_lib)?;
        *passed = report.passed();
        write_string(out, serde_json::to_string(&report).expect("report serializes"))
    })
}
