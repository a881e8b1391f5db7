//! C interface to `llt-core`.
//!
//! Every fallible function returns an [`LltStatus`] and writes its result
//! through an out pointer. On failure, [`llt_last_error`] describes the
//! problem for the calling thread. Handles from this library are released
//! with [`llt_symfunc_free`] and strings with [`llt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use llt_core::cli::{expand, BasisArg};
use llt_core::kschur::{hall_littlewood, kschur2};
use llt_core::llt::{l_poly, llt_schur, TwoDiagTuple};
use llt_core::partition::Partition;
use llt_core::symfunc::SchurVector;
use llt_core::theorems::{run_sweep, Sweep, SweepConfig};
use llt_core::Error;

/// A symmetric function with Laurent polynomial coefficients, stored in
/// the Schur basis.
pub struct LltSymFunc(SchurVector);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LltStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BoundExceeded = 3,
    NotInSpan = 4,
    VerificationFailed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LltBasis {
    Schur = 0,
    TwoSchur = 1,
    Fundamental = 2,
    Monomial = 3,
}

impl From<LltBasis> for BasisArg {
    fn from(b: LltBasis) -> Self {
        match b {
            LltBasis::Schur => BasisArg::Schur,
            LltBasis::TwoSchur => BasisArg::TwoSchur,
            LltBasis::Fundamental => BasisArg::Fundamental,
            LltBasis::Monomial => BasisArg::Monomial,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> LltStatus {
    match err {
        Error::BoundExceeded { .. } => LltStatus::BoundExceeded,
        Error::NotInSpan(_) => LltStatus::NotInSpan,
        _ => LltStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (LltStatus, String)>) -> LltStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LltStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LltStatus::Panic
        }
    }
}

fn core<T>(r: llt_core::Result<T>) -> Result<T, (LltStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (LltStatus, String) {
    (LltStatus::NullPointer, format!("{what} is null"))
}

unsafe fn partition_arg(parts: *const usize, len: usize) -> Result<Partition, (LltStatus, String)> {
    let v = if len == 0 {
        Vec::new()
    } else if parts.is_null() {
        return Err(null("parts"));
    } else {
        std::slice::from_raw_parts(parts, len).to_vec()
    };
    core(Partition::new(v))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, (LltStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (LltStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn emit(out: *mut *mut LltSymFunc, f: SchurVector) -> Result<(), (LltStatus, String)> {
    *out = Box::into_raw(Box::new(LltSymFunc(f)));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), (LltStatus, String)> {
    let c = CString::new(s).map_err(|_| (LltStatus::Panic, "interior nul".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// The message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn llt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// `L(n, λ)` for `λ` inside the staircase `δ_{n−1}`.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null when `len` is 0)
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn llt_unicellular(
    n: usize,
    parts: *const usize,
    len: usize,
    out: *mut *mut LltSymFunc,
) -> LltStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = partition_arg(parts, len)?;
        emit(out, core(l_poly(n, &lam))?)
    })
}

/// The LLT polynomial of a tuple written over `H`, `V`, `0`, `1`.
///
/// # Safety
/// `tuple` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn llt_tuple(tuple: *const c_char, out: *mut *mut LltSymFunc) -> LltStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let t: TwoDiagTuple = core(str_arg(tuple, "tuple")?.parse())?;
        emit(out, core(llt_schur(&t.to_shape()))?)
    })
}

/// The 2-Schur function of a 2-bounded partition.
///
/// # Safety
/// As for [`llt_unicellular`].
#[no_mangle]
pub unsafe extern "C" fn llt_kschur(parts: *const usize, len: usize, out: *mut *mut LltSymFunc) -> LltStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = partition_arg(parts, len)?;
        emit(out, core(kschur2(&lam))?)
    })
}

/// The Hall–Littlewood function `H_λ`.
///
/// # Safety
/// As for [`llt_unicellular`].
#[no_mangle]
pub unsafe extern "C" fn llt_hall_littlewood(parts: *const usize, len: usize, out: *mut *mut LltSymFunc) -> LltStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = partition_arg(parts, len)?;
        emit(out, hall_littlewood(&lam))
    })
}

/// Degree of `f`, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn llt_symfunc_degree(f: *const LltSymFunc) -> usize {
    f.as_ref().map_or(0, |f| f.0.degree())
}

/// Writes whether `a` and `b` are equal.
///
/// # Safety
/// `a` and `b` must be live handles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn llt_symfunc_equal(a: *const LltSymFunc, b: *const LltSymFunc, out: *mut bool) -> LltStatus {
    guard(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return Err(null("handle"));
        };
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a.0 == b.0;
        Ok(())
    })
}

/// `f` rendered in `basis`. Release the string with [`llt_string_free`].
///
/// # Safety
/// `f` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn llt_symfunc_to_string(
    f: *const LltSymFunc,
    basis: LltBasis,
    out: *mut *mut c_char,
) -> LltStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("handle"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let e = core(expand(&f.0, basis.into(), None))?;
        emit_string(out, e.to_string())
    })
}

/// `f` in `basis` as JSON. Release the string with [`llt_string_free`].
///
/// # Safety
/// As for [`llt_symfunc_to_string`].
#[no_mangle]
pub unsafe extern "C" fn llt_symfunc_to_json(
    f: *const LltSymFunc,
    basis: LltBasis,
    out: *mut *mut c_char,
) -> LltStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("handle"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let e = core(expand(&f.0, basis.into(), None))?;
        emit_string(out, serde_json::to_string(&e).expect("serializable"))
    })
}

/// Runs a named verification sweep. `max_n` of 0 selects the default
/// bound. The JSON report is written to `report` when it is non-null;
/// failing cases give [`LltStatus::VerificationFailed`].
///
/// # Safety
/// `name` must be a nul-terminated string and `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn llt_verify(
    name: *const c_char,
    max_n: usize,
    seed: u64,
    samples: usize,
    report: *mut *mut c_char,
) -> LltStatus {
    let mut failed = false;
    let status = guard(|| {
        let t: Sweep = core(str_arg(name, "name")?.parse())?;
        let config = SweepConfig { max_n: (max_n > 0).then_some(max_n), seed, samples };
        let r = core(run_sweep(t, &config))?;
        failed = !r.passed();
        if !report.is_null() {
            emit_string(report, serde_json::to_string(&r).expect("serializable"))?;
        }
        Ok(())
    });
    if status == LltStatus::Ok && failed {
        set_error("verification found failing cases");
        return LltStatus::VerificationFailed;
    }
    status
}

/// # Safety
/// `f` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn llt_symfunc_free(f: *mut LltSymFunc) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn llt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
