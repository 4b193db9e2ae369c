//! C ABI for `baer-core`.
//!
//! Objects cross the boundary as opaque handles (`BaerGroup`, `BaerReport`)
//! that the caller releases with the matching `*_free` function. Every entry
//! point returns a `BaerStatus`; on failure a message is available from
//! `baer_last_error_message` on the same thread. Strings returned through
//! out-parameters are owned by the caller and released with
//! `baer_string_free`. Big integers travel as decimal strings.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use baer_core::cli::report_json;
use baer_core::oracle::sweep_schur;
use baer_core::{
    nilpotent_multiplier, parse_group, polynilpotent_multiplier, solvable_multiplier, BigCount, ClassRow, Error,
    FgAbelianGroup, MultiplierReport,
};

/// Status codes. The first four match the command-line exit statuses.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaerStatus {
    Ok = 0,
    VerifyFailed = 1,
    InvalidArgument = 2,
    ResourceLimit = 3,
    NullPointer = 4,
    Internal = 5,
    Panic = 6,
}

/// Opaque finitely generated abelian group.
pub struct BaerGroup(FgAbelianGroup);

/// Opaque multiplier report.
pub struct BaerReport(MultiplierReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> BaerStatus {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) => BaerStatus::InvalidArgument,
        Error::ResourceLimit { .. } => BaerStatus::ResourceLimit,
        Error::Internal(_) => BaerStatus::Internal,
    }
}

fn guard<F>(f: F) -> BaerStatus
where
    F: FnOnce() -> Result<BaerStatus, (BaerStatus, String)>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside baer");
            BaerStatus::Panic
        }
    }
}

fn fail(e: Error) -> (BaerStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (BaerStatus, String) {
    (BaerStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (BaerStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (BaerStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn read_row(row: *const u32, len: usize) -> Result<ClassRow, (BaerStatus, String)> {
    if row.is_null() {
        return Err(null("row"));
    }
    let entries = std::slice::from_raw_parts(row, len).to_vec();
    ClassRow::new(entries).map_err(fail)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<BaerStatus, (BaerStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(BaerStatus::Ok)
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// Parses a group expression such as `"Z^2 + Z/4 + Z/2"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_group_parse(text: *const c_char, out: *mut *mut BaerGroup) -> BaerStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let g = parse_group(text).map_err(|e| fail(Error::from(e)))?;
        write_out(out, Box::into_raw(Box::new(BaerGroup(g))))
    })
}

/// Builds `Z^free_rank + Z/factors[0] + ...`; the factors must form a
/// descending divisor chain of integers at least 2.
///
/// # Safety
/// `factors` must point to `len` readable values (may be null when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn baer_group_new(
    free_rank: u64,
    factors: *const u64,
    len: usize,
    out: *mut *mut BaerGroup,
) -> BaerStatus {
    guard(|| {
        let f: &[u64] = if len == 0 {
            &[]
        } else if factors.is_null() {
            return Err(null("factors"));
        } else {
            std::slice::from_raw_parts(factors, len)
        };
        let g = FgAbelianGroup::new(free_rank, f).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(BaerGroup(g))))
    })
}

/// # Safety
/// `group` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn baer_group_free(group: *mut BaerGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Canonical text form, e.g. `"Z^2 + Z/12 + Z/6"`.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_group_to_string(group: *const BaerGroup, out: *mut *mut c_char) -> BaerStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        write_out(out, c_string(g.0.to_string()))
    })
}

/// Free rank as a decimal string.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_group_free_rank(group: *const BaerGroup, out: *mut *mut c_char) -> BaerStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        write_out(out, c_string(g.0.free_rank().to_string()))
    })
}

/// Writes whether two groups are isomorphic.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_group_equal(a: *const BaerGroup, b: *const BaerGroup, out: *mut bool) -> BaerStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        write_out(out, a.0 == b.0)
    })
}

/// Witt count of weight `weight` on `letters` (decimal) letters.
///
/// # Safety
/// `letters` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_witt(weight: u32, letters: *const c_char, out: *mut *mut c_char) -> BaerStatus {
    guard(|| {
        let d: BigCount = read_str(letters, "letters")?.parse().map_err(fail)?;
        let v = baer_core::arith::witt(weight, d).map_err(fail)?;
        write_out(out, c_string(v.to_string()))
    })
}

/// Iterated Witt count for the class row `row[0..len]`, innermost first.
///
/// # Safety
/// `row` must point to `len` values; `letters` must be a NUL-terminated
/// string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_iterated_witt(
    row: *const u32,
    len: usize,
    letters: *const c_char,
    out: *mut *mut c_char,
) -> BaerStatus {
    guard(|| {
        let row = read_row(row, len)?;
        let d: BigCount = read_str(letters, "letters")?.parse().map_err(fail)?;
        let v = baer_core::arith::iterated_witt(&row, d).map_err(fail)?;
        write_out(out, c_string(v.to_string()))
    })
}

unsafe fn report_out(
    r: baer_core::Result<MultiplierReport>,
    out: *mut *mut BaerReport,
) -> Result<BaerStatus, (BaerStatus, String)> {
    let r = r.map_err(fail)?;
    write_out(out, Box::into_raw(Box::new(BaerReport(r))))
}

/// Polynilpotent multiplier for the class row `row[0..len]`.
///
/// # Safety
/// `group` must be live; `row` must point to `len` values; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn baer_polynilpotent_multiplier(
    group: *const BaerGroup,
    row: *const u32,
    len: usize,
    out: *mut *mut BaerReport,
) -> BaerStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        let row = read_row(row, len)?;
        report_out(polynilpotent_multiplier(&g.0, &row), out)
    })
}

/// `c`-nilpotent multiplier.
///
/// # Safety
/// `group` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn baer_nilpotent_multiplier(
    group: *const BaerGroup,
    c: u32,
    out: *mut *mut BaerReport,
) -> BaerStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        report_out(nilpotent_multiplier(&g.0, c), out)
    })
}

/// `l`-solvable multiplier.
///
/// # Safety
/// `group` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn baer_solvable_multiplier(
    group: *const BaerGroup,
    l: u32,
    out: *mut *mut BaerReport,
) -> BaerStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        report_out(solvable_multiplier(&g.0, l), out)
    })
}

/// # Safety
/// `report` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn baer_report_free(report: *mut BaerReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// The multiplier as a new group handle.
///
/// # Safety
/// `report` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn baer_report_result(report: *const BaerReport, out: *mut *mut BaerGroup) -> BaerStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        write_out(out, Box::into_raw(Box::new(BaerGroup(r.0.result.clone()))))
    })
}

/// Formula-shaped sum such as `"Z/4^(3) + Z/2^(12)"`.
///
/// # Safety
/// `report` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn baer_report_paper_shape(report: *const BaerReport, out: *mut *mut c_char) -> BaerStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        write_out(out, c_string(r.0.paper_shape_text()))
    })
}

/// JSON document with keys `free_rank`, `invariant_factors`, `f_values`,
/// `multiplicities`, `paper_shape`; all numbers as decimal strings.
///
/// # Safety
/// `report` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn baer_report_to_json(report: *const BaerReport, out: *mut *mut c_char) -> BaerStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let doc = report_json(&r.0).map_err(fail)?;
        write_out(out, c_string(doc.to_string()))
    })
}

/// Runs the Schur-multiplier sweep. Returns `VerifyFailed` if any check
/// fails; the counts are written either way.
///
/// # Safety
/// `checks` and `failures` must be writable.
#[no_mangle]
pub unsafe extern "C" fn baer_verify_schur(
    max_rank: u32,
    max_factor: u64,
    checks: *mut usize,
    failures: *mut usize,
) -> BaerStatus {
    guard(|| {
        if checks.is_null() || failures.is_null() {
            return Err(null("output pointer"));
        }
        let report = sweep_schur(max_rank, max_factor).map_err(fail)?;
        *checks = report.len();
        *failures = report.failures().count();
        if report.all_pass() {
            Ok(BaerStatus::Ok)
        } else {
            Err((BaerStatus::VerifyFailed, format!("{} checks failed", *failures)))
        }
    })
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn baer_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn baer_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
