//! C interface: opaque algebra and report handles, integer status codes,
//! and heap strings released with `gf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use griess_forge::algebra::commutant::{self, Node};
use griess_forge::algebra::{u3a, FDAlgebra};
use griess_forge::minimal_models::ModuleLabel;
use griess_forge::report::{self, Bundle, InvolutionTarget, SCHEMA};

/// Status returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ComputationFailed = 4,
    Panic = 5,
}

/// Opaque finite-dimensional algebra.
pub struct GfAlgebra(FDAlgebra);

/// Opaque bundle of check reports.
pub struct GfReport(Bundle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: GfStatus, msg: impl Into<String>) -> GfStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> GfStatus + std::panic::UnwindSafe) -> GfStatus {
    std::panic::catch_unwind(f).unwrap_or_else(|_| fail(GfStatus::Panic, "panic inside griess-forge"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, GfStatus> {
    if p.is_null() {
        return Err(fail(GfStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(GfStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn give_string(s: String, out: *mut *mut c_char) -> GfStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            GfStatus::Ok
        }
        Err(_) => fail(GfStatus::ComputationFailed, "string contains NUL"),
    }
}

/// Message of the last failed call on this thread, or NULL. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Report schema version.
#[no_mangle]
pub extern "C" fn gf_schema_version() -> u32 {
    SCHEMA
}

/// Commutant algebra at node `"1A"`, `"2A"` or `"3A"`.
///
/// # Safety
/// `node` is a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gf_commutant_new(node: *const c_char, out: *mut *mut GfAlgebra) -> GfStatus {
    if out.is_null() {
        return fail(GfStatus::NullPointer, "null output pointer");
    }
    let node = match read_str(node) {
        Ok(s) => s.to_owned(),
        Err(e) => return e,
    };
    guard(move || {
        let n: Node = match node.parse() {
            Ok(n) => n,
            Err(e) => return fail(GfStatus::InvalidArgument, e.to_string()),
        };
        match commutant::build_commutant_griess(n) {
            Ok(c) => {
                unsafe { *out = Box::into_raw(Box::new(GfAlgebra(c.algebra))) };
                GfStatus::Ok
            }
            Err(e) => fail(GfStatus::ComputationFailed, e.to_string()),
        }
    })
}

/// The 3A-algebra from its table (`from_orbit = false`) or as the closure
/// of an Ising orbit in sqrt2 E8.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gf_u3a_new(from_orbit: bool, out: *mut *mut GfAlgebra) -> GfStatus {
    if out.is_null() {
        return fail(GfStatus::NullPointer, "null output pointer");
    }
    guard(move || {
        let alg = if from_orbit {
            match u3a::from_orbit() {
                Ok(o) => o.algebra,
                Err(e) => return fail(GfStatus::ComputationFailed, e.to_string()),
            }
        } else {
            u3a::table()
        };
        unsafe { *out = Box::into_raw(Box::new(GfAlgebra(alg))) };
        GfStatus::Ok
    })
}

/// # Safety
/// `a` is NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn gf_algebra_free(a: *mut GfAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension, or 0 for NULL.
///
/// # Safety
/// `a` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_algebra_dim(a: *const GfAlgebra) -> usize {
    a.as_ref().map_or(0, |a| a.0.dim())
}

/// Structure constants and Gram matrix as JSON.
///
/// # Safety
/// `a` is a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gf_algebra_json(a: *const GfAlgebra, out: *mut *mut c_char) -> GfStatus {
    let (Some(a), false) = (a.as_ref(), out.is_null()) else {
        return fail(GfStatus::NullPointer, "null argument");
    };
    match serde_json::to_string(&a.0.to_json()) {
        Ok(s) => give_string(s, out),
        Err(e) => fail(GfStatus::ComputationFailed, e.to_string()),
    }
}

/// Fusion product `L(r1,s1) x L(r2,s2)` at level `m`, rendered as text.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gf_fusion(m: u32, r1: u32, s1: u32, r2: u32, s2: u32, out: *mut *mut c_char) -> GfStatus {
    if out.is_null() {
        return fail(GfStatus::NullPointer, "null output pointer");
    }
    let labels = ModuleLabel::new(m, r1, s1).and_then(|a| ModuleLabel::new(m, r2, s2).map(|b| (a, b)));
    match labels {
        Ok((a, b)) => match report::fusion_text(a, b) {
            Ok(t) => give_string(t, out),
            Err(e) => fail(GfStatus::ComputationFailed, e.to_string()),
        },
        Err(e) => fail(GfStatus::InvalidArgument, e.to_string()),
    }
}

/// Runs a suite: `central-charges`, `ising-e8`, `commutant-1A|2A|3A`,
/// `u3a`, `involutions-1A|2A|3A|e8-orbit`, `minimal-models`, `codes`,
/// `leech`, `appendix`, `properties`, or `all`.
///
/// # Safety
/// `suite` is a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gf_report_run(suite: *const c_char, skip_slow: bool, out: *mut *mut GfReport) -> GfStatus {
    if out.is_null() {
        return fail(GfStatus::NullPointer, "null output pointer");
    }
    let name = match read_str(suite) {
        Ok(s) => s.to_owned(),
        Err(e) => return e,
    };
    guard(move || {
        let one = |r| Bundle { schema: SCHEMA, reports: vec![r] };
        let bundle = match name.as_str() {
            "all" => report::report_all(skip_slow),
            "central-charges" => one(report::central_charges()),
            "ising-e8" => one(report::ising_e8()),
            "u3a" => one(report::u3a_suite(true)),
            "minimal-models" => one(report::minimal_models_suite()),
            "codes" => one(report::codes_suite()),
            "leech" => one(report::leech_suite(!skip_slow)),
            "appendix" => one(report::appendix_suite()),
            "properties" => one(report::properties_suite(!skip_slow)),
            other => {
                if let Some(n) = other.strip_prefix("commutant-") {
                    match n.parse::<Node>() {
                        Ok(n) => one(report::commutant(n)),
                        Err(e) => return fail(GfStatus::InvalidArgument, e.to_string()),
                    }
                } else if let Some(t) = other.strip_prefix("involutions-") {
                    match t.parse::<InvolutionTarget>() {
                        Ok(t) => one(report::involutions_suite(t)),
                        Err(e) => return fail(GfStatus::InvalidArgument, e.to_string()),
                    }
                } else {
                    return fail(GfStatus::InvalidArgument, format!("unknown suite {other}"));
                }
            }
        };
        unsafe { *out = Box::into_raw(Box::new(GfReport(bundle))) };
        GfStatus::Ok
    })
}

/// # Safety
/// `r` is NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn gf_report_free(r: *mut GfReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Whether no check failed; false for NULL.
///
/// # Safety
/// `r` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_report_passed(r: *const GfReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.passed())
}

/// Number of checks over all suites.
///
/// # Safety
/// `r` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_report_check_count(r: *const GfReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.reports.iter().map(|x| x.checks.len()).sum())
}

/// Number of failed checks.
///
/// # Safety
/// `r` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_report_failure_count(r: *const GfReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.reports.iter().map(|x| x.failures().len()).sum())
}

/// The report as JSON.
///
/// # Safety
/// `r` is a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gf_report_json(r: *const GfReport, out: *mut *mut c_char) -> GfStatus {
    let (Some(r), false) = (r.as_ref(), out.is_null()) else {
        return fail(GfStatus::NullPointer, "null argument");
    };
    match serde_json::to_string_pretty(&r.0) {
        Ok(s) => give_string(s, out),
        Err(e) => fail(GfStatus::ComputationFailed, e.to_string()),
    }
}
