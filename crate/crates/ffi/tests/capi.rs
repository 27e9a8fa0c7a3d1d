use std::ffi::{CStr, CString};
use std::ptr;

use griess_forge_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { gf_string_free(s) };
    out
}

#[test]
fn commutant_handles() {
    for (node, dim) in [("1A", 1), ("2A", 3), ("3A", 5)] {
        let name = CString::new(node).unwrap();
        let mut a = ptr::null_mut();
        assert_eq!(unsafe { gf_commutant_new(name.as_ptr(), &mut a) }, GfStatus::Ok);
        assert_eq!(unsafe { gf_algebra_dim(a) }, dim);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { gf_algebra_json(a, &mut s) }, GfStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json["basis"].as_array().unwrap().len(), dim);
        unsafe { gf_algebra_free(a) };
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("4A").unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { gf_commutant_new(bad.as_ptr(), &mut a) }, GfStatus::InvalidArgument);
    assert!(a.is_null());
    let msg = unsafe { CStr::from_ptr(gf_last_error()) }.to_str().unwrap();
    assert!(msg.contains("4A"));
    assert_eq!(unsafe { gf_commutant_new(ptr::null(), &mut a) }, GfStatus::NullPointer);
    assert_eq!(unsafe { gf_algebra_dim(ptr::null()) }, 0);
    unsafe { gf_string_free(ptr::null_mut()) };
    unsafe { gf_algebra_free(ptr::null_mut()) };
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gf_fusion(4, 9, 1, 1, 1, &mut s) }, GfStatus::InvalidArgument);
}

#[test]
fn fusion_text() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gf_fusion(4, 5, 1, 5, 1, &mut s) }, GfStatus::Ok);
    assert_eq!(take(s), "L(6/7,0)");
}

#[test]
fn u3a_table_and_report() {
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { gf_u3a_new(false, &mut a) }, GfStatus::Ok);
    assert_eq!(unsafe { gf_algebra_dim(a) }, 4);
    unsafe { gf_algebra_free(a) };
    let suite = CString::new("codes").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { gf_report_run(suite.as_ptr(), true, &mut r) }, GfStatus::Ok);
    assert!(unsafe { gf_report_passed(r) });
    assert!(unsafe { gf_report_check_count(r) } > 0);
    assert_eq!(unsafe { gf_report_failure_count(r) }, 0);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gf_report_json(r, &mut s) }, GfStatus::Ok);
    let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(json["schema"], gf_schema_version());
    unsafe { gf_report_free(r) };
}

#[test]
fn two_a_report_fails() {
    let suite = CString::new("involutions-2A").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { gf_report_run(suite.as_ptr(), true, &mut r) }, GfStatus::Ok);
    assert!(!unsafe { gf_report_passed(r) });
    unsafe { gf_report_free(r) };
}
