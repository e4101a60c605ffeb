use std::ffi::{CStr, CString};
use std::ptr;

use bondle_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse_code(s: &str) -> *mut BondleCode {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { bondle_code_parse(cstr(s).as_ptr(), &mut out) }, BondleStatus::Ok);
    out
}

fn to_string(code: *const BondleCode) -> String {
    unsafe {
        let p = bondle_code_to_string(code);
        let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
        bondle_string_free(p);
        s
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bondle_last_error()).to_string_lossy().into_owned() }
}

fn affine(n: u64, a: u64, b: u64, m: u64) -> *mut BondleAlgebra {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { bondle_algebra_affine(n, a, b, m, &mut out) }, BondleStatus::Ok);
    out
}

fn count(code: *const BondleCode, algebra: *const BondleAlgebra) -> (BondleStatus, u64, u64) {
    let (mut t, mut r) = (0, 0);
    let s = unsafe { bondle_count_colorings(code, algebra, &mut t, &mut r) };
    (s, t, r)
}

#[test]
fn parse_round_trip_and_validate() {
    let c = parse_code("N  S1+_0 S1-_1  C");
    assert_eq!(to_string(c), "N S1+_0 S1-_1 C");
    let mut ok = false;
    assert_eq!(unsafe { bondle_code_is_well_formed(c, &mut ok) }, BondleStatus::Ok);
    assert!(ok);
    unsafe { bondle_code_free(c) };

    let c = parse_code("N B1+ C");
    let report = unsafe {
        let p = bondle_code_validate_json(c);
        let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
        bondle_string_free(p);
        s
    };
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["well_formed"], false);
    assert_eq!(v["errors"][0]["code"], "bond-occurrences");
    unsafe { bondle_code_free(c) };
}

#[test]
fn error_statuses() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { bondle_code_parse(cstr("N X9 C").as_ptr(), &mut out) }, BondleStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("X9"), "{}", last_error());
    assert_eq!(unsafe { bondle_code_parse(ptr::null(), &mut out) }, BondleStatus::NullPointer);
    let bytes = [b'N', 0xff, 0];
    assert_eq!(unsafe { bondle_code_parse(bytes.as_ptr().cast(), &mut out) }, BondleStatus::InvalidUtf8);

    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { bondle_algebra_affine(15, 3, 2, 6, &mut alg) }, BondleStatus::Algebra);
    assert_eq!(unsafe { bondle_algebra_from_json(cstr("{}").as_ptr(), &mut alg) }, BondleStatus::Algebra);

    let sheet = parse_code("N S1+_0 S1-_1 C");
    let ex1 = affine(15, 8, 2, 6);
    assert_eq!(count(sheet, ex1).0, BondleStatus::Coloring);
    let broken = parse_code("N B1+ C");
    assert_eq!(count(broken, ex1).0, BondleStatus::Malformed);
    assert_eq!(count(ptr::null(), ex1).0, BondleStatus::NullPointer);
    assert_eq!(unsafe { bondle_algebra_order(ptr::null()) }, 0);
    unsafe {
        bondle_code_free(sheet);
        bondle_code_free(broken);
        bondle_algebra_free(ex1);
        bondle_code_free(ptr::null_mut());
        bondle_string_free(ptr::null_mut());
    }
}

#[test]
fn worked_example_counts() {
    let ex1 = affine(15, 8, 2, 6);
    let ex2 = affine(15, 7, 8, 6);
    let cases = [
        (bondle_core::fixtures::EXAMPLE1_P1, ex1, 45),
        (bondle_core::fixtures::EXAMPLE1_P2, ex1, 15),
        (bondle_core::fixtures::EXAMPLE2_P1, ex2, 75),
        (bondle_core::fixtures::EXAMPLE2_P2, ex2, 15),
    ];
    for (text, alg, want) in cases {
        let c = parse_code(text);
        assert_eq!(count(c, alg), (BondleStatus::Ok, want, 15), "{text}");
        unsafe { bondle_code_free(c) };
    }
    let mut passed = false;
    assert_eq!(unsafe { bondle_algebra_check(ex2, &mut passed) }, BondleStatus::Ok);
    assert!(passed);
    unsafe {
        bondle_algebra_free(ex1);
        bondle_algebra_free(ex2);
    }
}

#[test]
fn moves_and_normalize() {
    let c = parse_code("N O1+ U1+ B2+ B2- C");
    let mut out = ptr::null_mut();
    let spec = cstr(r#"{"move": "I_remove", "position": 1}"#);
    assert_eq!(unsafe { bondle_code_apply_move(c, spec.as_ptr(), &mut out) }, BondleStatus::Ok);
    assert_eq!(to_string(out), "N B1+ B1- C");
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { bondle_code_apply_move(out, spec.as_ptr(), &mut again) }, BondleStatus::NotApplicable);
    assert_eq!(unsafe { bondle_code_apply_move(c, cstr("{").as_ptr(), &mut again) }, BondleStatus::Parse);

    let mut n = ptr::null_mut();
    assert_eq!(unsafe { bondle_code_normalize(c, &mut n) }, BondleStatus::Ok);
    assert_eq!(to_string(n), "N B1+ B1- C");
    unsafe {
        bondle_code_free(c);
        bondle_code_free(out);
        bondle_code_free(n);
    }
}

#[test]
fn table_json_constructor() {
    let table = bondle_core::algebra::Bondle::affine(bondle_core::algebra::AffineParams::new(6, 5, 2, Some(3)).unwrap())
        .unwrap()
        .to_table()
        .to_json();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { bondle_algebra_from_json(cstr(&table).as_ptr(), &mut alg) }, BondleStatus::Ok);
    assert_eq!(unsafe { bondle_algebra_order(alg) }, 6);
    unsafe { bondle_algebra_free(alg) };
}
