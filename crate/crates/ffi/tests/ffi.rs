use std::ffi::{c_char, CStr, CString};
use std::ptr;

use zmc_ffi::*;

fn pc(re: f64, im: f64) -> ZmcParaComplex {
    ZmcParaComplex { re, im }
}

fn last_error() -> String {
    unsafe {
        let n = zmc_last_error_message(ptr::null_mut(), 0);
        let mut buf = vec![0u8; n];
        assert_eq!(zmc_last_error_message(buf.as_mut_ptr().cast(), n), n);
        CStr::from_bytes_with_nul(&buf).unwrap().to_str().unwrap().to_owned()
    }
}

fn parse(text: &str) -> *mut ZmcExpr {
    let c = CString::new(text).unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { zmc_expr_parse(c.as_ptr(), &mut e) }, ZmcStatus::Ok, "{}", last_error());
    e
}

fn text_of(e: *const ZmcExpr) -> String {
    unsafe {
        let mut needed = 0usize;
        assert_eq!(zmc_expr_to_string(e, ptr::null_mut(), 0, &mut needed), ZmcStatus::BufferTooSmall);
        let mut buf = vec![0u8; needed];
        assert_eq!(zmc_expr_to_string(e, buf.as_mut_ptr().cast(), needed, ptr::null_mut()), ZmcStatus::Ok);
        CStr::from_bytes_with_nul(&buf).unwrap().to_str().unwrap().to_owned()
    }
}

#[test]
fn expressions_parse_evaluate_and_differentiate() {
    let e = parse("add(pow(z, 3), exp(z))");
    let mut w = pc(0.0, 0.0);
    let z = pc(0.5, 0.25);
    unsafe {
        assert_eq!(zmc_expr_eval(e, z, &mut w), ZmcStatus::Ok);
        let want = zmc::ParaComplex::new(0.5, 0.25);
        let want = want * want * want + want.exp();
        assert!((w.re - want.re).abs() < 1e-15 && (w.im - want.im).abs() < 1e-15);

        let mut d = ptr::null_mut();
        assert_eq!(zmc_expr_deriv(e, &mut d), ZmcStatus::Ok);
        let round = parse(&text_of(d));
        let (mut a, mut b) = (pc(0.0, 0.0), pc(0.0, 0.0));
        assert_eq!(zmc_expr_eval(d, z, &mut a), ZmcStatus::Ok);
        assert_eq!(zmc_expr_eval(round, z, &mut b), ZmcStatus::Ok);
        assert_eq!(a, b);
        zmc_expr_free(round);
        zmc_expr_free(d);
        zmc_expr_free(e);
        zmc_expr_free(ptr::null_mut());
    }
}

#[test]
fn errors_map_to_status_codes_with_messages() {
    unsafe {
        let bad = CString::new("sin(").unwrap();
        let mut e = ptr::null_mut();
        assert_eq!(zmc_expr_parse(bad.as_ptr(), &mut e), ZmcStatus::Parse);
        assert!(e.is_null());
        assert!(last_error().starts_with("parse error"));

        let mut w = pc(0.0, 0.0);
        assert_eq!(zmc_pc_log(pc(2.0, -2.0), &mut w), ZmcStatus::NullCone);
        assert_eq!(zmc_pc_div(pc(1.0, 0.0), pc(3.0, 3.0), &mut w), ZmcStatus::NonInvertible);
        assert_eq!(zmc_pc_div(pc(1.0, 0.0), pc(2.0, 1.0), &mut w), ZmcStatus::Ok);
        assert_eq!(last_error(), "");
        assert!((w.re - 2.0 / 3.0).abs() < 1e-15 && (w.im + 1.0 / 3.0).abs() < 1e-15);

        // evaluation errors are tagged with their sub-expression but keep the root status
        let mut e = parse("log(sub(z, 1))");
        assert_eq!(zmc_expr_eval(e, pc(2.0, 1.0), &mut w), ZmcStatus::NullCone);
        zmc_expr_free(e);

        assert_eq!(zmc_expr_eval(ptr::null(), pc(0.0, 0.0), &mut w), ZmcStatus::NullPointer);
        assert_eq!(zmc_pc_log(pc(1.0, 0.0), ptr::null_mut()), ZmcStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(zmc_expr_parse(invalid.as_ptr().cast::<c_char>(), &mut e), ZmcStatus::InvalidUtf8);
    }
}

#[test]
fn catalog_patches_land_on_their_surfaces() {
    let cases = [("enneper_E4", "E4", pc(0.7, -0.3)), ("scherk_S1p", "S1p", pc(0.3, 1.0))];
    for (entry, surface, z) in cases {
        let name = CString::new(entry).unwrap();
        let sname = CString::new(surface).unwrap();
        unsafe {
            let mut p = ptr::null_mut();
            assert_eq!(zmc_patch_from_catalog(name.as_ptr(), &mut p), ZmcStatus::Ok, "{}", last_error());
            assert!(zmc_patch_contains(p, z));
            let mut q = ZmcPoint3 { t: 0.0, x: 0.0, y: 0.0 };
            assert_eq!(zmc_patch_evaluate(p, z, &mut q), ZmcStatus::Ok, "{entry}: {}", last_error());
            let mut r = f64::NAN;
            assert_eq!(zmc_implicit_residual(sname.as_ptr(), q, &mut r), ZmcStatus::Ok);
            assert!(r.abs() < 1e-10, "{entry}: {r:e}");
            zmc_patch_free(p);
        }
    }
}

#[test]
fn lookups_report_unknown_and_unsuitable_entries() {
    unsafe {
        let mut p = ptr::null_mut();
        let nosuch = CString::new("nosuch").unwrap();
        assert_eq!(zmc_patch_from_catalog(nosuch.as_ptr(), &mut p), ZmcStatus::UnknownEntry);
        assert!(p.is_null() && last_error().contains("nosuch"));
        let graph = CString::new("graph_S1p").unwrap();
        assert_eq!(zmc_patch_from_catalog(graph.as_ptr(), &mut p), ZmcStatus::Config);
        let mut r = 0.0;
        assert_eq!(zmc_implicit_residual(nosuch.as_ptr(), ZmcPoint3 { t: 0.0, x: 0.0, y: 0.0 }, &mut r), ZmcStatus::UnknownEntry);

        let mut q = ZmcPoint3 { t: 0.0, x: 0.0, y: 0.0 };
        assert_eq!(zmc_graph_eval(graph.as_ptr(), 0.4, 1.2, &mut q), ZmcStatus::Ok);
        assert!((q.t.sinh() - q.y.exp() * q.x.cos()).abs() < 1e-12);
        let patch_only = CString::new("enneper_E4").unwrap();
        assert_eq!(zmc_graph_eval(patch_only.as_ptr(), 0.0, 0.0, &mut q), ZmcStatus::Config);

        let mut s1 = ptr::null_mut();
        let scherk = CString::new("scherk_S1p").unwrap();
        assert_eq!(zmc_patch_from_catalog(scherk.as_ptr(), &mut s1), ZmcStatus::Ok);
        assert!(!zmc_patch_contains(s1, pc(5.0, 0.0)));
        assert_eq!(zmc_patch_evaluate(s1, pc(5.0, 0.0), &mut q), ZmcStatus::DomainViolation);
        zmc_patch_free(s1);
    }
}

#[test]
fn errors_are_kept_per_thread() {
    unsafe {
        let mut w = pc(0.0, 0.0);
        assert_eq!(zmc_pc_log(pc(1.0, 1.0), &mut w), ZmcStatus::NullCone);
    }
    let other = std::thread::spawn(last_error).join().unwrap();
    assert_eq!(other, "");
    assert!(last_error().contains("null cone"));
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(zmc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn generated_header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/zmc.h")).unwrap();
    for decl in [
        "typedef struct ZmcExpr ZmcExpr;",
        "typedef struct ZmcPatch ZmcPatch;",
        "ZMC_STATUS_OK = 0",
        "ZMC_STATUS_PANIC = 12",
        "zmc_expr_parse(const char *text, struct ZmcExpr **out)",
        "zmc_patch_evaluate(",
        "size_t zmc_last_error_message(char *buf, size_t len);",
    ] {
        assert!(header.contains(decl), "header lacks `{decl}`");
    }
}
