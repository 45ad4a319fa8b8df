use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use metabel_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mb_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(mb_last_error_message()).to_str().unwrap().to_owned() }
}

fn normal_form(variety: &str, term: &str) -> (MbStatus, Option<String>) {
    let mut out = ptr::null_mut();
    let status = unsafe { mb_normal_form(c(variety).as_ptr(), c(term).as_ptr(), &mut out) };
    let text = (status == MbStatus::MbOk).then(|| unsafe { take(out) });
    (status, text)
}

fn oracle(variety: &str, degree: u32) -> *mut MbOracle {
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { mb_oracle_new(c(variety).as_ptr(), degree, &mut o) }, MbStatus::MbOk);
    o
}

fn reduce(o: *const MbOracle, poly: &str) -> (MbStatus, String, bool) {
    let mut out = ptr::null_mut();
    let mut zero = false;
    let status = unsafe { mb_oracle_reduce(o, c(poly).as_ptr(), &mut out, &mut zero) };
    let text = if status == MbStatus::MbOk { unsafe { take(out) } } else { String::new() };
    (status, text, zero)
}

#[test]
fn normal_forms() {
    assert_eq!(normal_form("mnov", "(x1*(x2*x3))"), (MbStatus::MbOk, Some("(x2*(x1*x3))".into())));
    assert_eq!(normal_form("mnov", "((x1*x2)*(x3*x4))"), (MbStatus::MbOk, Some("0".into())));
    assert_eq!(normal_form("mlieadm", "[[x1,x2],x3]"), (MbStatus::MbOk, Some("-[x3,[x1,x2]]".into())));
    assert_eq!(normal_form("mlieadm", "{[x1,x2],[x3,x4]}"), (MbStatus::MbOk, Some("0".into())));
}

#[test]
fn error_codes_and_messages() {
    assert_eq!(normal_form("mnov", "(x1*x2").0, MbStatus::MbParseError);
    assert!(!last_error().is_empty());
    assert_eq!(normal_form("mnov", "{x1,x2}").0, MbStatus::MbParseError);
    assert_eq!(normal_form("nothing", "(x1*x2)").0, MbStatus::MbPrecondition);
    assert_eq!(normal_form("mnov", "(x1*x2)").0, MbStatus::MbOk);
    assert_eq!(last_error(), "");

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mb_normal_form(ptr::null(), c("x1").as_ptr(), &mut out) }, MbStatus::MbNullArgument);
    assert_eq!(unsafe { mb_normal_form(c("mnov").as_ptr(), c("x1").as_ptr(), ptr::null_mut()) }, MbStatus::MbNullArgument);
    let mut dim = 0u64;
    assert_eq!(unsafe { mb_oracle_dim(ptr::null(), &mut dim) }, MbStatus::MbNullArgument);
    assert_eq!(unsafe { mb_basis_dim(c("mnov").as_ptr(), 40, &mut dim) }, MbStatus::MbPrecondition);
    assert_eq!(unsafe { mb_basis_dim(c("mnov").as_ptr(), 0, &mut dim) }, MbStatus::MbPrecondition);

    let mut o = ptr::null_mut();
    assert_eq!(unsafe { mb_oracle_new(c("mnov").as_ptr(), 9, &mut o) }, MbStatus::MbPrecondition);
    assert!(o.is_null());
}

#[test]
fn basis_dimensions() {
    let dims = |variety: &str| -> Vec<u64> {
        (1..=6)
            .map(|n| {
                let mut d = 0;
                assert_eq!(unsafe { mb_basis_dim(c(variety).as_ptr(), n, &mut d) }, MbStatus::MbOk);
                d
            })
            .collect()
    };
    assert_eq!(dims("mnov"), [1, 2, 6, 5, 5, 6]);
    assert_eq!(dims("mlieadm"), [1, 2, 11, 77, 679, 7184]);
}

#[test]
fn oracle_handles() {
    for (variety, n, expected) in [("mnov", 4, 5), ("mlieadm", 3, 11), ("lieadm", 3, 11), ("novikov", 3, 6)] {
        let o = oracle(variety, n);
        let mut d = 0;
        assert_eq!(unsafe { mb_oracle_dim(o, &mut d) }, MbStatus::MbOk);
        assert_eq!(d, expected, "{variety} degree {n}");
        unsafe { mb_oracle_free(o) };
    }

    let o = oracle("mnov", 4);
    assert_eq!(reduce(o, "((x1*x2)*(x3*x4))"), (MbStatus::MbOk, "0".into(), true));
    let (status, _, zero) = reduce(o, "(x1*(x2*(x3*x4)))");
    assert_eq!((status, zero), (MbStatus::MbOk, false));
    assert_eq!(reduce(o, "(x1*x2)").0, MbStatus::MbPrecondition);
    assert_eq!(reduce(o, "(x1*(x2*(x3*x4))").0, MbStatus::MbParseError);
    unsafe { mb_oracle_free(o) };
    unsafe { mb_oracle_free(ptr::null_mut()) };
    unsafe { mb_string_free(ptr::null_mut()) };
}

#[test]
fn custom_identities() {
    let mut o = ptr::null_mut();
    let text = c("# left commutativity\n(a*(b*c)) - (b*(a*c))\n");
    assert_eq!(unsafe { mb_oracle_from_identities(text.as_ptr(), 3, &mut o) }, MbStatus::MbOk);
    assert_eq!(reduce(o, "(x1*(x2*x3)) - (x2*(x1*x3))"), (MbStatus::MbOk, "0".into(), true));
    unsafe { mb_oracle_free(o) };

    let bad = c("(a*(b*c)\n");
    assert_eq!(unsafe { mb_oracle_from_identities(bad.as_ptr(), 3, &mut o) }, MbStatus::MbParseError);
}

#[test]
fn verification_reports() {
    let mut report = ptr::null_mut();
    let status = unsafe { mb_verify(c("mnov").as_ptr(), 4, MbSuite::MbSuiteTable, &mut report) };
    assert_eq!(status, MbStatus::MbOk);
    let v: serde_json::Value = serde_json::from_str(&unsafe { take(report) }).unwrap();
    assert_eq!(v["suite"], "table");
    assert!(v["checks"].as_array().is_some_and(|c| !c.is_empty()));

    let status = unsafe { mb_verify(c("mlieadm").as_ptr(), 3, MbSuite::MbSuiteAll, &mut report) };
    let v: serde_json::Value = serde_json::from_str(&unsafe { take(report) }).unwrap();
    let any_failed = v["checks"].as_array().unwrap().iter().any(|c| c["pass"] == false);
    assert_eq!(status == MbStatus::MbCheckFailed, any_failed);
}

#[test]
fn header_is_current_and_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/metabel.h")).unwrap();
    for symbol in [
        "mb_normal_form",
        "mb_basis_dim",
        "mb_oracle_new",
        "mb_oracle_from_identities",
        "mb_oracle_dim",
        "mb_oracle_reduce",
        "mb_verify",
        "mb_oracle_free",
        "mb_string_free",
        "mb_last_error_message",
        "typedef struct mb_oracle mb_oracle",
        "MB_CHECK_FAILED = 1",
    ] {
        assert!(header.contains(symbol), "{symbol} missing from header");
    }

    let Ok(cc) = which("cc") else { return };
    for (lang, std) in [("c", "-std=c99"), ("c++", "-std=c++11")] {
        let status = Command::new(&cc)
            .args(["-x", lang, std, "-fsyntax-only", "-Wall", "-Werror"])
            .arg(dir.join("include/metabel.h"))
            .status()
            .unwrap();
        assert!(status.success(), "header does not compile as {lang}");
    }
}

fn which(name: &str) -> Result<std::path::PathBuf, ()> {
    std::env::var_os("PATH")
        .into_iter()
        .flat_map(|p| std::env::split_paths(&p).collect::<Vec<_>>())
        .map(|d| d.join(name))
        .find(|p| p.is_file())
        .ok_or(())
}
