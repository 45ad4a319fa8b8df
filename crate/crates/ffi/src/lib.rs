//! C ABI over the `metabel` engine.
//!
//! Every function returns an [`MbStatus`]. Strings handed out by the library
//! are NUL-terminated UTF-8 and must be released with [`mb_string_free`];
//! oracle handles with [`mb_oracle_free`]. After a non-`MB_OK` status,
//! [`mb_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use metabel::checks::{run_suite, Suite};
use metabel::enumerate::Limits;
use metabel::mlieadm::{mla_dims, mla_nf_term};
use metabel::mnov::{nov_dims, nov_nf_term};
use metabel::oracle::{consequence_basis, ColumnRanking, ConsequenceBasis, IdentitySet};
use metabel::parse::{parse_poly, parse_term};
use metabel::term::Signature;
use metabel::Error;

/// Status codes shared with the command-line exit codes for 0 to 3.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MbStatus {
    MbOk = 0,
    MbCheckFailed = 1,
    MbParseError = 2,
    MbPrecondition = 3,
    MbNullArgument = 4,
    MbInternal = 5,
}

/// Consequence space of one identity set in one multilinear degree.
pub struct MbOracle {
    basis: ConsequenceBasis,
}

/// Verification suite selector for [`mb_verify`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MbSuite {
    MbSuiteIdentities = 0,
    MbSuiteBasis = 1,
    MbSuiteTable = 2,
    MbSuiteAll = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = message.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).unwrap_or_default());
}

struct Failure(MbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_parse_error() {
            MbStatus::MbParseError
        } else {
            MbStatus::MbPrecondition
        };
        Failure(status, e.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(MbStatus::MbNullArgument, format!("{name} is null"))
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<MbStatus, Failure>) -> MbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            if status == MbStatus::MbOk {
                set_error("");
            }
            status
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MbStatus::MbInternal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MbStatus::MbParseError, format!("{name} is not valid UTF-8")))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn builtin(name: &str) -> Result<IdentitySet, Failure> {
    IdentitySet::builtin(name).map_err(Failure::from)
}

/// Normal form of `term` in `variety` (`"mnov"` or `"mlieadm"`), written to
/// `*out` as a polynomial string.
///
/// # Safety
/// `variety` and `term` must be NUL-terminated strings; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mb_normal_form(variety: *const c_char, term: *const c_char, out: *mut *mut c_char) -> MbStatus {
    guard(|| {
        let variety = read_str(variety, "variety")?;
        let text = read_str(term, "term")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let nf = match variety {
            "mnov" => nov_nf_term(&parse_term(text, Signature::Star)?)?.to_polynomial(),
            "mlieadm" => mla_nf_term(&parse_term(text, Signature::Polarized)?)?,
            other => return Err(Error::UnknownVariety(other.to_string()).into()),
        };
        *out = into_c(nf.to_string());
        Ok(MbStatus::MbOk)
    })
}

/// Number of multilinear basis monomials of `degree` in `variety`.
///
/// # Safety
/// `variety` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mb_basis_dim(variety: *const c_char, degree: u32, out: *mut u64) -> MbStatus {
    guard(|| {
        let variety = read_str(variety, "variety")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let n = degree as usize;
        Limits::default().check_enumeration(n)?;
        if n == 0 {
            return Err(Error::Unsupported("degree must be at least 1".into()).into());
        }
        *out = match variety {
            "mnov" => nov_dims(n) as u64,
            "mlieadm" => mla_dims(n),
            other => return Err(Error::UnknownVariety(other.to_string()).into()),
        };
        Ok(MbStatus::MbOk)
    })
}

fn new_oracle(ids: &IdentitySet, degree: u32, out: *mut *mut MbOracle) -> Result<MbStatus, Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let basis = consequence_basis(ids, degree as usize, &ColumnRanking::Default, &Limits::default())?;
    unsafe { *out = Box::into_raw(Box::new(MbOracle { basis })) };
    Ok(MbStatus::MbOk)
}

/// Build the consequence space of a built-in variety (`novikov`, `mnov`,
/// `lieadm`, `mlieadm`, `mlieadm-polarized`, `lieadm-polarized`).
///
/// # Safety
/// `variety` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mb_oracle_new(variety: *const c_char, degree: u32, out: *mut *mut MbOracle) -> MbStatus {
    guard(|| {
        let ids = builtin(read_str(variety, "variety")?)?;
        new_oracle(&ids, degree, out)
    })
}

/// Build the consequence space of identities given in the identity-file
/// format (one identity per line over `a..h`, `#` comments).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mb_oracle_from_identities(text: *const c_char, degree: u32, out: *mut *mut MbOracle) -> MbStatus {
    guard(|| {
        let ids = IdentitySet::parse_file("custom", read_str(text, "text")?)?;
        new_oracle(&ids, degree, out)
    })
}

/// Dimension of the multilinear quotient.
///
/// # Safety
/// `oracle` must come from `mb_oracle_new` or `mb_oracle_from_identities`;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mb_oracle_dim(oracle: *const MbOracle, out: *mut u64) -> MbStatus {
    guard(|| {
        let oracle = oracle.as_ref().ok_or_else(|| null("oracle"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = oracle.basis.quotient_dim() as u64;
        Ok(MbStatus::MbOk)
    })
}

/// Canonical reduction of a multilinear polynomial of the oracle's degree.
/// `*is_consequence` is set when the reduction is zero.
///
/// # Safety
/// `oracle` must be a live handle, `poly` a NUL-terminated string, and `out`
/// and `is_consequence` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mb_oracle_reduce(
    oracle: *const MbOracle,
    poly: *const c_char,
    out: *mut *mut c_char,
    is_consequence: *mut bool,
) -> MbStatus {
    guard(|| {
        let oracle = oracle.as_ref().ok_or_else(|| null("oracle"))?;
        let text = read_str(poly, "poly")?;
        if out.is_null() || is_consequence.is_null() {
            return Err(null("out"));
        }
        let p = parse_poly(text, Some(oracle.basis.signature()))?;
        p.check_multilinear(oracle.basis.degree())?;
        let reduced = oracle.basis.reduce(&p)?;
        *is_consequence = reduced.is_zero();
        *out = into_c(reduced.to_string());
        Ok(MbStatus::MbOk)
    })
}

/// Run a verification suite; the JSON report goes to `*report`. Returns
/// `MB_CHECK_FAILED` when any check fails.
///
/// # Safety
/// `variety` must be a NUL-terminated string; `report` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn mb_verify(variety: *const c_char, degree: u32, suite: MbSuite, report: *mut *mut c_char) -> MbStatus {
    guard(|| {
        let variety = read_str(variety, "variety")?;
        if report.is_null() {
            return Err(null("report"));
        }
        let suite = match suite {
            MbSuite::MbSuiteIdentities => Suite::Identities,
            MbSuite::MbSuiteBasis => Suite::Basis,
            MbSuite::MbSuiteTable => Suite::Table,
            MbSuite::MbSuiteAll => Suite::All,
        };
        let r = run_suite(variety, suite, degree as usize, &Limits::default())?;
        let json = serde_json::to_string(&r).map_err(|e| Failure(MbStatus::MbInternal, e.to_string()))?;
        *report = into_c(json);
        Ok(if r.passed() {
            MbStatus::MbOk
        } else {
            set_error("one or more checks failed");
            MbStatus::MbCheckFailed
        })
    })
}

/// # Safety
/// `oracle` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mb_oracle_free(oracle: *mut MbOracle) {
    if !oracle.is_null() {
        drop(Box::from_raw(oracle));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread; empty after success. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn mb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
