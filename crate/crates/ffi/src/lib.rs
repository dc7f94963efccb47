//! C interface to `theta-orbits`.
//!
//! Algebras are opaque handles. Every fallible call returns a
//! [`ThetaStatus`]; on failure the message is available from
//! [`theta_last_error`] on the same thread. Result strings are JSON in the
//! same format as the command-line tool and must be released with
//! [`theta_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use theta_orbits::chevalley::LieAlgebra;
use theta_orbits::cli::OrbitFile;
use theta_orbits::grading::{KacDiagram, ThetaGrading};
use theta_orbits::method1::SearchConfig;
use theta_orbits::nullcone::{self, Method};
use theta_orbits::rootsys::{RootSystem, SimpleType};
use theta_orbits::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidType = 3,
    InvalidKac = 4,
    RetryBudget = 5,
    Failed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaMethod {
    Auto = 0,
    One = 1,
    Two = 2,
}

impl From<ThetaMethod> for Method {
    fn from(m: ThetaMethod) -> Method {
        match m {
            ThetaMethod::Auto => Method::Auto,
            ThetaMethod::One => Method::One,
            ThetaMethod::Two => Method::Two,
        }
    }
}

/// A simple Lie algebra with its Chevalley basis.
pub struct ThetaAlgebra {
    alg: Arc<LieAlgebra>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ThetaStatus {
    match e {
        Error::InvalidType { .. } => ThetaStatus::InvalidType,
        Error::InvalidKac(_) => ThetaStatus::InvalidKac,
        Error::RetryBudget { .. } => ThetaStatus::RetryBudget,
        _ => ThetaStatus::Failed,
    }
}

/// Runs `f`, recording the error message and mapping panics.
fn guard(f: impl FnOnce() -> Result<(), (ThetaStatus, String)>) -> ThetaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ThetaStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            ThetaStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (ThetaStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (ThetaStatus, String)> {
    if p.is_null() {
        return Err((ThetaStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (ThetaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (ThetaStatus, String)> {
    let c = CString::new(s).map_err(|_| (ThetaStatus::Failed, "nul in output".to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn theta_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds the algebra of a type such as `"E8"`.
///
/// # Safety
/// `type_name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_algebra_new(type_name: *const c_char, out: *mut *mut ThetaAlgebra) -> ThetaStatus {
    guard(|| {
        if out.is_null() {
            return Err((ThetaStatus::NullPointer, "out is null".into()));
        }
        let t: SimpleType = read_str(type_name, "type_name")?
            .parse()
            .map_err(|e: Error| (ThetaStatus::InvalidType, e.to_string()))?;
        let alg = Arc::new(LieAlgebra::new(Arc::new(RootSystem::new(t))));
        *out = Box::into_raw(Box::new(ThetaAlgebra { alg }));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from [`theta_algebra_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn theta_algebra_free(alg: *mut ThetaAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra, 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn theta_algebra_dim(alg: *const ThetaAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.alg.dim())
}

/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn theta_algebra_rank(alg: *const ThetaAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.alg.root_system().rank())
}

unsafe fn algebra<'a>(alg: *const ThetaAlgebra) -> Result<&'a Arc<LieAlgebra>, (ThetaStatus, String)> {
    alg.as_ref()
        .map(|a| &a.alg)
        .ok_or((ThetaStatus::NullPointer, "alg is null".into()))
}

fn check_out(out: *mut *mut c_char) -> Result<(), (ThetaStatus, String)> {
    if out.is_null() {
        Err((ThetaStatus::NullPointer, "out is null".into()))
    } else {
        Ok(())
    }
}

/// Classifies the nilpotent orbits of the grading with Kac labels `kac`
/// (e.g. `"0,0,1"`) and writes the orbit file as JSON to `*out_json`.
///
/// # Safety
/// `alg` must be a live handle, `kac` a nul-terminated string and
/// `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_orbits_json(
    alg: *const ThetaAlgebra,
    kac: *const c_char,
    method: ThetaMethod,
    seed: u64,
    out_json: *mut *mut c_char,
) -> ThetaStatus {
    guard(|| {
        check_out(out_json)?;
        let alg = algebra(alg)?;
        let kd: KacDiagram = read_str(kac, "kac")?
            .parse()
            .map_err(|e: Error| (ThetaStatus::InvalidKac, e.to_string()))?;
        let gr = ThetaGrading::from_kac(Arc::clone(alg), &kd).map_err(|e| (ThetaStatus::InvalidKac, e.to_string()))?;
        let cfg = SearchConfig {
            seed,
            ..SearchConfig::default()
        };
        let recs = nullcone::classify(&gr, method.into(), &cfg).map_err(lib_err)?;
        write_string(out_json, OrbitFile::new(&gr, &recs, seed).to_json())
    })
}

/// Finds the N-regular inner automorphism of order `m` and writes its orbit
/// file as JSON to `*out_json`.
///
/// # Safety
/// `alg` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_nregular_json(
    alg: *const ThetaAlgebra,
    m: u32,
    method: ThetaMethod,
    seed: u64,
    out_json: *mut *mut c_char,
) -> ThetaStatus {
    guard(|| {
        check_out(out_json)?;
        let alg = algebra(alg)?;
        let cfg = SearchConfig {
            seed,
            ..SearchConfig::default()
        };
        let hit = nullcone::nregular_survey(alg, m, method.into(), &cfg).map_err(lib_err)?;
        let gr = ThetaGrading::from_kac(Arc::clone(alg), &hit.kac).map_err(lib_err)?;
        write_string(out_json, OrbitFile::new(&gr, &hit.records, seed).to_json())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn theta_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
