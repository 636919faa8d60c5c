//! C ABI over the zmc library.
//!
//! Every fallible function returns a [`ZmcStatus`]; on failure the message is
//! kept per thread and read back with [`zmc_last_error_message`]. Handles
//! (`ZmcExpr`, `ZmcPatch`) are opaque and must be released with their `_free`
//! function. Strings passed in are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use zmc::catalog::{self, ImplicitSurface};
use zmc::paraholo::ParaExpr;
use zmc::weierstrass::SurfacePatch;
use zmc::{ParaComplex, Point3, ZmcError};

/// Result codes. `ZMC_STATUS_OK` is zero, everything else is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZmcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    NonInvertible = 3,
    NullCone = 4,
    DomainViolation = 5,
    PathDependent = 6,
    UnknownEntry = 7,
    Parse = 8,
    Config = 9,
    Io = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

impl From<&ZmcError> for ZmcStatus {
    fn from(e: &ZmcError) -> Self {
        match e.root_cause() {
            ZmcError::NonInvertible { .. } => ZmcStatus::NonInvertible,
            ZmcError::NullConeArgument { .. } => ZmcStatus::NullCone,
            ZmcError::DomainViolation(_) => ZmcStatus::DomainViolation,
            ZmcError::PathDependent { .. } => ZmcStatus::PathDependent,
            ZmcError::UnknownEntry(_) => ZmcStatus::UnknownEntry,
            ZmcError::Parse { .. } => ZmcStatus::Parse,
            ZmcError::Config(_) => ZmcStatus::Config,
            ZmcError::Io(_) => ZmcStatus::Io,
            ZmcError::AtNode { .. } => unreachable!("root_cause strips node tags"),
        }
    }
}

/// A para-complex number `re + j im`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZmcParaComplex {
    pub re: f64,
    pub im: f64,
}

/// A point of Minkowski 3-space in `(t, x, y)` coordinates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZmcPoint3 {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl From<ZmcParaComplex> for ParaComplex {
    fn from(z: ZmcParaComplex) -> Self {
        ParaComplex::new(z.re, z.im)
    }
}

impl From<ParaComplex> for ZmcParaComplex {
    fn from(z: ParaComplex) -> Self {
        ZmcParaComplex { re: z.re, im: z.im }
    }
}

impl From<ZmcPoint3> for Point3 {
    fn from(p: ZmcPoint3) -> Self {
        Point3::new(p.t, p.x, p.y)
    }
}

impl From<Point3> for ZmcPoint3 {
    fn from(p: Point3) -> Self {
        ZmcPoint3 { t: p.t, x: p.x, y: p.y }
    }
}

/// A parsed para-holomorphic expression.
pub struct ZmcExpr(ParaExpr);

/// A surface patch taken from the catalog, placement included.
pub struct ZmcPatch(SurfacePatch);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

struct Failure(ZmcStatus, String);

impl From<ZmcError> for Failure {
    fn from(e: ZmcError) -> Self {
        Failure(ZmcStatus::from(&e), e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs `f`, records any failure and turns panics into `ZmcStatus::Panic`.
fn guard(f: impl FnOnce() -> Outcome) -> ZmcStatus {
    let (status, msg) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => (ZmcStatus::Ok, String::new()),
        Ok(Err(Failure(s, m))) => (s, m),
        Err(payload) => {
            let m = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            (ZmcStatus::Panic, format!("panic: {m}"))
        }
    };
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn null(what: &str) -> Failure {
    Failure(ZmcStatus::NullPointer, format!("`{what}` is a null pointer"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(ZmcStatus::InvalidUtf8, format!("`{what}` is not UTF-8: {e}")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Copies `s` plus a NUL into `buf` when it fits. `needed` (if non-null) gets
/// the full size including the NUL either way.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Outcome {
    let size = s.len() + 1;
    if let Some(n) = needed.as_mut() {
        *n = size;
    }
    if buf.is_null() || len < size {
        return Err(Failure(
            ZmcStatus::BufferTooSmall,
            format!("buffer of {len} bytes cannot hold {size}"),
        ));
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn zmc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the calling thread's last error message into `buf`.
///
/// Returns the size needed including the terminating NUL (1 when there is no
/// error). Nothing is written if `buf` is null or `len` is too small.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn zmc_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > msg.len() {
            std::ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), msg.len());
            *buf.add(msg.len()) = 0;
        }
        msg.len() + 1
    })
}

/// `a / b`, failing on a null-cone divisor.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_pc_div(a: ZmcParaComplex, b: ZmcParaComplex, out: *mut ZmcParaComplex) -> ZmcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ParaComplex::from(a).checked_div(b.into())?.into();
        Ok(())
    })
}

/// The logarithm, defined off the null cone.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_pc_log(z: ZmcParaComplex, out: *mut ZmcParaComplex) -> ZmcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ParaComplex::from(z).log()?.into();
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn zmc_pc_exp(z: ZmcParaComplex) -> ZmcParaComplex {
    ParaComplex::from(z).exp().into()
}

#[no_mangle]
pub extern "C" fn zmc_pc_arctan(z: ZmcParaComplex) -> ZmcParaComplex {
    ParaComplex::from(z).arctan().into()
}

/// `re² − im²`.
#[no_mangle]
pub extern "C" fn zmc_pc_norm2(z: ZmcParaComplex) -> f64 {
    ParaComplex::from(z).norm2()
}

/// Parses an expression in the prefix text format, e.g. `"div(1, sub(pow(z, 2), 1))"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be null or valid for writes.
/// On success `*out` owns a handle to release with [`zmc_expr_free`].
#[no_mangle]
pub unsafe extern "C" fn zmc_expr_parse(text: *const c_char, out: *mut *mut ZmcExpr) -> ZmcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = std::ptr::null_mut();
        let e = ParaExpr::parse(str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(ZmcExpr(e)));
        Ok(())
    })
}

/// # Safety
/// `expr` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_expr_eval(expr: *const ZmcExpr, z: ZmcParaComplex, out: *mut ZmcParaComplex) -> ZmcStatus {
    guard(|| {
        let e = handle(expr, "expr")?;
        let out = out_arg(out, "out")?;
        *out = e.0.eval(z.into())?.into();
        Ok(())
    })
}

/// Symbolic derivative as a new handle.
///
/// # Safety
/// `expr` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_expr_deriv(expr: *const ZmcExpr, out: *mut *mut ZmcExpr) -> ZmcStatus {
    guard(|| {
        let e = handle(expr, "expr")?;
        let out = out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(ZmcExpr(e.0.deriv())));
        Ok(())
    })
}

/// Writes the canonical text of `expr` into `buf`.
///
/// On `ZMC_STATUS_BUFFER_TOO_SMALL`, `*needed` still receives the size to allocate.
///
/// # Safety
/// `expr` must be a live handle, `buf` null or `len` writable bytes, `needed` null or valid.
#[no_mangle]
pub unsafe extern "C" fn zmc_expr_to_string(
    expr: *const ZmcExpr,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> ZmcStatus {
    guard(|| write_str(&handle(expr, "expr")?.0.to_string(), buf, len, needed))
}

/// # Safety
/// `expr` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn zmc_expr_free(expr: *mut ZmcExpr) {
    if !expr.is_null() {
        drop(Box::from_raw(expr));
    }
}

/// Opens the parametrized patch of a catalog entry such as `"scherk_S1p"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_patch_from_catalog(name: *const c_char, out: *mut *mut ZmcPatch) -> ZmcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = std::ptr::null_mut();
        let name = str_arg(name, "name")?;
        let entry = catalog::get(name)?;
        let patch = entry.patch().ok_or_else(|| {
            Failure(ZmcStatus::Config, format!("catalog entry `{name}` has no Weierstrass patch"))
        })?;
        *out = Box::into_raw(Box::new(ZmcPatch(patch)));
        Ok(())
    })
}

/// The placed surface point at a parameter inside the patch region.
///
/// # Safety
/// `patch` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_patch_evaluate(patch: *const ZmcPatch, z: ZmcParaComplex, out: *mut ZmcPoint3) -> ZmcStatus {
    guard(|| {
        let p = handle(patch, "patch")?;
        let out = out_arg(out, "out")?;
        *out = p.0.placed_point(z.into())?.into();
        Ok(())
    })
}

/// Whether `z` lies in the patch region.
///
/// # Safety
/// `patch` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zmc_patch_contains(patch: *const ZmcPatch, z: ZmcParaComplex) -> bool {
    patch.as_ref().is_some_and(|p| p.0.region().contains(z.into()))
}

/// # Safety
/// `patch` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn zmc_patch_free(patch: *mut ZmcPatch) {
    if !patch.is_null() {
        drop(Box::from_raw(patch));
    }
}

/// Residual of an implicit surface (`"E4"`, `"scherk_S1p"`, ...) at `p`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_implicit_residual(name: *const c_char, p: ZmcPoint3, out: *mut f64) -> ZmcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let name = str_arg(name, "name")?;
        let s = ImplicitSurface::from_name(name).ok_or_else(|| ZmcError::UnknownEntry(name.into()))?;
        *out = s.residual(p.into());
        Ok(())
    })
}

/// The point over `(a, b)` of a catalog graph entry such as `"graph_S1p"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zmc_graph_eval(name: *const c_char, a: f64, b: f64, out: *mut ZmcPoint3) -> ZmcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let name = str_arg(name, "name")?;
        let g = catalog::get(name)?
            .graph
            .ok_or_else(|| Failure(ZmcStatus::Config, format!("catalog entry `{name}` is not a graph")))?;
        *out = catalog::graph_eval(&g, a, b).into();
        Ok(())
    })
}
