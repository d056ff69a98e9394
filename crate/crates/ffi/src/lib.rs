//! C ABI for the rootdeform library.
//!
//! Handles are opaque pointers owned by the caller and released with the
//! matching `_free` function. Functions report an `RdStatus`; on failure the
//! message is available from `rd_last_error_message` until the next call on
//! the same thread. Strings returned as `*mut c_char` are released with
//! `rd_string_free`.

use rootdeform::{
    build_theta, check_invariance, factorize, reduced_root_space, render_orbit_table, scan_report,
    verify_constraints, DeformMatrix, FactorizedElement, RootSystem, SuperscriptStyle,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RdStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    AnsatzInapplicable = 3,
    InternalError = 4,
}

/// Opaque root-system handle.
pub struct RdSystem(RootSystem);
/// Opaque factorized-element handle.
pub struct RdElement(FactorizedElement);
/// Opaque deformation-matrix handle.
pub struct RdTheta(DeformMatrix);

/// Constraint verdict bits for `rd_verify`.
pub const RD_CONSTRAINT_INTERTWINE_MINUS: u32 = 1 << 0;
pub const RD_CONSTRAINT_INTERTWINE_PLUS: u32 = 1 << 1;
pub const RD_CONSTRAINT_COMMUTES: u32 = 1 << 2;
pub const RD_CONSTRAINT_ANTIUNITARY: u32 = 1 << 3;
pub const RD_CONSTRAINT_DET: u32 = 1 << 4;
pub const RD_CONSTRAINT_LIMIT: u32 = 1 << 5;
pub const RD_CONSTRAINT_ALL: u32 = 0x3f;

/// Message for the most recent failure on this thread.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Build a catalog root system (A{n}, D{n}, E6, E7, E8, B2, G2).
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rd_system_new(name: *const c_char, out: *mut *mut RdSystem) -> RdStatus {
    if name.is_null() || out.is_null() {
        return RdStatus::NullArgument;
    }
    let name = match CStr::from_ptr(name).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("system name is not valid UTF-8");
            return RdStatus::InvalidInput;
        }
    };
    match RootSystem::catalog(name) {
        Ok(rs) => {
            *out = Box::into_raw(Box::new(RdSystem(rs)));
            RdStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            *out = ptr::null_mut();
            RdStatus::InvalidInput
        }
    }
}

/// # Safety
/// `sys` must come from `rd_system_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rd_system_free(sys: *mut RdSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Rank, or 0 on a null handle.
///
/// # Safety
/// `sys` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rd_system_rank(sys: *const RdSystem) -> u32 {
    sys.as_ref().map_or(0, |s| s.0.rank as u32)
}

/// Coxeter number, or 0 on a null handle.
///
/// # Safety
/// `sys` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rd_system_coxeter_number(sys: *const RdSystem) -> u32 {
    sys.as_ref().map_or(0, |s| s.0.coxeter_number as u32)
}

/// Factorize an element from 1-based vertex subsets of the two colors.
///
/// # Safety
/// Pointer/length pairs must describe valid arrays; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rd_factorize(
    sys: *const RdSystem,
    minus: *const u32,
    minus_len: usize,
    plus: *const u32,
    plus_len: usize,
    out: *mut *mut RdElement,
) -> RdStatus {
    let sys = match sys.as_ref() {
        Some(s) => s,
        None => return RdStatus::NullArgument,
    };
    if out.is_null() || (minus.is_null() && minus_len > 0) || (plus.is_null() && plus_len > 0) {
        return RdStatus::NullArgument;
    }
    let to_vec = |ptr: *const u32, len: usize| -> Vec<usize> {
        if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(ptr, len)
                .iter()
                .map(|&x| x as usize)
                .collect()
        }
    };
    let vm = to_vec(minus, minus_len);
    let vp = to_vec(plus, plus_len);
    match factorize(&sys.0, &vm, &vp) {
        Ok(fe) => {
            *out = Box::into_raw(Box::new(RdElement(fe)));
            RdStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            *out = ptr::null_mut();
            RdStatus::InvalidInput
        }
    }
}

/// # Safety
/// `el` must come from `rd_factorize` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rd_element_free(el: *mut RdElement) {
    if !el.is_null() {
        drop(Box::from_raw(el));
    }
}

/// Order of the element, or 0 on a null handle.
///
/// # Safety
/// `el` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rd_element_order(el: *const RdElement) -> u32 {
    el.as_ref().map_or(0, |e| e.0.order as u32)
}

/// Build the deformation matrix; fails unless 4 divides the element order.
///
/// # Safety
/// `el` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rd_build_theta(el: *const RdElement, out: *mut *mut RdTheta) -> RdStatus {
    let el = match el.as_ref() {
        Some(e) => e,
        None => return RdStatus::NullArgument,
    };
    if out.is_null() {
        return RdStatus::NullArgument;
    }
    match build_theta(&el.0) {
        Ok(theta) => {
            *out = Box::into_raw(Box::new(RdTheta(theta)));
            RdStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            *out = ptr::null_mut();
            RdStatus::AnsatzInapplicable
        }
    }
}

/// # Safety
/// `theta` must come from `rd_build_theta` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rd_theta_free(theta: *mut RdTheta) {
    if !theta.is_null() {
        drop(Box::from_raw(theta));
    }
}

/// 1 when every kappa-component vanishes, else 0.
///
/// # Safety
/// `theta` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rd_theta_is_trivial(theta: *const RdTheta) -> i32 {
    theta.as_ref().map_or(0, |t| t.0.is_trivial() as i32)
}

/// Verify the five constraints; `out_flags` receives one bit per verdict
/// (see the RD_CONSTRAINT_* constants). All bits set means all pass.
///
/// # Safety
/// Handles must be live; `out_flags` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rd_verify(
    theta: *const RdTheta,
    el: *const RdElement,
    out_flags: *mut u32,
) -> RdStatus {
    let (theta, el) = match (theta.as_ref(), el.as_ref()) {
        (Some(t), Some(e)) => (t, e),
        _ => return RdStatus::NullArgument,
    };
    if out_flags.is_null() {
        return RdStatus::NullArgument;
    }
    let rep = verify_constraints(&theta.0, &el.0);
    let mut flags = 0u32;
    if rep.intertwine_minus {
        flags |= RD_CONSTRAINT_INTERTWINE_MINUS;
    }
    if rep.intertwine_plus {
        flags |= RD_CONSTRAINT_INTERTWINE_PLUS;
    }
    if rep.commutes_with_sigma {
        flags |= RD_CONSTRAINT_COMMUTES;
    }
    if rep.antiunitary {
        flags |= RD_CONSTRAINT_ANTIUNITARY;
    }
    if rep.det_ok {
        flags |= RD_CONSTRAINT_DET;
    }
    if rep.limit_ok {
        flags |= RD_CONSTRAINT_LIMIT;
    }
    *out_flags = flags;
    RdStatus::Ok
}

/// Evaluate theta numerically at real epsilon into a row-major buffer of
/// interleaved (re, im) pairs; `len` must be at least 2 * rank * rank.
///
/// # Safety
/// `theta` must be live; `out` must point to at least `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn rd_theta_eval(
    theta: *const RdTheta,
    epsilon: f64,
    out: *mut f64,
    len: usize,
) -> RdStatus {
    let theta = match theta.as_ref() {
        Some(t) => t,
        None => return RdStatus::NullArgument,
    };
    if out.is_null() {
        return RdStatus::NullArgument;
    }
    let n = theta.0.size();
    if len < 2 * n * n {
        set_error("output buffer too small");
        return RdStatus::InvalidInput;
    }
    let buf = std::slice::from_raw_parts_mut(out, 2 * n * n);
    for (i, row) in theta.0.eval_pairs(epsilon).iter().enumerate() {
        for (j, &[re, im]) in row.iter().enumerate() {
            buf[2 * (i * n + j)] = re;
            buf[2 * (i * n + j) + 1] = im;
        }
    }
    RdStatus::Ok
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap().into_raw()
}

/// The symbolic theta matrix as JSON rows of ring scalars.
///
/// # Safety
/// `theta` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rd_theta_json(theta: *const RdTheta) -> *mut c_char {
    match theta.as_ref() {
        Some(t) => match serde_json::to_string(&t.0.to_json_rows()) {
            Ok(s) => string_out(s),
            Err(e) => {
                set_error(&e.to_string());
                ptr::null_mut()
            }
        },
        None => ptr::null_mut(),
    }
}

/// Render the reduced orbit table in plain compact notation.
///
/// # Safety
/// Handles must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rd_orbit_table(
    sys: *const RdSystem,
    el: *const RdElement,
) -> *mut c_char {
    let (sys, el) = match (sys.as_ref(), el.as_ref()) {
        (Some(s), Some(e)) => (s, e),
        _ => return ptr::null_mut(),
    };
    let space = reduced_root_space(&sys.0, &el.0, false);
    match render_orbit_table(&space, SuperscriptStyle::Plain) {
        Ok(s) => string_out(s),
        Err(e) => {
            set_error(&e.to_string());
            ptr::null_mut()
        }
    }
}

/// Distinct-root count of the reduced root space, or 0 on null handles.
///
/// # Safety
/// Handles must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rd_reduced_root_count(
    sys: *const RdSystem,
    el: *const RdElement,
) -> u32 {
    match (sys.as_ref(), el.as_ref()) {
        (Some(s), Some(e)) => reduced_root_space(&s.0, &e.0, false).root_set.len() as u32,
        _ => 0,
    }
}

/// Invariance of the reduced space under each factor; outputs are 0/1.
///
/// # Safety
/// Handles must be live; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rd_invariance(
    sys: *const RdSystem,
    el: *const RdElement,
    out_minus: *mut i32,
    out_plus: *mut i32,
) -> RdStatus {
    let (sys, el) = match (sys.as_ref(), el.as_ref()) {
        (Some(s), Some(e)) => (s, e),
        _ => return RdStatus::NullArgument,
    };
    if out_minus.is_null() || out_plus.is_null() {
        return RdStatus::NullArgument;
    }
    let space = reduced_root_space(&sys.0, &el.0, false);
    let rep = check_invariance(&sys.0, &el.0, &space);
    *out_minus = rep.invariant_minus as i32;
    *out_plus = rep.invariant_plus as i32;
    RdStatus::Ok
}

/// Scan every bicolored candidate; returns a JSON-lines report.
///
/// # Safety
/// `sys` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rd_scan_json(sys: *const RdSystem, force: i32) -> *mut c_char {
    let sys = match sys.as_ref() {
        Some(s) => s,
        None => return ptr::null_mut(),
    };
    match scan_report(&sys.0, force != 0) {
        Ok(s) => string_out(s),
        Err(e) => {
            set_error(&e.to_string());
            ptr::null_mut()
        }
    }
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
