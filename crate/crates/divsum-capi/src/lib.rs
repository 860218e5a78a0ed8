//! C ABI for the divsum library.
//!
//! The surface follows the usual conventions: opaque handles created and
//! freed by paired functions, status codes instead of panics, results
//! delivered through out-pointers, and strings allocated by the library and
//! released with [`ds_string_free`]. `include/divsum.h` carries the matching
//! declarations (regenerate with `--features generate-header`).
//!
//! Rational parameters cross the boundary as numerator/denominator pairs of
//! signed 64-bit integers, which covers every parameterization the library
//! itself exposes.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use divsum::cf::{sum_by_cf, tail_closure_paired, tail_closure_single, TailClosure};
use divsum::difference::iterated_transform;
use divsum::quadrature::{borel_oracle, trapezoid_unit_interval, IntegrandSpec};
use divsum::rational::{to_f64, Rational};
use divsum::report::{cmd_repro, OutputFormat};
use divsum::repro::Section;
use divsum::series::{generate_terms, FactorialFamily};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments violate a documented precondition.
    InvalidArgument = 2,
    /// Arguments are structurally fine but outside the numeric domain.
    Domain = 3,
    /// The computation could not proceed (division breakdown, closure
    /// pattern not found, ...).
    Failed = 4,
    /// Interior panic; a bug in the library, never expected.
    Internal = 5,
}

/// Opaque handle to a factorial-type series family.
pub struct DsFamily {
    inner: FactorialFamily,
}

fn guard<F: FnOnce() -> DsStatus>(body: F) -> DsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => DsStatus::Internal,
    }
}

fn rational(num: i64, den: i64) -> Option<Rational> {
    if den == 0 {
        return None;
    }
    Some(Rational::new(num.into(), den.into()))
}

/// Create a family handle from rational parameters. On success writes the
/// handle to `out` (release with [`ds_family_free`]).
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ds_family_new(
    p_num: i64,
    p_den: i64,
    q_num: i64,
    q_den: i64,
    m_num: i64,
    m_den: i64,
    x_num: i64,
    x_den: i64,
    out: *mut *mut DsFamily,
) -> DsStatus {
    if out.is_null() {
        return DsStatus::NullPointer;
    }
    guard(|| {
        let params = (
            rational(p_num, p_den),
            rational(q_num, q_den),
            rational(m_num, m_den),
            rational(x_num, x_den),
        );
        let (Some(p), Some(q), Some(m), Some(x)) = params else {
            return DsStatus::InvalidArgument;
        };
        match FactorialFamily::new(p, q, m, x) {
            Ok(family) => {
                unsafe {
                    *out = Box::into_raw(Box::new(DsFamily { inner: family }));
                }
                DsStatus::Ok
            }
            Err(_) => DsStatus::InvalidArgument,
        }
    })
}

/// Release a family handle. Accepts null.
///
/// # Safety
/// `family` must be null or a pointer obtained from [`ds_family_new`] that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ds_family_free(family: *mut DsFamily) {
    if !family.is_null() {
        drop(unsafe { Box::from_raw(family) });
    }
}

/// Tail-closure selector for [`ds_sum_cf`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsClosure {
    /// Plain convergent bracketing; `closure_param` is ignored.
    None = 0,
    /// Pairwise closure centered at `closure_param`.
    Paired = 1,
    /// Single-step closure starting at `closure_param`.
    Single = 2,
}

/// Sum the family's continued fraction. Writes the value and its error
/// estimate through the out-pointers.
///
/// # Safety
/// `family` must be a live handle; `out_value` and `out_error` must be valid
/// writable pointers.
#[no_mangle]
pub unsafe extern "C" fn ds_sum_cf(
    family: *const DsFamily,
    levels: usize,
    closure: DsClosure,
    closure_param: u32,
    out_value: *mut f64,
    out_error: *mut f64,
) -> DsStatus {
    if family.is_null() || out_value.is_null() || out_error.is_null() {
        return DsStatus::NullPointer;
    }
    guard(|| {
        let family = unsafe { &(*family).inner };
        let closure: Option<TailClosure> = match closure {
            DsClosure::None => None,
            DsClosure::Paired => match tail_closure_paired(closure_param) {
                Ok(c) => Some(c),
                Err(_) => return DsStatus::InvalidArgument,
            },
            DsClosure::Single => match tail_closure_single(closure_param) {
                Ok(c) => Some(c),
                Err(_) => return DsStatus::InvalidArgument,
            },
        };
        match sum_by_cf(family, levels, closure.as_ref()) {
            Ok(sum) => {
                unsafe {
                    *out_value = sum.value;
                    *out_error = sum.error_estimate;
                }
                DsStatus::Ok
            }
            Err(_) => DsStatus::Failed,
        }
    })
}

/// Sum the family by the iterated difference transform on `depth` exact
/// terms (peel-two schedule run to exhaustion).
///
/// # Safety
/// `family` must be a live handle; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_sum_transform(
    family: *const DsFamily,
    depth: usize,
    out_value: *mut f64,
    out_error: *mut f64,
) -> DsStatus {
    if family.is_null() || out_value.is_null() || out_error.is_null() {
        return DsStatus::NullPointer;
    }
    guard(|| {
        let family = unsafe { &(*family).inner };
        if depth < 4 {
            return DsStatus::InvalidArgument;
        }
        let run = |terms: usize| -> Option<f64> {
            let series = generate_terms(family, terms);
            iterated_transform(&series, &vec![2; (terms - 2) / 2])
                .ok()
                .map(|out| to_f64(&out.value))
        };
        let (Some(value), Some(previous)) = (run(depth), run(depth - 2)) else {
            return DsStatus::Failed;
        };
        unsafe {
            *out_value = value;
            *out_error = (value - previous).abs();
        }
        DsStatus::Ok
    })
}

/// Ground-truth half-line integral for the family series at unit argument.
///
/// # Safety
/// Out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_borel_oracle(
    p_num: i64,
    p_den: i64,
    q_num: i64,
    q_den: i64,
    tolerance: f64,
    out_value: *mut f64,
    out_error: *mut f64,
) -> DsStatus {
    if out_value.is_null() || out_error.is_null() {
        return DsStatus::NullPointer;
    }
    guard(|| {
        let (Some(p), Some(q)) = (rational(p_num, p_den), rational(q_num, q_den)) else {
            return DsStatus::InvalidArgument;
        };
        match borel_oracle(&p, &q, tolerance) {
            Ok(result) => {
                unsafe {
                    *out_value = result.value;
                    *out_error = result.error_estimate;
                }
                DsStatus::Ok
            }
            Err(_) => DsStatus::Domain,
        }
    })
}

/// Composite trapezoid area of the unit-interval curve whose area equals the
/// alternating factorial series value.
///
/// # Safety
/// Out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_trapezoid_factorial_unit(
    panels: u64,
    out_value: *mut f64,
    out_error: *mut f64,
) -> DsStatus {
    if out_value.is_null() || out_error.is_null() {
        return DsStatus::NullPointer;
    }
    guard(|| {
        if panels == 0 {
            return DsStatus::InvalidArgument;
        }
        match trapezoid_unit_interval(&IntegrandSpec::FactorialUnit, panels) {
            Ok(result) => {
                unsafe {
                    *out_value = result.value;
                    *out_error = result.error_estimate;
                }
                DsStatus::Ok
            }
            Err(_) => DsStatus::Domain,
        }
    })
}

/// Run a reproduction protocol (`"s15"` ... `"s29"`) and return its report
/// as a JSON string. Release the string with [`ds_string_free`].
///
/// # Safety
/// `section` must be a valid nul-terminated string; `out_json` must be a
/// valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ds_repro_json(
    section: *const c_char,
    out_json: *mut *mut c_char,
) -> DsStatus {
    if section.is_null() || out_json.is_null() {
        return DsStatus::NullPointer;
    }
    guard(|| {
        let tag = match unsafe { CStr::from_ptr(section) }.to_str() {
            Ok(tag) => tag,
            Err(_) => return DsStatus::InvalidArgument,
        };
        let section: Section = match tag.parse() {
            Ok(section) => section,
            Err(_) => return DsStatus::InvalidArgument,
        };
        let report = cmd_repro(section);
        let json = report.render(OutputFormat::Json);
        match CString::new(json) {
            Ok(cstring) => {
                unsafe {
                    *out_json = cstring.into_raw();
                }
                DsStatus::Ok
            }
            Err(_) => DsStatus::Internal,
        }
    })
}

/// Release a string returned by this library. Accepts null.
///
/// # Safety
/// `s` must be null or a pointer returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn ds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn ds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
