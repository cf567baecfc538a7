//! C ABI for the hirzebruch library.
//!
//! Conventions: every fallible function returns an [`HrzStatus`] and writes
//! its result through out-pointers; strings are NUL-terminated, allocated by
//! this library and released with [`hrz_string_free`]; curvature tensors are
//! opaque [`HrzCurvature`] handles released with [`hrz_curvature_free`].
//! No call unwinds across the boundary.

use hirzebruch::curvature::KahlerCurvature;
use hirzebruch::genera::CharSeries;
use hirzebruch::hrr::{certify_search_window, chi_closed_form, classify_c1, HrrError, HrrProblem};
use hirzebruch::report::{VerificationReport, VerifyConfig};
use hirzebruch::surface::blowup_c1_top;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HrzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParityViolation = 3,
    Overflow = 4,
    NotEinstein = 5,
    ProjectionFailed = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Characteristic series selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HrzGenusKind {
    Todd = 0,
    AHat = 1,
    L = 2,
}

/// Opaque Kähler curvature tensor at a point.
pub struct HrzCurvature(KahlerCurvature);

/// Static description of a status code (never freed by the caller).
#[no_mangle]
pub extern "C" fn hrz_status_message(status: HrzStatus) -> *const c_char {
    let bytes: &'static [u8] = match status {
        HrzStatus::Ok => b"ok\0",
        HrzStatus::NullPointer => b"null pointer argument\0",
        HrzStatus::InvalidArgument => b"argument out of documented range\0",
        HrzStatus::ParityViolation => b"lambda must satisfy lambda = n+1 (mod 2)\0",
        HrzStatus::Overflow => b"result does not fit in the requested integer width\0",
        HrzStatus::NotEinstein => b"tensor is not Einstein to the required tolerance\0",
        HrzStatus::ProjectionFailed => b"einstein projection postcondition failed\0",
        HrzStatus::BufferTooSmall => b"output buffer too small\0",
        HrzStatus::Internal => b"internal error\0",
    };
    bytes.as_ptr().cast()
}

fn guarded<F: FnOnce() -> HrzStatus + UnwindSafe>(f: F) -> HrzStatus {
    catch_unwind(f).unwrap_or(HrzStatus::Internal)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by a `hrz_*` function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn hrz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

const N_MAX: u32 = 64;

/// χ(M, 𝒪(s)) for the n-dimensional ring with `c₁(M) = λ·h`, written to
/// `out` when it fits in an `i64` (`Overflow` otherwise). `n` in `1..=64`.
///
/// # Safety
/// `out` must be valid for writing one `i64`.
#[no_mangle]
pub unsafe extern "C" fn hrz_chi_i64(n: u32, lambda: i64, s: i64, out: *mut i64) -> HrzStatus {
    if out.is_null() {
        return HrzStatus::NullPointer;
    }
    if n == 0 || n > N_MAX {
        return HrzStatus::InvalidArgument;
    }
    let problem = match HrrProblem::new(n as usize, lambda, s) {
        Ok(p) => p,
        Err(HrrError::ParityViolation { .. }) => return HrzStatus::ParityViolation,
        Err(_) => return HrzStatus::Internal,
    };
    guarded(|| {
        let chi = chi_closed_form(n as usize, problem.effective_twist());
        debug_assert!(chi.is_integer());
        match i64::try_from(chi.to_integer()) {
            Ok(v) => {
                unsafe { *out = v };
                HrzStatus::Ok
            }
            Err(_) => HrzStatus::Overflow,
        }
    })
}

/// χ(M, 𝒪(s)) as a decimal string of arbitrary precision, or NULL on
/// invalid arguments. Free with [`hrz_string_free`].
#[no_mangle]
pub extern "C" fn hrz_chi_string(n: u32, lambda: i64, s: i64) -> *mut c_char {
    if n == 0 || n > N_MAX {
        return std::ptr::null_mut();
    }
    let Ok(problem) = HrrProblem::new(n as usize, lambda, s) else {
        return std::ptr::null_mut();
    };
    catch_unwind(|| {
        let chi = chi_closed_form(n as usize, problem.effective_twist());
        into_c_string(chi.to_integer().to_string())
    })
    .unwrap_or(std::ptr::null_mut())
}

/// Integer classification of `c₁ = λ·h`: writes the solutions `s` of
/// `(s+1)⋯(s+n) = n!` and the matching `λ = n+1+2s`, plus whether the
/// search window was certified exhaustive.
///
/// `capacity` is the element count of both buffers; two is always enough.
/// On `BufferTooSmall`, `out_len` holds the required count.
///
/// # Safety
/// `out_s` and `out_lambda` must be valid for `capacity` writes each;
/// `out_len` and `out_certified` must be valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn hrz_classify(
    n: u32,
    out_s: *mut i64,
    out_lambda: *mut i64,
    capacity: usize,
    out_len: *mut usize,
    out_certified: *mut bool,
) -> HrzStatus {
    if out_s.is_null() || out_lambda.is_null() || out_len.is_null() || out_certified.is_null() {
        return HrzStatus::NullPointer;
    }
    if n == 0 || n > N_MAX {
        return HrzStatus::InvalidArgument;
    }
    guarded(|| {
        let c = classify_c1(n as usize);
        if c.s_values.len() > capacity {
            unsafe { *out_len = c.s_values.len() };
            return HrzStatus::BufferTooSmall;
        }
        for (i, (&s, &lambda)) in c.s_values.iter().zip(&c.lambda_values).enumerate() {
            unsafe {
                *out_s.add(i) = s;
                *out_lambda.add(i) = lambda;
            }
        }
        unsafe {
            *out_len = c.s_values.len();
            *out_certified = certify_search_window(n as usize);
        }
        HrzStatus::Ok
    })
}

/// Coefficient of the chosen characteristic series at `degree` (in its root
/// variable), as a rational string like `-1/24`. NULL on invalid arguments.
/// Free with [`hrz_string_free`].
#[no_mangle]
pub extern "C" fn hrz_genus_coefficient_string(
    kind: HrzGenusKind,
    degree: u32,
    order: u32,
) -> *mut c_char {
    if order == 0 || order > 512 || degree > order {
        return std::ptr::null_mut();
    }
    catch_unwind(|| {
        let series = match kind {
            HrzGenusKind::Todd => CharSeries::todd(order as usize),
            HrzGenusKind::AHat => CharSeries::ahat(order as usize),
            HrzGenusKind::L => CharSeries::l(order as usize),
        };
        let coeff = series
            .series()
            .coefficient(degree as usize)
            .expect("degree <= order")
            .clone();
        into_c_string(coeff.to_string())
    })
    .unwrap_or(std::ptr::null_mut())
}

/// `∫ c₁(M̃)ⁿ` for the blowup of a point on an n-fold with `c₁ = 0`,
/// `b₂ = 0`. `n` in `2..=32`.
///
/// # Safety
/// `out` must be valid for writing one `i64`.
#[no_mangle]
pub unsafe extern "C" fn hrz_blowup_c1_top(n: u32, out: *mut i64) -> HrzStatus {
    if out.is_null() {
        return HrzStatus::NullPointer;
    }
    if !(2..=32).contains(&n) {
        return HrzStatus::InvalidArgument;
    }
    guarded(|| match blowup_c1_top(n as usize) {
        Ok(v) => {
            unsafe { *out = v };
            HrzStatus::Ok
        }
        Err(_) => HrzStatus::InvalidArgument,
    })
}

/// Checks `x/(1-e^{-x}) = e^{x/2}·(x/2)/sinh(x/2)` to the given order.
///
/// # Safety
/// `out` must be valid for writing one `bool`.
#[no_mangle]
pub unsafe extern "C" fn hrz_todd_ahat_identity_check(order: u32, out: *mut bool) -> HrzStatus {
    if out.is_null() {
        return HrzStatus::NullPointer;
    }
    if order > 512 {
        return HrzStatus::InvalidArgument;
    }
    guarded(|| {
        let ok = hirzebruch::series::todd_ahat_identity_check(order as usize);
        unsafe { *out = ok };
        HrzStatus::Ok
    })
}

/// Runs the verification suite and returns the JSON report. NULL on invalid
/// configuration. Free with [`hrz_string_free`].
#[no_mangle]
pub extern "C" fn hrz_verify_json(
    order: usize,
    nmax: usize,
    smax: i64,
    trials: usize,
    seed: u64,
    tolerance: f64,
) -> *mut c_char {
    if order == 0
        || order > 512
        || nmax == 0
        || nmax > 16
        || !(0..=64).contains(&smax)
        || trials == 0
        || trials > 100_000
        || tolerance.is_nan()
        || tolerance <= 0.0
    {
        return std::ptr::null_mut();
    }
    catch_unwind(|| {
        let config = VerifyConfig {
            order,
            nmax,
            smax,
            seed,
            trials,
            tolerance,
        };
        into_c_string(VerificationReport::run(&config).to_json())
    })
    .unwrap_or(std::ptr::null_mut())
}

// --- curvature handles ------------------------------------------------------

const CURVATURE_N_MAX: u32 = 16;

unsafe fn write_handle(out: *mut *mut HrzCurvature, tensor: KahlerCurvature) -> HrzStatus {
    unsafe { *out = Box::into_raw(Box::new(HrzCurvature(tensor))) };
    HrzStatus::Ok
}

/// A random Kähler-symmetric curvature tensor, deterministic in `seed`.
/// `n` in `2..=16`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_random(
    n: u32,
    seed: u64,
    out: *mut *mut HrzCurvature,
) -> HrzStatus {
    if out.is_null() {
        return HrzStatus::NullPointer;
    }
    if !(2..=CURVATURE_N_MAX).contains(&n) {
        return HrzStatus::InvalidArgument;
    }
    guarded(|| match KahlerCurvature::random(n as usize, seed) {
        Ok(t) => unsafe { write_handle(out, t) },
        Err(_) => HrzStatus::InvalidArgument,
    })
}

/// The constant-holomorphic-sectional-curvature model tensor
/// `R = c(δ⊗δ + δ⊗δ)`, which is Einstein with `λ = c(n+1)`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_model(
    n: u32,
    c: f64,
    out: *mut *mut HrzCurvature,
) -> HrzStatus {
    if out.is_null() {
        return HrzStatus::NullPointer;
    }
    if !(2..=CURVATURE_N_MAX).contains(&n) || !c.is_finite() {
        return HrzStatus::InvalidArgument;
    }
    guarded(|| unsafe { write_handle(out, KahlerCurvature::constant_hsc_model(n as usize, c)) })
}

/// Projects the tensor to an Einstein one with constant `lambda`; the result
/// is a new handle. The postcondition `max |Ric - λ·Id| ≤ 1e-10` is enforced.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_make_einstein(
    handle: *const HrzCurvature,
    lambda: f64,
    out: *mut *mut HrzCurvature,
) -> HrzStatus {
    if handle.is_null() || out.is_null() {
        return HrzStatus::NullPointer;
    }
    if !lambda.is_finite() {
        return HrzStatus::InvalidArgument;
    }
    let tensor = unsafe { &(*handle).0 };
    guarded(|| match tensor.make_einstein(lambda) {
        Ok(t) => unsafe { write_handle(out, t) },
        Err(_) => HrzStatus::ProjectionFailed,
    })
}

/// Releases a curvature handle. NULL is ignored.
///
/// # Safety
/// `handle` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_free(handle: *mut HrzCurvature) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Complex dimension of the tensor.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_dim(
    handle: *const HrzCurvature,
    out: *mut u32,
) -> HrzStatus {
    if handle.is_null() || out.is_null() {
        return HrzStatus::NullPointer;
    }
    unsafe { *out = (*handle).0.n() as u32 };
    HrzStatus::Ok
}

unsafe fn scalar_out(
    handle: *const HrzCurvature,
    out: *mut f64,
    f: impl FnOnce(&KahlerCurvature) -> f64 + UnwindSafe,
) -> HrzStatus {
    if handle.is_null() || out.is_null() {
        return HrzStatus::NullPointer;
    }
    let tensor = unsafe { &(*handle).0 };
    match catch_unwind(move || f(tensor)) {
        Ok(v) => {
            unsafe { *out = v };
            HrzStatus::Ok
        }
        Err(_) => HrzStatus::Internal,
    }
}

/// Scalar curvature `R = Σ R_{iī}`.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_scalar(
    handle: *const HrzCurvature,
    out: *mut f64,
) -> HrzStatus {
    unsafe { scalar_out(handle, out, KahlerCurvature::scalar) }
}

/// `|Rm|²`.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_norm_rm_sq(
    handle: *const HrzCurvature,
    out: *mut f64,
) -> HrzStatus {
    unsafe { scalar_out(handle, out, KahlerCurvature::norm_rm_sq) }
}

/// `|Ric|²`.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_norm_ric_sq(
    handle: *const HrzCurvature,
    out: *mut f64,
) -> HrzStatus {
    unsafe { scalar_out(handle, out, KahlerCurvature::norm_ric_sq) }
}

/// `max |Ric - λ·Id|`.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_ricci_deviation(
    handle: *const HrzCurvature,
    lambda: f64,
    out: *mut f64,
) -> HrzStatus {
    unsafe { scalar_out(handle, out, move |t| t.ricci_deviation(lambda)) }
}

/// `|Rm⁰|²`: squared norm after subtracting the constant-curvature model.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_rm0_norm_sq(
    handle: *const HrzCurvature,
    lambda: f64,
    out: *mut f64,
) -> HrzStatus {
    unsafe { scalar_out(handle, out, move |t| t.rm0(lambda).norm_rm_sq()) }
}

/// Residual of the contraction identity `Σ(R·R - R·R) = |Ric|² - |Rm|²`.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_contraction_residual(
    handle: *const HrzCurvature,
    out: *mut f64,
) -> HrzStatus {
    unsafe { scalar_out(handle, out, KahlerCurvature::contraction_identity_residual) }
}

/// Pointwise Chern-gap density `|Rm⁰|²/(n(n-1)4π²)`; the tensor must be
/// Einstein with the given `lambda` to 1e-8.
///
/// # Safety
/// `handle` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hrz_curvature_chern_gap(
    handle: *const HrzCurvature,
    lambda: f64,
    out: *mut f64,
) -> HrzStatus {
    if handle.is_null() || out.is_null() {
        return HrzStatus::NullPointer;
    }
    let tensor = unsafe { &(*handle).0 };
    guarded(move || match tensor.chern_gap(lambda) {
        Ok(v) => {
            unsafe { *out = v };
            HrzStatus::Ok
        }
        Err(_) => HrzStatus::NotEinstein,
    })
}
