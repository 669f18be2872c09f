//! C ABI over the eisenfun library. Every function returns an
//! [`EisenStatus`]; results travel through out-pointers, which are written
//! only on `EISEN_STATUS_OK`. Complex numbers cross the boundary as the
//! plain `{re, im}` pair [`EisenComplex`]; the quadrature configuration is
//! an opaque handle with explicit new/free. The build script emits the
//! matching C header at `include/eisenfun.h`.

use std::ffi::{c_char, c_void};

use num_complex::Complex64;

use eisenfun::algebra::UnitPower;
use eisenfun::eft::QuadratureSpec;
use eisenfun::{Error, Result};

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisenStatus {
    /// Success; out-parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range (bad order, index, dimension, tolerance).
    InvalidArgument = 2,
    /// A denominator vanished at the evaluation point.
    Pole = 3,
    /// A series or quadrature did not converge within its budget.
    NoConvergence = 4,
    /// The transform integrand does not decay inside the window.
    NotDecayed = 5,
    /// Evaluation overflowed or produced a non-finite value.
    NonFinite = 6,
}

/// A complex number as a plain pair of doubles.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EisenComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for EisenComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<EisenComplex> for Complex64 {
    fn from(z: EisenComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Opaque quadrature configuration; create with `eisen_quadrature_new` or
/// `eisen_quadrature_default`, release with `eisen_quadrature_free`.
pub struct EisenQuadrature {
    inner: QuadratureSpec,
}

/// Real-valued callback: f(x, context). The context pointer is passed
/// through untouched and may be null.
pub type EisenRealFn = Option<unsafe extern "C" fn(x: f64, context: *mut c_void) -> f64>;

fn status_of(error: &Error) -> EisenStatus {
    match error {
        Error::Pole(_) => EisenStatus::Pole,
        Error::NotDecayed => EisenStatus::NotDecayed,
        Error::SeriesTruncation { .. } | Error::QuadratureNoConvergence(_) => {
            EisenStatus::NoConvergence
        }
        Error::NonFinite => EisenStatus::NonFinite,
        _ => EisenStatus::InvalidArgument,
    }
}

/// Writes a computed value through `out`, translating errors to a status.
unsafe fn deliver<T>(result: Result<T>, out: *mut T) -> EisenStatus {
    if out.is_null() {
        return EisenStatus::NullPointer;
    }
    match result {
        Ok(value) => {
            *out = value;
            EisenStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");

/// Library version as a static NUL-terminated string; never freed.
#[no_mangle]
pub extern "C" fn eisen_version() -> *const c_char {
    VERSION.as_ptr().cast()
}

/// Component e_k(x) of the order-m split of the exponential, real argument.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_phf(order: u32, k: u32, x: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::phf::phf_series_real(order, k, x, eisenfun::phf::DEFAULT_TOL), out)
}

/// Component e_k(x) for a complex argument.
///
/// # Safety
/// `out` must be null or valid for writing one EisenComplex.
#[no_mangle]
pub unsafe extern "C" fn eisen_phf_complex(
    order: u32,
    k: u32,
    x: EisenComplex,
    out: *mut EisenComplex,
) -> EisenStatus {
    let result = eisenfun::phf::phf_series(order, k, x.into(), eisenfun::phf::DEFAULT_TOL)
        .map(EisenComplex::from);
    deliver(result, out)
}

/// The same component from the unit-rotation projection instead of the
/// series; agreement of the two routes is a library-level invariant.
///
/// # Safety
/// `out` must be null or valid for writing one EisenComplex.
#[no_mangle]
pub unsafe extern "C" fn eisen_phf_projection(
    order: u32,
    k: u32,
    x: EisenComplex,
    out: *mut EisenComplex,
) -> EisenStatus {
    let result = eisenfun::phf::phf_projection(order, k, x.into()).map(EisenComplex::from);
    deliver(result, out)
}

/// e_k(-x) computed from the component values at +x via the reflection
/// formulas (order 3).
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_phf_reflect(k: u32, x: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::phf::phf_reflect(k, x), out)
}

/// The cubic determinant e_0^3 + e_1^3 + e_2^3 - 3 e_0 e_1 e_2, identically 1.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_delta(x: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::phf::phf_delta(x), out)
}

/// Tangent ratio e_num(x)/e_den(x), order 3.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_tangent(num: u32, den: u32, x: f64, out: *mut f64) -> EisenStatus {
    let result = eisenfun::phf::TangentIndex::new(num, den)
        .and_then(|index| eisenfun::phf::tangent(index, x));
    deliver(result, out)
}

/// Secant 1/e_0(x).
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_secant(x: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::phf::secant(x), out)
}

/// Two-variable Hermite polynomial H_n(x, y).
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_hermite2(n: u32, x: f64, y: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::poly::hermite2(n as usize, x, y), out)
}

/// Cyclic component j of the rotated binomial (x + wy)^n.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_pseudo_hermite3(
    n: u32,
    x: f64,
    y: f64,
    j: u32,
    out: *mut f64,
) -> EisenStatus {
    deliver(eisenfun::poly::pseudo_hermite3(n as usize, x, y, j), out)
}

/// Two-variable Laguerre polynomial L_n(x, y).
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_laguerre2(n: u32, x: f64, y: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::poly::laguerre2(n as usize, x, y), out)
}

/// Higher-order Hermite polynomial over the variable list xs[0..len].
///
/// # Safety
/// `xs` must be null or valid for reading `len` f64 values; `out` must be
/// null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_hermite_multi(
    n: u32,
    xs: *const f64,
    len: usize,
    out: *mut f64,
) -> EisenStatus {
    if xs.is_null() {
        return EisenStatus::NullPointer;
    }
    let variables = std::slice::from_raw_parts(xs, len);
    deliver(eisenfun::poly::hermite_multi(n as usize, variables), out)
}

/// Component g_j(x, y) of the two-variable exponential generating function.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_g_component(
    j: u32,
    x: f64,
    y: f64,
    out: *mut f64,
) -> EisenStatus {
    deliver(eisenfun::poly::g_component(j, x, y, eisenfun::phf::DEFAULT_TOL), out)
}

/// Closed form of the Gaussian transform component m at wavenumber k.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_gaussian_eft_closed(m: u32, k: f64, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::eft::gaussian_eft_closed(m, k), out)
}

/// New quadrature configuration: window [-half_width, half_width],
/// successive-estimate tolerance, and refinement budget.
///
/// # Safety
/// `out` must be valid for writing one pointer. On `EISEN_STATUS_OK` the
/// caller owns the handle and must release it with `eisen_quadrature_free`.
#[no_mangle]
pub unsafe extern "C" fn eisen_quadrature_new(
    half_width: f64,
    abs_tol: f64,
    max_refinements: u32,
    out: *mut *mut EisenQuadrature,
) -> EisenStatus {
    if out.is_null() {
        return EisenStatus::NullPointer;
    }
    match QuadratureSpec::new(half_width, abs_tol, max_refinements) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(EisenQuadrature { inner }));
            EisenStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Default quadrature configuration (window 10, tolerance 1e-10, budget 20).
/// The caller owns the handle and must release it with
/// `eisen_quadrature_free`.
#[no_mangle]
pub extern "C" fn eisen_quadrature_default() -> *mut EisenQuadrature {
    Box::into_raw(Box::new(EisenQuadrature {
        inner: QuadratureSpec::default(),
    }))
}

/// Releases a quadrature handle; null is a no-op.
///
/// # Safety
/// `quad` must be null or a handle obtained from this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn eisen_quadrature_free(quad: *mut EisenQuadrature) {
    if !quad.is_null() {
        drop(Box::from_raw(quad));
    }
}

/// Transform of the callback against the selected kernel variant (1 or 2)
/// at wavenumber k.
///
/// # Safety
/// `f` must be a valid callback for the duration of the call; `context` is
/// passed through to it untouched. `quad` must be a live quadrature handle.
/// `out` must be null or valid for writing one EisenComplex.
#[no_mangle]
pub unsafe extern "C" fn eisen_eft(
    f: EisenRealFn,
    context: *mut c_void,
    k: f64,
    variant: u32,
    quad: *const EisenQuadrature,
    out: *mut EisenComplex,
) -> EisenStatus {
    let Some(callback) = f else {
        return EisenStatus::NullPointer;
    };
    if quad.is_null() {
        return EisenStatus::NullPointer;
    }
    let power = match variant {
        1 => UnitPower::Omega,
        2 => UnitPower::OmegaSq,
        _ => return EisenStatus::InvalidArgument,
    };
    let spec = (*quad).inner;
    let result =
        eisenfun::eft::eft(|x| callback(x, context), k, power, &spec).map(EisenComplex::from);
    deliver(result, out)
}

/// Component m of the transform of the callback at wavenumber k.
///
/// # Safety
/// As for `eisen_eft`; `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_eft_component(
    f: EisenRealFn,
    context: *mut c_void,
    m: u32,
    k: f64,
    quad: *const EisenQuadrature,
    out: *mut f64,
) -> EisenStatus {
    let Some(callback) = f else {
        return EisenStatus::NullPointer;
    };
    if quad.is_null() {
        return EisenStatus::NullPointer;
    }
    let spec = (*quad).inner;
    deliver(
        eisenfun::eft::eft_component(|x| callback(x, context), m, k, &spec),
        out,
    )
}

/// Squared norm of the cyclic coherent component |alpha_j> on an N-level
/// truncation; equals e_j(|alpha|^2) up to the factorial tail.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_coherent_norm_sq(
    alpha: EisenComplex,
    j: u32,
    dim: u32,
    out: *mut f64,
) -> EisenStatus {
    let result = eisenfun::fock::coherent_component(alpha.into(), j, dim as usize)
        .map(|state| state.norm_squared());
    deliver(result, out)
}

/// Relative residual of the cubic ladder eigenrelation on |alpha_j>.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_cubic_eigencheck(
    alpha: EisenComplex,
    j: u32,
    dim: u32,
    out: *mut f64,
) -> EisenStatus {
    deliver(
        eisenfun::fock::cubic_eigencheck(alpha.into(), j, dim as usize),
        out,
    )
}

/// Deviation of the truncated [p, q] commutator from -i on the interior
/// block.
///
/// # Safety
/// `out` must be null or valid for writing one f64.
#[no_mangle]
pub unsafe extern "C" fn eisen_pq_commutator_deviation(dim: u32, out: *mut f64) -> EisenStatus {
    deliver(eisenfun::fock::pq_commutator_deviation(dim as usize), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe extern "C" fn gaussian_callback(x: f64, _context: *mut c_void) -> f64 {
        (-x * x).exp()
    }

    unsafe extern "C" fn scaled_callback(x: f64, context: *mut c_void) -> f64 {
        let scale = *(context as *const f64);
        (-scale * x * x).exp()
    }

    #[test]
    fn version_is_nul_terminated() {
        let ptr = eisen_version();
        assert!(!ptr.is_null());
        let s = unsafe { std::ffi::CStr::from_ptr(ptr) };
        assert_eq!(s.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn phf_matches_core_and_checks_pointers() {
        let mut value = 0.0f64;
        let status = unsafe { eisen_phf(3, 0, 1.0, &mut value) };
        assert_eq!(status, EisenStatus::Ok);
        assert_eq!(
            value,
            eisenfun::phf::phf_series_real(3, 0, 1.0, eisenfun::phf::DEFAULT_TOL).unwrap()
        );
        assert_eq!(
            unsafe { eisen_phf(3, 0, 1.0, ptr::null_mut()) },
            EisenStatus::NullPointer
        );
        assert_eq!(
            unsafe { eisen_phf(1, 0, 1.0, &mut value) },
            EisenStatus::InvalidArgument
        );
        assert_eq!(
            unsafe { eisen_phf(3, 5, 1.0, &mut value) },
            EisenStatus::InvalidArgument
        );
    }

    #[test]
    fn complex_routes_agree() {
        let x = EisenComplex { re: 0.7, im: -0.4 };
        let mut series = EisenComplex { re: 0.0, im: 0.0 };
        let mut projection = EisenComplex { re: 0.0, im: 0.0 };
        unsafe {
            assert_eq!(eisen_phf_complex(3, 2, x, &mut series), EisenStatus::Ok);
            assert_eq!(eisen_phf_projection(3, 2, x, &mut projection), EisenStatus::Ok);
        }
        assert!((series.re - projection.re).abs() < 1e-13);
        assert!((series.im - projection.im).abs() < 1e-13);
    }

    #[test]
    fn pole_reports_as_status() {
        let mut value = 0.0f64;
        // e_1(0) = 0, so the ratio e_0/e_1 has a pole at the origin
        assert_eq!(
            unsafe { eisen_tangent(0, 1, 0.0, &mut value) },
            EisenStatus::Pole
        );
        assert_eq!(
            unsafe { eisen_tangent(0, 0, 1.0, &mut value) },
            EisenStatus::InvalidArgument
        );
        assert_eq!(unsafe { eisen_secant(1.0, &mut value) }, EisenStatus::Ok);
        assert!((value - 0.85612164097338864).abs() < 1e-14);
    }

    #[test]
    fn reflection_and_delta() {
        let mut reflected = 0.0f64;
        let mut direct = 0.0f64;
        unsafe {
            assert_eq!(eisen_phf_reflect(1, 2.0, &mut reflected), EisenStatus::Ok);
            assert_eq!(eisen_phf(3, 1, -2.0, &mut direct), EisenStatus::Ok);
        }
        assert!((reflected - direct).abs() < 1e-11);
        let mut delta = 0.0f64;
        assert_eq!(unsafe { eisen_delta(1.5, &mut delta) }, EisenStatus::Ok);
        assert!((delta - 1.0).abs() < 1e-11);
    }

    #[test]
    fn polynomials_cross_the_boundary() {
        let mut value = 0.0f64;
        assert_eq!(unsafe { eisen_hermite2(3, 1.0, 1.0, &mut value) }, EisenStatus::Ok);
        assert_eq!(value, 7.0);
        assert_eq!(
            unsafe { eisen_pseudo_hermite3(3, 1.0, 1.0, 0, &mut value) },
            EisenStatus::Ok
        );
        assert_eq!(value, 2.0);
        assert_eq!(unsafe { eisen_laguerre2(2, 1.0, 1.0, &mut value) }, EisenStatus::Ok);
        assert_eq!(value, -0.5);
        let xs = [1.0f64, 1.0];
        let mut multi = 0.0f64;
        assert_eq!(
            unsafe { eisen_hermite_multi(3, xs.as_ptr(), xs.len(), &mut multi) },
            EisenStatus::Ok
        );
        assert_eq!(multi, 7.0);
        assert_eq!(
            unsafe { eisen_hermite_multi(3, ptr::null(), 0, &mut multi) },
            EisenStatus::NullPointer
        );
        let mut g0 = 0.0f64;
        assert_eq!(unsafe { eisen_g_component(0, 1.0, 1.0, &mut g0) }, EisenStatus::Ok);
        assert!((g0 - 2.7082716604245116).abs() < 1e-13);
    }

    #[test]
    fn quadrature_lifecycle_and_transform() {
        let mut quad: *mut EisenQuadrature = ptr::null_mut();
        assert_eq!(
            unsafe { eisen_quadrature_new(0.5, 1e-10, 20, &mut quad) },
            EisenStatus::InvalidArgument
        );
        assert!(quad.is_null());
        assert_eq!(
            unsafe { eisen_quadrature_new(10.0, 1e-10, 20, &mut quad) },
            EisenStatus::Ok
        );
        assert!(!quad.is_null());

        let mut value = EisenComplex { re: 0.0, im: 0.0 };
        let status = unsafe {
            eisen_eft(Some(gaussian_callback), ptr::null_mut(), 1.0, 1, quad, &mut value)
        };
        assert_eq!(status, EisenStatus::Ok);
        assert!((value.re - 0.60945112763019646).abs() < 1e-9);
        assert!((value.im + 0.13405116398593643).abs() < 1e-9);

        // context pointer carries data into the callback
        let scale = 2.0f64;
        let mut scaled = EisenComplex { re: 0.0, im: 0.0 };
        let status = unsafe {
            eisen_eft(
                Some(scaled_callback),
                &scale as *const f64 as *mut c_void,
                1.0,
                1,
                quad,
                &mut scaled,
            )
        };
        assert_eq!(status, EisenStatus::Ok);
        assert!(scaled.re < value.re, "narrower gaussian, smaller transform");

        let mut component = 0.0f64;
        let status = unsafe {
            eisen_eft_component(Some(gaussian_callback), ptr::null_mut(), 0, 1.0, quad, &mut component)
        };
        assert_eq!(status, EisenStatus::Ok);
        let mut closed = 0.0f64;
        assert_eq!(
            unsafe { eisen_gaussian_eft_closed(0, 1.0, &mut closed) },
            EisenStatus::Ok
        );
        assert!((component - closed).abs() < 1e-8);

        assert_eq!(
            unsafe { eisen_eft(None, ptr::null_mut(), 1.0, 1, quad, &mut value) },
            EisenStatus::NullPointer
        );
        assert_eq!(
            unsafe {
                eisen_eft(Some(gaussian_callback), ptr::null_mut(), 1.0, 3, quad, &mut value)
            },
            EisenStatus::InvalidArgument
        );
        assert_eq!(
            unsafe {
                eisen_eft(
                    Some(gaussian_callback),
                    ptr::null_mut(),
                    1.0,
                    1,
                    ptr::null(),
                    &mut value,
                )
            },
            EisenStatus::NullPointer
        );
        unsafe {
            eisen_quadrature_free(quad);
            eisen_quadrature_free(ptr::null_mut()); // no-op
        }

        let default = eisen_quadrature_default();
        assert!(!default.is_null());
        unsafe { eisen_quadrature_free(default) };
    }

    #[test]
    fn slow_decay_reports_not_decayed() {
        let default = eisen_quadrature_default();
        unsafe extern "C" fn slow(x: f64, _context: *mut c_void) -> f64 {
            1.0 / (1.0 + x * x)
        }
        let mut value = EisenComplex { re: 0.0, im: 0.0 };
        assert_eq!(
            unsafe { eisen_eft(Some(slow), ptr::null_mut(), 1.0, 1, default, &mut value) },
            EisenStatus::NotDecayed
        );
        unsafe { eisen_quadrature_free(default) };
    }

    #[test]
    fn operator_checks_cross_the_boundary() {
        let alpha = EisenComplex { re: 1.0, im: 0.0 };
        let mut norm_sq = 0.0f64;
        assert_eq!(
            unsafe { eisen_coherent_norm_sq(alpha, 0, 60, &mut norm_sq) },
            EisenStatus::Ok
        );
        assert!((norm_sq - 1.1680583133759185).abs() < 1e-12);
        let mut residual = 0.0f64;
        assert_eq!(
            unsafe { eisen_cubic_eigencheck(alpha, 0, 60, &mut residual) },
            EisenStatus::Ok
        );
        assert!(residual < 1e-10);
        let mut deviation = 0.0f64;
        assert_eq!(
            unsafe { eisen_pq_commutator_deviation(12, &mut deviation) },
            EisenStatus::Ok
        );
        assert!(deviation < 1e-12);
        assert_eq!(
            unsafe { eisen_pq_commutator_deviation(2, &mut deviation) },
            EisenStatus::InvalidArgument
        );
    }

    #[test]
    fn header_is_generated_with_the_full_surface() {
        let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/eisenfun.h");
        let text = std::fs::read_to_string(header).expect("header exists after build");
        for symbol in [
            "EISEN_STATUS_OK",
            "EisenComplex",
            "EisenQuadrature",
            "EisenRealFn",
            "eisen_phf",
            "eisen_phf_projection",
            "eisen_tangent",
            "eisen_hermite_multi",
            "eisen_eft_component",
            "eisen_quadrature_free",
            "eisen_coherent_norm_sq",
        ] {
            assert!(text.contains(symbol), "header is missing {symbol}");
        }
        assert!(text.contains("#ifndef EISENFUN_H"));
    }
}
