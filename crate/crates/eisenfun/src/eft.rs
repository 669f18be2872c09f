//! The integral transform built on the cube-root units: f is integrated
//! against e^(-k omega x) (or its conjugate), which splits into the three
//! component kernels e_m(-kx). For the Gaussian the transform has a closed
//! component form, which anchors the quadrature checks.

use num_complex::Complex64;

use crate::algebra::{UnitPower, SQRT3_HALF};
use crate::error::{Error, Result};
use crate::phf::{phf_series_real, DEFAULT_TOL};

/// Normalization 1/sqrt(2 pi).
const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Edge decay demanded of the weighted integrand at +-L.
const EDGE_TOL: f64 = 1e-12;

/// Looser decay demanded halfway out, at +-L/2.
const MID_TOL: f64 = 1e-6;

/// Window, tolerance, and refinement budget for the quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    half_width: f64,
    abs_tol: f64,
    max_refinements: u32,
}

impl QuadratureSpec {
    /// Window [-half_width, half_width], successive-estimate tolerance, and
    /// the number of interval halvings allowed. Bounds: half_width >= 1,
    /// abs_tol >= 1e-13, max_refinements <= 24.
    pub fn new(half_width: f64, abs_tol: f64, max_refinements: u32) -> Result<Self> {
        if !(half_width.is_finite() && half_width >= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "quadrature half-width must be at least 1, got {half_width}"
            )));
        }
        if !(abs_tol.is_finite() && abs_tol >= 1e-13) {
            return Err(Error::InvalidArgument(format!(
                "quadrature tolerance must be at least 1e-13, got {abs_tol}"
            )));
        }
        if max_refinements > 24 {
            return Err(Error::InvalidArgument(format!(
                "refinement budget capped at 24, got {max_refinements}"
            )));
        }
        Ok(Self {
            half_width,
            abs_tol,
            max_refinements,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_refinements(&self) -> u32 {
        self.max_refinements
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            half_width: 10.0,
            abs_tol: 1e-10,
            max_refinements: 20,
        }
    }
}

/// Integrates g over the configured window by trapezoid doubling with Simpson
/// extrapolation, stopping when successive Simpson estimates agree to
/// abs_tol. Agreement is not consulted below 64 panels, so a slowly
/// developing integrand on a wide window cannot converge spuriously.
pub fn integrate<F>(g: F, spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let l = spec.half_width;
    let width = 2.0 * l;
    let mut trap = 0.5 * width * (g(-l) + g(l));
    let mut previous: Option<Complex64> = None;
    for r in 1..=spec.max_refinements {
        let panels = 1u64 << r;
        let h = width / panels as f64;
        let mut midpoints = Complex64::new(0.0, 0.0);
        let mut i = 1;
        while i < panels {
            midpoints += g(-l + i as f64 * h);
            i += 2;
        }
        let refined = 0.5 * trap + h * midpoints;
        let simpson = (4.0 * refined - trap) / 3.0;
        if !(simpson.re.is_finite() && simpson.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        if let Some(prev) = previous {
            if panels >= 64 && (simpson - prev).norm() < spec.abs_tol {
                return Ok(simpson);
            }
        }
        previous = Some(simpson);
        trap = refined;
    }
    Err(Error::QuadratureNoConvergence(spec.max_refinements))
}

/// True when the exponentially weighted integrand f(x) e^(kx/2) has decayed
/// at the window edges: below 1e-12 at +-L and below 1e-6 at +-L/2.
pub fn existence_probe<F>(f: F, k: f64, half_width: f64) -> bool
where
    F: Fn(f64) -> f64,
{
    let weighted = |x: f64| (f(x) * (k * x / 2.0).exp()).abs();
    weighted(half_width) < EDGE_TOL
        && weighted(-half_width) < EDGE_TOL
        && weighted(half_width / 2.0) < MID_TOL
        && weighted(-half_width / 2.0) < MID_TOL
}

/// The transform (1/sqrt(2 pi)) integral of f(x) e^(-k u x) dx over the
/// window, with u the unit selected by `variant`: e^(kx/2 - i sqrt(3)kx/2)
/// for the first power, the conjugate kernel for the second.
pub fn eft<F>(f: F, k: f64, variant: UnitPower, quad: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64) -> f64,
{
    if !existence_probe(&f, k, quad.half_width) {
        return Err(Error::NotDecayed);
    }
    let sign = match variant {
        UnitPower::Omega => -1.0,
        UnitPower::OmegaSq => 1.0,
    };
    let value = integrate(
        |x| f(x) * Complex64::new(k * x / 2.0, sign * SQRT3_HALF * k * x).exp(),
        quad,
    )?;
    Ok(INV_SQRT_2PI * value)
}

/// |e_m(t)| is bounded by (e^t + 2 e^(-t/2))/3 for every real t (triangle
/// inequality over the three rotated exponentials).
fn component_envelope(t: f64) -> f64 {
    (t.exp() + 2.0 * (-t / 2.0).exp()) / 3.0
}

/// Component m of the transform:
/// (1/sqrt(2 pi)) integral of f(x) e_m(-kx) dx, a real number for real f.
/// Decay is probed against the component envelope, since e_m(-kx) grows on
/// whichever side -kx is positive.
pub fn eft_component<F>(f: F, m: u32, k: f64, quad: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    crate::phf::check_component(3, m)?;
    let l = quad.half_width;
    let weighted = |x: f64| (f(x)).abs() * component_envelope(-k * x);
    if !(weighted(l) < EDGE_TOL
        && weighted(-l) < EDGE_TOL
        && weighted(l / 2.0) < MID_TOL
        && weighted(-l / 2.0) < MID_TOL)
    {
        return Err(Error::NotDecayed);
    }
    let value = integrate(
        |x| {
            let kernel = phf_series_real(3, m, -k * x, DEFAULT_TOL).unwrap_or(f64::NAN);
            Complex64::new(f(x) * kernel, 0.0)
        },
        quad,
    )?;
    Ok(INV_SQRT_2PI * value.re)
}

/// The even/odd kernel pair:
/// (cos side, sin side) = ((v2 + v1)/2, (v2 - v1)/(2i)) from the two
/// transform variants; both are real for real f.
pub fn eft_cos_sin<F>(f: F, k: f64, quad: &QuadratureSpec) -> Result<(Complex64, Complex64)>
where
    F: Fn(f64) -> f64,
{
    let v1 = eft(&f, k, UnitPower::Omega, quad)?;
    let v2 = eft(&f, k, UnitPower::OmegaSq, quad)?;
    let cos_side = (v2 + v1) / 2.0;
    let sin_side = (v2 - v1) / Complex64::new(0.0, 2.0);
    Ok((cos_side, sin_side))
}

/// Closed form of the Gaussian transform components:
/// (1/sqrt(2)) e_sigma(m)(k^2/4) with sigma swapping components 1 and 2.
pub fn gaussian_eft_closed(m: u32, k: f64) -> Result<f64> {
    crate::phf::check_component(3, m)?;
    let swapped = match m {
        0 => 0,
        1 => 2,
        _ => 1,
    };
    Ok(phf_series_real(3, swapped, k * k / 4.0, DEFAULT_TOL)? / 2f64.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_unit, OMEGA};
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn gaussian(x: f64) -> f64 {
        (-x * x).exp()
    }

    #[test]
    fn quadrature_spec_bounds() {
        assert!(QuadratureSpec::new(0.5, 1e-10, 20).is_err());
        assert!(QuadratureSpec::new(10.0, 1e-14, 20).is_err());
        assert!(QuadratureSpec::new(10.0, 1e-10, 25).is_err());
        let spec = QuadratureSpec::default();
        assert_eq!(spec.half_width(), 10.0);
        assert_eq!(spec.abs_tol(), 1e-10);
        assert_eq!(spec.max_refinements(), 20);
    }

    #[test]
    fn integrate_known_integrals() {
        let spec = QuadratureSpec::default();
        let v = integrate(|x| Complex64::new(gaussian(x), 0.0), &spec).unwrap();
        assert_relative_eq!(v.re, std::f64::consts::PI.sqrt(), max_relative = 1e-11);
        assert_eq!(v.im, 0.0);
        // purely imaginary odd integrand integrates to zero
        let v = integrate(|x| Complex64::new(0.0, x * gaussian(x)), &spec).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn integrate_reports_non_convergence() {
        let tight = QuadratureSpec::new(10.0, 1e-13, 7).unwrap();
        assert!(matches!(
            integrate(|x| Complex64::new(gaussian(x), 0.0), &tight),
            Err(Error::QuadratureNoConvergence(7))
        ));
    }

    #[test]
    fn existence_probe_cases() {
        assert!(existence_probe(gaussian, 2.0, 10.0));
        assert!(!existence_probe(|x: f64| 1.0 / (1.0 + x * x), 1.0, 40.0));
        // e^(-|x|) against k = 1 nets e^(-L/2) at the far edge: 2.06e-9 at
        // L = 40, which misses the 1e-12 edge demand; L = 60 gives 9.4e-14
        assert!(!existence_probe(|x: f64| (-x.abs()).exp(), 1.0, 40.0));
        assert!(existence_probe(|x: f64| (-x.abs()).exp(), 1.0, 60.0));
    }

    #[test]
    fn gaussian_transform_at_zero() {
        let spec = QuadratureSpec::default();
        for variant in [UnitPower::Omega, UnitPower::OmegaSq] {
            let v = eft(gaussian, 0.0, variant, &spec).unwrap();
            assert_relative_eq!(v.re, FRAC_1_SQRT_2, max_relative = 1e-10);
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn gaussian_transform_at_one() {
        let spec = QuadratureSpec::default();
        let v = eft(gaussian, 1.0, UnitPower::Omega, &spec).unwrap();
        assert_relative_eq!(v.re, 0.60945112763019646, max_relative = 1e-9);
        assert_relative_eq!(v.im, -0.13405116398593643, max_relative = 1e-9);
    }

    #[test]
    fn variants_are_conjugate_for_real_input() {
        let spec = QuadratureSpec::default();
        for &k in &[0.5, 1.0, 1.7] {
            let v1 = eft(gaussian, k, UnitPower::Omega, &spec).unwrap();
            let v2 = eft(gaussian, k, UnitPower::OmegaSq, &spec).unwrap();
            assert!((v2 - v1.conj()).norm() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn transform_requires_decay() {
        let spec = QuadratureSpec::default();
        assert!(matches!(
            eft(|_| 1.0, 1.0, UnitPower::Omega, &spec),
            Err(Error::NotDecayed)
        ));
        assert!(matches!(
            eft_component(|_| 1.0, 0, 1.0, &spec),
            Err(Error::NotDecayed)
        ));
    }

    #[test]
    fn component_values_for_the_gaussian() {
        let spec = QuadratureSpec::default();
        assert_relative_eq!(
            eft_component(gaussian, 0, 0.0, &spec).unwrap(),
            FRAC_1_SQRT_2,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            eft_component(gaussian, 0, 1.0, &spec).unwrap(),
            0.70894844487205908,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            eft_component(gaussian, 1, 1.0, &spec).unwrap(),
            0.022102841629399559,
            max_relative = 1e-7
        );
        assert_relative_eq!(
            eft_component(gaussian, 2, 1.0, &spec).unwrap(),
            0.17689179285432568,
            max_relative = 1e-8
        );
        assert!(eft_component(gaussian, 3, 1.0, &spec).is_err());
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let spec = QuadratureSpec::default();
        assert_relative_eq!(
            gaussian_eft_closed(0, 1.0).unwrap(),
            0.70894844487205908,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            gaussian_eft_closed(2, 1.0).unwrap(),
            0.17689179285432568,
            max_relative = 1e-14
        );
        let mut k = 0.0;
        while k <= 2.0 {
            for m in 0..3u32 {
                let quadrature = eft_component(gaussian, m, k, &spec).unwrap();
                let closed = gaussian_eft_closed(m, k).unwrap();
                assert!(
                    (quadrature - closed).abs() < 1e-8,
                    "m={m} k={k}: {quadrature} vs {closed}"
                );
            }
            k += 0.25;
        }
    }

    #[test]
    fn components_recombine_into_the_transform() {
        let spec = QuadratureSpec::default();
        for &k in &[0.5, 1.0, 2.0] {
            let whole = eft(gaussian, k, UnitPower::Omega, &spec).unwrap();
            let mut recombined = Complex64::new(0.0, 0.0);
            for m in 0..3 {
                recombined += cyclic_unit(3, m).unwrap()
                    * eft_component(gaussian, m as u32, k, &spec).unwrap();
            }
            assert!((whole - recombined).norm() < 1e-9, "k={k}");
        }
    }

    #[test]
    fn cos_sin_combination() {
        let spec = QuadratureSpec::default();
        let (c, s) = eft_cos_sin(gaussian, 0.0, &spec).unwrap();
        assert_relative_eq!(c.re, FRAC_1_SQRT_2, max_relative = 1e-10);
        assert!(s.norm() < 1e-11);

        let (c, s) = eft_cos_sin(gaussian, 1.0, &spec).unwrap();
        assert_relative_eq!(c.re, 0.60945112763019646, max_relative = 1e-9);
        assert_relative_eq!(s.re, 0.13405116398593643, max_relative = 1e-9);
        assert!(c.im.abs() < 1e-10 && s.im.abs() < 1e-10);

        // direct quadrature of the real cosine-kernel integrand
        let direct = integrate(
            |x| Complex64::new(gaussian(x) * (x / 2.0).exp() * (SQRT3_HALF * x).cos(), 0.0),
            &spec,
        )
        .unwrap();
        assert!((INV_SQRT_2PI * direct.re - c.re).abs() < 1e-9);
    }

    #[test]
    fn transform_is_linear() {
        let spec = QuadratureSpec::default();
        let f = |x: f64| (-x * x).exp();
        let g = |x: f64| (-2.0 * x * x).exp();
        let (alpha, beta) = (1.7, -0.4);
        for &k in &[0.5, 1.3] {
            let combined = eft(|x| alpha * f(x) + beta * g(x), k, UnitPower::Omega, &spec).unwrap();
            let separate = alpha * eft(f, k, UnitPower::Omega, &spec).unwrap()
                + beta * eft(g, k, UnitPower::Omega, &spec).unwrap();
            assert!((combined - separate).norm() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn kernel_identity_behind_the_component_split() {
        // e^(-k omega x) = sum_m omega^m e_m(-kx), pointwise
        for &(k, x) in &[(1.0, 0.7), (2.0, -1.1), (0.5, 3.0)] {
            let lhs = (-OMEGA * k * x).exp();
            let mut rhs = Complex64::new(0.0, 0.0);
            for m in 0..3 {
                rhs += cyclic_unit(3, m).unwrap()
                    * phf_series_real(3, m as u32, -k * x, DEFAULT_TOL).unwrap();
            }
            assert!((lhs - rhs).norm() < 1e-13, "k={k} x={x}");
        }
    }
}
