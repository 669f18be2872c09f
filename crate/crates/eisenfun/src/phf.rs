//! Pseudo-hyperbolic components of the exponential.
//!
//! The order-m multisection of exp splits it into m entire functions
//! e_k(x) = sum_n x^(mn+k)/(mn+k)!, k = 0..m-1, which add back up to e^x.
//! Order 2 gives cosh and sinh; order 3 is the main case here, where the
//! cube root omega drives rotation symmetry, a closed reflection law, and a
//! tangent/secant calculus with a third-order secant ODE.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{cyclic_unit, UnitPower, SQRT3_HALF};
use crate::error::{Error, Result};
use crate::fact::{factorial, MAX_FACTORIAL};

/// Series tolerance used by operations that do not take one explicitly.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Hard cap on summed series terms; reaching it without the stop condition
/// is reported as truncation failure.
pub const MAX_TERMS: usize = 400;

/// Divisors below this magnitude raise a pole error instead of dividing.
pub const POLE_THRESHOLD: f64 = 1e-300;

/// Terms that must be summed before the two-consecutive-small-terms stop may
/// engage on coefficient-driven series, so zero runs in sparse patterns
/// (cosh, monomials) cannot end a multisection early.
const MIN_TERMS: usize = 8;

pub(crate) fn check_component(order: u32, k: u32) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidOrder(i64::from(order)));
    }
    if k >= order {
        return Err(Error::IndexOutOfRange {
            index: i64::from(k),
            order: i64::from(order),
        });
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "series tolerance must be positive and finite, got {tol}"
        )));
    }
    Ok(())
}

/// e_k(x) at component order m, summed until the running term magnitude
/// drops below tol * (1 + |partial sum|) twice in a row.
pub fn phf_series(order: u32, k: u32, x: Complex64, tol: f64) -> Result<Complex64> {
    check_component(order, k)?;
    check_tol(tol)?;
    let mut term = x.powu(k) / factorial(k as usize);
    let mut sum = term;
    let mut power = k; // exponent of the current term
    let mut small_run = usize::from(term.norm() < tol * (1.0 + sum.norm()));
    for _ in 1..MAX_TERMS {
        if small_run >= 2 {
            return Ok(sum);
        }
        // one factor at a time keeps the divisor from overflowing at any order
        for _ in 0..order {
            power += 1;
            term = term * x / f64::from(power);
        }
        sum += term;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        if term.norm() < tol * (1.0 + sum.norm()) {
            small_run += 1;
        } else {
            small_run = 0;
        }
    }
    if small_run >= 2 {
        return Ok(sum);
    }
    Err(Error::SeriesTruncation {
        max_terms: MAX_TERMS,
        last_term: term.norm(),
    })
}

/// e_k(x) for real x. The sum stays exactly real, so this is the series
/// value with no imaginary residue.
pub fn phf_series_real(order: u32, k: u32, x: f64, tol: f64) -> Result<f64> {
    phf_series(order, k, Complex64::new(x, 0.0), tol).map(|v| v.re)
}

/// All m components of one argument evaluated together.
#[derive(Debug, Clone)]
pub struct PhfComponents {
    order: u32,
    argument: Complex64,
    values: Vec<Complex64>,
}

impl PhfComponents {
    pub fn new(order: u32, argument: Complex64, tol: f64) -> Result<Self> {
        check_component(order, 0)?;
        let values = (0..order)
            .map(|k| phf_series(order, k, argument, tol))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            order,
            argument,
            values,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn argument(&self) -> Complex64 {
        self.argument
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Component k. Panics when k >= order.
    pub fn get(&self, k: u32) -> Complex64 {
        self.values[k as usize]
    }

    /// Partition sum over all components; equals exp(argument).
    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }
}

/// e_k(x) by roots-of-unity orthogonality:
/// (1/m) sum_j omega_m^(-kj) exp(omega_m^j x).
pub fn phf_projection(order: u32, k: u32, x: Complex64) -> Result<Complex64> {
    check_component(order, k)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..order {
        let rotation = cyclic_unit(order, i64::from(j))?;
        let weight = cyclic_unit(order, -i64::from(k) * i64::from(j))?;
        acc += weight * (rotation * x).exp();
    }
    Ok(acc / f64::from(order))
}

/// exp(omega^p x) for real x in closed form:
/// e^(-x/2) (cos(sqrt(3) x/2) +- i sin(sqrt(3) x/2)), plus sign for omega.
pub fn exp_unit_closed(x: f64, power: UnitPower) -> Complex64 {
    let (s, c) = (SQRT3_HALF * x).sin_cos();
    let modulus = (-x / 2.0).exp();
    match power {
        UnitPower::Omega => Complex64::new(modulus * c, modulus * s),
        UnitPower::OmegaSq => Complex64::new(modulus * c, -modulus * s),
    }
}

/// d/dx e_k = e_((k-1) mod m): differentiation steps the component index
/// down cyclically.
pub fn phf_derivative(order: u32, k: u32, x: Complex64) -> Result<Complex64> {
    check_component(order, k)?;
    phf_series(order, (k + order - 1) % order, x, DEFAULT_TOL)
}

/// e_k(x + y) by residue convolution: sum_j e_((k-j) mod m)(x) e_j(y).
pub fn phf_add(order: u32, k: u32, x: Complex64, y: Complex64) -> Result<Complex64> {
    check_component(order, k)?;
    let ex = PhfComponents::new(order, x, DEFAULT_TOL)?;
    let ey = PhfComponents::new(order, y, DEFAULT_TOL)?;
    Ok((0..order)
        .map(|j| ex.get((k + order - j) % order) * ey.get(j))
        .sum())
}

/// The order-3 symmetric-index convolution sum_j e_((m+j) mod 3)(y) *
/// e_((m-j) mod 3)(x). Every term carries index sum 2m mod 3, so the result
/// is e_((2m) mod 3)(x + y) - the component index doubles rather than
/// staying at m.
pub fn phf_add_symmetric(m: u32, x: Complex64, y: Complex64) -> Result<Complex64> {
    check_component(3, m)?;
    let ex = PhfComponents::new(3, x, DEFAULT_TOL)?;
    let ey = PhfComponents::new(3, y, DEFAULT_TOL)?;
    Ok((0..3)
        .map(|j| ey.get((m + j) % 3) * ex.get((m + 3 - j) % 3))
        .sum())
}

/// |sum_j e_((k+j) mod 3)(-x) e_((k-j) mod 3)(x) - delta_(k,0)|: the
/// opposite-argument convolution collapses to the Kronecker delta.
pub fn fundamental_identity_residual(k: u32, x: f64) -> Result<f64> {
    check_component(3, k)?;
    let neg = PhfComponents::new(3, Complex64::new(-x, 0.0), DEFAULT_TOL)?;
    let pos = PhfComponents::new(3, Complex64::new(x, 0.0), DEFAULT_TOL)?;
    let sum: Complex64 = (0..3)
        .map(|j| neg.get((k + j) % 3) * pos.get((k + 3 - j) % 3))
        .sum();
    let target = if k == 0 { 1.0 } else { 0.0 };
    Ok((sum - target).norm())
}

/// The cubic invariant e_0^3 + e_1^3 + e_2^3 - 3 e_0 e_1 e_2, identically 1
/// for every real x.
pub fn phf_delta(x: f64) -> Result<f64> {
    let c = PhfComponents::new(3, Complex64::new(x, 0.0), DEFAULT_TOL)?;
    let (e0, e1, e2) = (c.get(0).re, c.get(1).re, c.get(2).re);
    Ok(e0.powi(3) + e1.powi(3) + e2.powi(3) - 3.0 * e0 * e1 * e2)
}

/// e_k(-x) from the closed reflection forms
/// e_0(-x) = (e_0^2 - e_1 e_2)/Delta, e_1(-x) = (e_2^2 - e_0 e_1)/Delta,
/// e_2(-x) = (e_1^2 - e_0 e_2)/Delta, all evaluated at +x. Delta is 1, so
/// the division carries no hazard.
pub fn phf_reflect(k: u32, x: f64) -> Result<f64> {
    check_component(3, k)?;
    let c = PhfComponents::new(3, Complex64::new(x, 0.0), DEFAULT_TOL)?;
    let (e0, e1, e2) = (c.get(0).re, c.get(1).re, c.get(2).re);
    let delta = e0.powi(3) + e1.powi(3) + e2.powi(3) - 3.0 * e0 * e1 * e2;
    let numerator = match k {
        0 => e0 * e0 - e1 * e2,
        1 => e2 * e2 - e0 * e1,
        _ => e1 * e1 - e0 * e2,
    };
    Ok(numerator / delta)
}

/// An entire function given through Taylor coefficients a_n of
/// f(x) = sum a_n x^n / n!.
#[derive(Clone)]
pub struct SeriesSpec {
    coeff: Arc<dyn Fn(usize) -> Complex64 + Send + Sync>,
    tol: f64,
    max_terms: usize,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesSpec")
            .field("tol", &self.tol)
            .field("max_terms", &self.max_terms)
            .finish_non_exhaustive()
    }
}

impl SeriesSpec {
    /// `coeff` maps n to a_n. `max_terms` must be at least 8: the stop rule
    /// engages only after eight terms, so a function whose first nonzero
    /// coefficient in some residue class sits beyond index 8 * order needs
    /// its own, larger floor.
    pub fn new(
        coeff: impl Fn(usize) -> Complex64 + Send + Sync + 'static,
        tol: f64,
        max_terms: usize,
    ) -> Result<Self> {
        check_tol(tol)?;
        if max_terms < MIN_TERMS {
            return Err(Error::InvalidArgument(format!(
                "max_terms must be at least {MIN_TERMS}, got {max_terms}"
            )));
        }
        Ok(Self {
            coeff: Arc::new(coeff),
            tol,
            max_terms,
        })
    }

    /// The exponential: a_n = 1.
    pub fn exp() -> Self {
        Self::new(|_| Complex64::new(1.0, 0.0), DEFAULT_TOL, MAX_TERMS).expect("valid defaults")
    }

    /// The hyperbolic cosine: a_n = 1 for even n, 0 otherwise.
    pub fn cosh() -> Self {
        Self::new(
            |n| Complex64::new(if n % 2 == 0 { 1.0 } else { 0.0 }, 0.0),
            DEFAULT_TOL,
            MAX_TERMS,
        )
        .expect("valid defaults")
    }

    /// The monomial x^degree: a_degree = degree!, all other coefficients 0.
    /// Panics for degree > 170 (f64 factorial range).
    pub fn monomial(degree: usize) -> Self {
        assert!(degree <= MAX_FACTORIAL, "monomial degree above f64 range");
        Self::new(
            move |n| Complex64::new(if n == degree { factorial(degree) } else { 0.0 }, 0.0),
            DEFAULT_TOL,
            MAX_TERMS,
        )
        .expect("valid defaults")
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        (self.coeff)(n)
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Full Taylor sum at z.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let mut power = Complex64::new(1.0, 0.0); // z^n / n!
        let mut sum = self.coeff(0) * power;
        let mut small_run = 0usize;
        for n in 1..self.max_terms {
            power = power * z / n as f64;
            let term = self.coeff(n) * power;
            sum += term;
            if !(sum.re.is_finite() && sum.im.is_finite()) {
                return Err(Error::NonFinite);
            }
            if term.norm() < self.tol * (1.0 + sum.norm()) {
                small_run += 1;
                if small_run >= 2 && n + 1 >= MIN_TERMS {
                    return Ok(sum);
                }
            } else {
                small_run = 0;
            }
        }
        Err(Error::SeriesTruncation {
            max_terms: self.max_terms,
            last_term: 0.0,
        })
    }
}

/// Component k of f in the order-m parity split, summed from coefficients:
/// f_k(x) = sum_n a_(mn+k) x^(mn+k)/(mn+k)!.
pub fn parity_project(f: &SeriesSpec, order: u32, k: u32, x: Complex64) -> Result<Complex64> {
    check_component(order, k)?;
    let mut power = x.powu(k) / factorial(k as usize); // x^idx / idx!
    let mut idx = k;
    let mut sum = f.coeff(k as usize) * power;
    let mut small_run = 0usize;
    for n in 1..f.max_terms {
        for _ in 0..order {
            idx += 1;
            power = power * x / f64::from(idx);
        }
        let term = f.coeff(idx as usize) * power;
        sum += term;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        if term.norm() < f.tol * (1.0 + sum.norm()) {
            small_run += 1;
            if small_run >= 2 && n + 1 >= MIN_TERMS {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::SeriesTruncation {
        max_terms: f.max_terms,
        last_term: 0.0,
    })
}

/// The same component by evaluation instead of coefficients:
/// (1/m) sum_j omega^(-kj) f(omega^j x). Agrees with [`parity_project`] on
/// entire functions.
pub fn parity_project_eval<F>(f: F, order: u32, k: u32, x: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    check_component(order, k)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..order {
        let rotation = cyclic_unit(order, i64::from(j))?;
        let weight = cyclic_unit(order, -i64::from(k) * i64::from(j))?;
        acc += weight * f(rotation * x);
    }
    Ok(acc / f64::from(order))
}

/// |e_k(omega_m x) - omega_m^k e_k(x)|: rotating the argument by the unit
/// multiplies component k by the unit's k-th power.
pub fn parity_symmetry_residual(order: u32, k: u32, x: f64) -> Result<f64> {
    check_component(order, k)?;
    let unit = cyclic_unit(order, 1)?;
    let weight = cyclic_unit(order, i64::from(k))?;
    let rotated = phf_series(order, k, unit * x, DEFAULT_TOL)?;
    let straight = phf_series(order, k, Complex64::new(x, 0.0), DEFAULT_TOL)?;
    Ok((rotated - weight * straight).norm())
}

/// Index pair for the tangent ratio e_num/e_den; both indices in 0..3 and
/// distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangentIndex {
    num: u32,
    den: u32,
}

impl TangentIndex {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        check_component(3, num)?;
        check_component(3, den)?;
        if num == den {
            return Err(Error::InvalidArgument(
                "tangent indices must be distinct".into(),
            ));
        }
        Ok(Self { num, den })
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }
}

fn real_components(x: f64) -> Result<[f64; 3]> {
    let c = PhfComponents::new(3, Complex64::new(x, 0.0), DEFAULT_TOL)?;
    Ok([c.get(0).re, c.get(1).re, c.get(2).re])
}

fn checked_div(num: f64, den: f64) -> Result<f64> {
    if den.abs() < POLE_THRESHOLD {
        return Err(Error::Pole(den.abs()));
    }
    Ok(num / den)
}

/// t_(m,n)(x) = e_m(x)/e_n(x).
pub fn tangent(t: TangentIndex, x: f64) -> Result<f64> {
    let e = real_components(x)?;
    checked_div(e[t.num as usize], e[t.den as usize])
}

/// t'_(m,n) = t_(m-1,n) - t_(n-1,n) t_(m,n), all indices mod 3: the chain
/// rule on the component derivative e_k' = e_(k-1).
pub fn tangent_derivative(t: TangentIndex, x: f64) -> Result<f64> {
    let e = real_components(x)?;
    let den = e[t.den as usize];
    if den.abs() < POLE_THRESHOLD {
        return Err(Error::Pole(den.abs()));
    }
    let num_down = e[((t.num + 2) % 3) as usize] / den;
    let den_down = e[((t.den + 2) % 3) as usize] / den;
    let ratio = e[t.num as usize] / den;
    Ok(num_down - den_down * ratio)
}

/// |t_(0,2)(-x) - (t_(0,1)(x) - t_(2,0)(x)) / (t_(1,0)(x) - t_(2,1)(x))|:
/// the reflected ratio rebuilt from four forward tangents. Fails with a
/// pole at x = 0, where e_1, e_2 and the reflected denominator all vanish.
pub fn tangent_reflection_residual(x: f64) -> Result<f64> {
    let e = real_components(x)?;
    let r = real_components(-x)?;
    let lhs = checked_div(r[0], r[2])?;
    let t01 = checked_div(e[0], e[1])?;
    let t20 = checked_div(e[2], e[0])?;
    let t10 = checked_div(e[1], e[0])?;
    let t21 = checked_div(e[2], e[1])?;
    let rhs = checked_div(t01 - t20, t10 - t21)?;
    Ok((lhs - rhs).abs())
}

/// The secant s(x) = 1/e_0(x); equals 1 at x = 0 and falls off like
/// 3 e^(-x) for large positive x.
pub fn secant(x: f64) -> Result<f64> {
    let e0 = phf_series_real(3, 0, x, DEFAULT_TOL)?;
    checked_div(1.0, e0)
}

fn check_step(h: f64) -> Result<()> {
    if !(1e-4..=1e-2).contains(&h) {
        return Err(Error::InvalidArgument(format!(
            "stencil spacing must lie in [1e-4, 1e-2], got {h}"
        )));
    }
    Ok(())
}

/// s at the five stencil points x + j h, j = -2..=2.
fn secant_stencil(x: f64, h: f64) -> Result<[f64; 5]> {
    check_step(h)?;
    let mut s = [0.0; 5];
    for (i, v) in s.iter_mut().enumerate() {
        *v = secant(x + (i as f64 - 2.0) * h)?;
    }
    Ok(s)
}

/// Residual of the third-order secant ODE
/// s''' + 3 t_(2,0) s'' + 3 t_(1,0) s' + s = 0, with the derivatives taken
/// from 5-point central stencils of spacing h.
pub fn secant_ode_residual(x: f64, h: f64) -> Result<f64> {
    let s = secant_stencil(x, h)?;
    let d1 = (-s[4] + 8.0 * s[3] - 8.0 * s[1] + s[0]) / (12.0 * h);
    let d2 = (-s[4] + 16.0 * s[3] - 30.0 * s[2] + 16.0 * s[1] - s[0]) / (12.0 * h * h);
    let d3 = (s[4] - 2.0 * s[3] + 2.0 * s[1] - s[0]) / (2.0 * h * h * h);
    let e = real_components(x)?;
    let t20 = checked_div(e[2], e[0])?;
    let t10 = checked_div(e[1], e[0])?;
    Ok((d3 + 3.0 * t20 * d2 + 3.0 * t10 * d1 + s[2]).abs())
}

/// Residual of the same combination with the fourth derivative in place of
/// the third: s'''' + 3 t_(2,0) s'' + 3 t_(1,0) s' + s. This form does not
/// vanish; at x = 0 it equals s(0) = 1 because every derivative term is
/// zero there.
pub fn secant_ode_fourth_form_residual(x: f64, h: f64) -> Result<f64> {
    let s = secant_stencil(x, h)?;
    let d1 = (-s[4] + 8.0 * s[3] - 8.0 * s[1] + s[0]) / (12.0 * h);
    let d2 = (-s[4] + 16.0 * s[3] - 30.0 * s[2] + 16.0 * s[1] - s[0]) / (12.0 * h * h);
    let d4 = (s[4] - 4.0 * s[3] + 6.0 * s[2] - 4.0 * s[1] + s[0]) / (h * h * h * h);
    let e = real_components(x)?;
    let t20 = checked_div(e[2], e[0])?;
    let t10 = checked_div(e[1], e[0])?;
    Ok((d4 + 3.0 * t20 * d2 + 3.0 * t10 * d1 + s[2]).abs())
}

/// Order-2 component 0: the hyperbolic cosine.
pub fn cosh(x: Complex64) -> Result<Complex64> {
    phf_series(2, 0, x, DEFAULT_TOL)
}

/// Order-2 component 1: the hyperbolic sine.
pub fn sinh(x: Complex64) -> Result<Complex64> {
    phf_series(2, 1, x, DEFAULT_TOL)
}
