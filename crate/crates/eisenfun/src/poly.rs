//! Polynomial families attached to the component decomposition: two-variable
//! Hermite, their order-3 pseudo and eta splittings, two-variable Laguerre
//! with a cubic hybrid, the g_j component series of the Hermite generating
//! function, and the multivariate Hermite recursion.

use num_complex::Complex64;

use crate::algebra::{cyclic_unit, SQRT3_HALF};
use crate::error::{Error, Result};
use crate::fact::factorial;

/// Largest polynomial degree accepted; keeps every factorial ratio inside
/// f64 range with headroom for the series numerators.
pub const MAX_DEGREE: usize = 120;

const MIN_TERMS: usize = 8;

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "degree {n} exceeds the cap {MAX_DEGREE}"
        )));
    }
    Ok(())
}

fn check_j(j: u32) -> Result<()> {
    if j > 2 {
        return Err(Error::IndexOutOfRange {
            index: i64::from(j),
            order: 3,
        });
    }
    Ok(())
}

/// Two-variable Hermite polynomial
/// H_n(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!).
pub fn hermite2(n: usize, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    let mut sum = 0.0;
    for r in 0..=n / 2 {
        sum += factorial(n) / (factorial(n - 2 * r) * factorial(r))
            * x.powi((n - 2 * r) as i32)
            * y.powi(r as i32);
    }
    Ok(sum)
}

/// [`hermite2`] over complex variables; needed wherever y picks up a cube
/// root of unity.
pub fn hermite2_complex(n: usize, x: Complex64, y: Complex64) -> Result<Complex64> {
    check_degree(n)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for r in 0..=n / 2 {
        sum += factorial(n) / (factorial(n - 2 * r) * factorial(r))
            * x.powu((n - 2 * r) as u32)
            * y.powu(r as u32);
    }
    Ok(sum)
}

/// Cubic pseudo-Hermite component
/// h_n(x, y; j) = n! sum_r x^(n-3r-j) y^(3r+j) / ((n-3r-j)! (3r+j)!),
/// the part of the binomial (x + omega y)^n whose y-power is j mod 3:
/// (x + omega y)^n = sum_j omega^j h_n(x, y; j).
pub fn pseudo_hermite3(n: usize, x: f64, y: f64, j: u32) -> Result<f64> {
    check_degree(n)?;
    check_j(j)?;
    let mut sum = 0.0;
    let mut power = j as usize; // 3r + j
    while power <= n {
        sum += factorial(n) / (factorial(n - power) * factorial(power))
            * x.powi((n - power) as i32)
            * y.powi(power as i32);
        power += 3;
    }
    Ok(sum)
}

/// Two-variable Laguerre polynomial
/// L_n(x, y) = n! sum_r (-1)^r y^(n-r) x^r / ((n-r)! (r!)^2).
pub fn laguerre2(n: usize, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    let mut sum = 0.0;
    for r in 0..=n {
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * factorial(n) / (factorial(n - r) * factorial(r) * factorial(r))
            * y.powi((n - r) as i32)
            * x.powi(r as i32);
    }
    Ok(sum)
}

/// Cubic hybrid Laguerre component
/// l_n(y, x; j) = n! sum_r (-1)^(3r+j) y^(n-3r-j) x^(3r+j) / ((n-3r-j)! [(3r+j)!]^2),
/// the j-th cyclic part of (y - omega u)^n under the substitution
/// u^s -> x^s/s!.
pub fn hybrid_laguerre3(n: usize, y: f64, x: f64, j: u32) -> Result<f64> {
    check_degree(n)?;
    check_j(j)?;
    let mut sum = 0.0;
    let mut power = j as usize; // 3r + j
    while power <= n {
        let sign = if power.is_multiple_of(2) { 1.0 } else { -1.0 };
        sum += sign * factorial(n)
            / (factorial(n - power) * factorial(power) * factorial(power))
            * y.powi((n - power) as i32)
            * x.powi(power as i32);
        power += 3;
    }
    Ok(sum)
}

/// Eta component
/// eta_n(x, y; j) = n! sum_r x^(n-2(3r+j)) y^(3r+j) / ((n-2(3r+j))! (3r+j)!),
/// the j-th cyclic part of H_n(x, omega y):
/// H_n(x, omega y) = sum_j omega^j eta_n(x, y; j).
pub fn eta(n: usize, x: f64, y: f64, j: u32) -> Result<f64> {
    check_degree(n)?;
    check_j(j)?;
    let mut sum = 0.0;
    let mut power = j as usize; // 3r + j
    while 2 * power <= n {
        sum += factorial(n) / (factorial(n - 2 * power) * factorial(power))
            * x.powi((n - 2 * power) as i32)
            * y.powi(power as i32);
        power += 3;
    }
    Ok(sum)
}

/// Expansion of (y + c u)^n with the substitution u^s -> x^s/s!:
/// sum_s C(n,s) y^(n-s) c^s x^s / s!. With c = -1 this reproduces
/// [`laguerre2`] term by term; with c = -omega it resums the hybrid
/// Laguerre components. Kept as an independent route for consistency
/// checks.
pub fn operational_binomial(n: usize, y: f64, c: Complex64, x: f64) -> Result<Complex64> {
    check_degree(n)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 0..=n {
        let binom = factorial(n) / (factorial(n - s) * factorial(s));
        sum += binom * y.powi((n - s) as i32) * c.powu(s as u32) * x.powi(s as i32)
            / factorial(s);
    }
    Ok(sum)
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "series tolerance must be positive and finite, got {tol}"
        )));
    }
    Ok(())
}

/// Sums a component series term(0), term(1), ... under the shared
/// truncation policy: stop after two consecutive terms below
/// tol * (1 + |partial|) once at least MIN_TERMS terms are in, stop
/// unconditionally after `limit` terms. When the degree cap cuts the series
/// short of MIN_TERMS, one final small term is accepted as convergence.
fn sum_component_series(
    mut term: impl FnMut(usize) -> Result<f64>,
    limit: usize,
    tol: f64,
) -> Result<f64> {
    let mut sum = 0.0;
    let mut small_run = 0usize;
    let mut last = f64::INFINITY;
    for n in 0..limit {
        last = term(n)?;
        sum += last;
        if !sum.is_finite() {
            return Err(Error::NonFinite);
        }
        if last.abs() < tol * (1.0 + sum.abs()) {
            small_run += 1;
            if small_run >= 2 && n + 1 >= MIN_TERMS {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    if small_run >= 1 {
        return Ok(sum);
    }
    Err(Error::SeriesTruncation {
        max_terms: limit,
        last_term: last.abs(),
    })
}

/// Component j of the Hermite generating value at t = 1:
/// g_j(x, y) = sum_n H_(3n+j)(x, y) / (3n+j)!.
/// The three components resum to e^(x+y) and satisfy the rotation
/// projection computed by [`g_component_projection`].
pub fn g_component(j: u32, x: f64, y: f64, tol: f64) -> Result<f64> {
    check_j(j)?;
    check_tol(tol)?;
    let limit = (MAX_DEGREE - j as usize) / 3 + 1;
    sum_component_series(
        |n| {
            let degree = 3 * n + j as usize;
            Ok(hermite2(degree, x, y)? / factorial(degree))
        },
        limit,
        tol,
    )
}

/// The same component by rotation projection:
/// g_j(x, y) = (1/3) sum_l omega^(-jl) exp(omega^l x + omega^(2l) y).
/// The weight carries the minus sign of the standard orthogonality
/// projection; the plus-sign variant reproduces only the j = 0 component.
pub fn g_component_projection(j: u32, x: f64, y: f64) -> Result<f64> {
    check_j(j)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..3i64 {
        let weight = cyclic_unit(3, -i64::from(j) * l)?;
        let u = cyclic_unit(3, l)?;
        let u2 = cyclic_unit(3, 2 * l)?;
        acc += weight * (u * x + u2 * y).exp();
    }
    Ok(acc.re / 3.0)
}

/// Closed form of g_0:
/// (1/3) [ (1 + A) cosh(x+y) + (1 - A) sinh(x+y) ],
/// A = 2 e^((x+y)/2) cos(sqrt(3)(x-y)/2); algebraically equal to
/// (1/3) [ e^(x+y) + 2 e^(-(x+y)/2) cos(sqrt(3)(x-y)/2) ].
pub fn g0_closed(x: f64, y: f64) -> f64 {
    let s = x + y;
    let a = 2.0 * (s / 2.0).exp() * (SQRT3_HALF * (x - y)).cos();
    ((1.0 + a) * s.cosh() + (1.0 - a) * s.sinh()) / 3.0
}

/// Multivariate Hermite H_n over p variables, by the recursion
/// H_n^(p)(x_1..x_p) = n! sum_r x_p^r H_(n-pr)^(p-1)(x_1..x_(p-1)) / ((n-pr)! r!)
/// from the base H_n^(1)(x) = x^n. Evaluated as a dynamic program over
/// (variable count, degree) local to the call.
pub fn hermite_multi(n: usize, xs: &[f64]) -> Result<f64> {
    check_degree(n)?;
    if xs.is_empty() {
        return Err(Error::InvalidArgument(
            "hermite_multi needs at least one variable".into(),
        ));
    }
    let mut values: Vec<f64> = (0..=n).map(|d| xs[0].powi(d as i32)).collect();
    for (q, &xq) in xs.iter().enumerate().skip(1) {
        let step = q + 1;
        let next: Vec<f64> = (0..=n)
            .map(|d| {
                (0..=d / step)
                    .map(|r| {
                        factorial(d) / (factorial(d - step * r) * factorial(r))
                            * xq.powi(r as i32)
                            * values[d - step * r]
                    })
                    .sum()
            })
            .collect();
        values = next;
    }
    Ok(values[n])
}

/// Component j mod m of the multivariate Hermite generating value:
/// g_j = sum_n H_(mn+j)^(m-1)(xs) / (mn+j)!, with length(xs) = m - 1.
/// The components resum the exponential of the unit-weighted variables:
/// exp(sum_l omega_m^l x_l) = sum_j omega_m^j g_j.
pub fn g_component_general(m: u32, j: u32, xs: &[f64], tol: f64) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidOrder(i64::from(m)));
    }
    if j >= m {
        return Err(Error::IndexOutOfRange {
            index: i64::from(j),
            order: i64::from(m),
        });
    }
    if xs.len() != (m - 1) as usize {
        return Err(Error::InvalidArgument(format!(
            "expected {} variables for order {m}, got {}",
            m - 1,
            xs.len()
        )));
    }
    check_tol(tol)?;
    let limit = (MAX_DEGREE - j as usize) / m as usize + 1;
    sum_component_series(
        |n| {
            let degree = m as usize * n + j as usize;
            Ok(hermite_multi(degree, xs)? / factorial(degree))
        },
        limit,
        tol,
    )
}
