//! Roots of unity and the quadratic norm form attached to the cube root.
//!
//! The primitive cube root omega = exp(2*pi*i/3) = (-1 + i sqrt 3)/2 sits at
//! the center of everything else in this crate: it satisfies
//! omega^2 + omega + 1 = 0, its powers split the exponential into three
//! components, and |a + omega b|^2 = a^2 - a b + b^2.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// sqrt(3)/2 to full f64 precision.
pub const SQRT3_HALF: f64 = 0.866_025_403_784_438_6;

/// Primitive cube root of unity, exp(2*pi*i/3).
pub const OMEGA: Complex64 = Complex64::new(-0.5, SQRT3_HALF);

/// Its square, exp(4*pi*i/3) = conj(omega).
pub const OMEGA_SQ: Complex64 = Complex64::new(-0.5, -SQRT3_HALF);

/// Selects which primitive cube-root power multiplies an argument or a
/// transform kernel: omega itself or its square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitPower {
    Omega,
    OmegaSq,
}

impl UnitPower {
    pub fn value(self) -> Complex64 {
        match self {
            UnitPower::Omega => OMEGA,
            UnitPower::OmegaSq => OMEGA_SQ,
        }
    }
}

/// A root of unity omega_m^k, stored as (order, exponent mod order).
///
/// Keeping the exponent symbolic lets power arithmetic stay on indices, so
/// chained products never accumulate rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicUnit {
    order: u32,
    power: u32,
}

impl CyclicUnit {
    /// Reduces `power` into 0..order. Fails for `order < 2`.
    pub fn new(order: u32, power: i64) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(i64::from(order)));
        }
        let power = power.rem_euclid(i64::from(order)) as u32;
        Ok(Self { order, power })
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn power(self) -> u32 {
        self.power
    }

    /// The unit raised to an integer exponent, reduced on the index.
    #[must_use]
    pub fn pow(self, exponent: i64) -> Self {
        let p = (i64::from(self.power) * exponent).rem_euclid(i64::from(self.order));
        Self {
            order: self.order,
            power: p as u32,
        }
    }

    /// exp(2*pi*i*power/order). The order-3 values are pinned to the exact
    /// pair (-1/2, +-sqrt(3)/2); all others go through sin/cos of the
    /// reduced angle.
    pub fn value(self) -> Complex64 {
        match (self.order, self.power) {
            (_, 0) => Complex64::new(1.0, 0.0),
            (3, 1) => OMEGA,
            (3, 2) => OMEGA_SQ,
            (o, p) => {
                let angle = 2.0 * std::f64::consts::PI * f64::from(p) / f64::from(o);
                let (s, c) = angle.sin_cos();
                Complex64::new(c, s)
            }
        }
    }
}

/// exp(2*pi*i*k/m) for any integer k; k is reduced mod m.
pub fn cyclic_unit(order: u32, power: i64) -> Result<Complex64> {
    CyclicUnit::new(order, power).map(CyclicUnit::value)
}

/// The quadratic form a^2 - a b + b^2, equal to (a + omega b)(a + omega^2 b).
///
/// Every call cross-checks the direct form against the factored product;
/// the two must agree to 1e-12 relative.
pub fn eisenstein_norm(a: f64, b: f64) -> f64 {
    let direct = a * a - a * b + b * b;
    let product = (Complex64::new(a, 0.0) + OMEGA * b) * (Complex64::new(a, 0.0) + OMEGA_SQ * b);
    let drift = (product - direct).norm();
    assert!(
        drift < 1e-12 * (1.0 + direct.abs()),
        "norm factorization drifted: {drift:e}"
    );
    direct
}

/// |(a + b)(a + omega b)(a + omega^2 b) - (a^3 + b^3)| as a complex modulus,
/// so a stray imaginary part in the product counts toward the residual.
pub fn cubic_sum_residual(a: f64, b: f64) -> f64 {
    let a_c = Complex64::new(a, 0.0);
    let product = (a_c + b) * (a_c + OMEGA * b) * (a_c + OMEGA_SQ * b);
    (product - (a.powi(3) + b.powi(3))).norm()
}

/// prod_{r=0}^{n-1} (a + omega_n^r b): collapses to a^n + b^n for odd n and
/// a^n - b^n for even n, since negating the odd-order roots permutes them
/// onto the roots of z^n = -1.
pub fn odd_power_product(a: f64, b: f64, n: u32) -> Result<Complex64> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "power product needs at least one factor".into(),
        ));
    }
    if n == 1 {
        return Ok(Complex64::new(a + b, 0.0));
    }
    let unit = CyclicUnit::new(n, 1)?;
    let mut product = Complex64::new(1.0, 0.0);
    for r in 0..n {
        product *= unit.pow(i64::from(r)).value() * b + a;
    }
    if product.re.is_finite() && product.im.is_finite() {
        Ok(product)
    } else {
        Err(Error::NonFinite)
    }
}
