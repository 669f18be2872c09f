//! Truncated ladder-operator checks. Everything is finite-dimensional dense
//! complex arithmetic: identities that hold exactly in infinite dimension
//! hold on the interior block of the truncation and degrade only in the
//! last rows and columns that the cut corrupts.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::algebra::{OMEGA, OMEGA_SQ};
use crate::error::{Error, Result};
use crate::phf::check_component;

pub type OperatorMatrix = DMatrix<Complex64>;
pub type FockState = DVector<Complex64>;

/// Largest truncation dimension accepted.
pub const MAX_DIM: usize = 256;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn check_dim(dim: usize, min: usize) -> Result<()> {
    if dim < min {
        return Err(Error::DimensionTooSmall { min, got: dim });
    }
    if dim > MAX_DIM {
        return Err(Error::InvalidArgument(format!(
            "dimension {dim} exceeds the cap {MAX_DIM}"
        )));
    }
    Ok(())
}

/// Largest entry modulus.
fn max_abs(m: &OperatorMatrix) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Largest deviation of the top-left `size` x `size` block of `m` from
/// `scalar` times the identity.
fn block_deviation_from_scalar(m: &OperatorMatrix, size: usize, scalar: Complex64) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..size {
        for j in 0..size {
            let expected = if i == j {
                scalar
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((m[(i, j)] - expected).norm());
        }
    }
    worst
}

/// Annihilation and creation matrices on dim basis states: a|n> =
/// sqrt(n)|n-1>, and the adjoint.
pub fn ladder(dim: usize) -> Result<(OperatorMatrix, OperatorMatrix)> {
    check_dim(dim, 4)?;
    let mut a = OperatorMatrix::zeros(dim, dim);
    for i in 1..dim {
        a[(i - 1, i)] = Complex64::new((i as f64).sqrt(), 0.0);
    }
    let adag = a.adjoint();
    Ok((a, adag))
}

/// Position-like and momentum-like quadratures q = (a + a^+)/sqrt(2),
/// p = (a - a^+)/(i sqrt(2)); both self-adjoint, with [p, q] = -i on the
/// top-left (dim-1) block.
pub fn quadratures(dim: usize) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let (a, adag) = ladder(dim)?;
    let q = (&a + &adag) * Complex64::new(FRAC_1_SQRT_2, 0.0);
    // 1/(i sqrt(2)) = -i/sqrt(2)
    let p = (&a - &adag) * Complex64::new(0.0, -FRAC_1_SQRT_2);
    Ok((q, p))
}

/// Max deviation of [p, q] from -i times the identity over the top-left
/// (dim-1) block; the truncation touches only the last diagonal entry.
pub fn pq_commutator_deviation(dim: usize) -> Result<f64> {
    let (q, p) = quadratures(dim)?;
    let comm = &p * &q - &q * &p;
    Ok(block_deviation_from_scalar(
        &comm,
        dim - 1,
        Complex64::new(0.0, -1.0),
    ))
}

/// The unit-rotated pair A = (q + omega p)/sqrt(2) and
/// A_c = (q + omega^2 p)/sqrt(2). Since q and p are self-adjoint and
/// conjugating omega yields omega^2, A_c is exactly the adjoint of A at
/// every truncation.
pub fn rotated_pair(dim: usize) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let (q, p) = quadratures(dim)?;
    let scale = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let a_rot = (&q + &p * OMEGA) * scale;
    let a_c = (&q + &p * OMEGA_SQ) * scale;
    Ok((a_rot, a_c))
}

/// The constant (i/4)(2 omega + 1) = -sqrt(3)/4 completing the factored
/// form of the oscillator Hamiltonian.
pub fn hamiltonian_scalar() -> Complex64 {
    Complex64::new(0.0, 0.25) * (2.0 * OMEGA + 1.0)
}

/// The oscillator Hamiltonian two ways:
/// H1 = p^2/2 - (pq + qp)/4 + q^2/2 and H2 = A A_c + (i/4)(2 omega + 1) I.
/// They agree on the top-left (dim-2) block.
pub fn hamiltonian_forms(dim: usize) -> Result<(OperatorMatrix, OperatorMatrix)> {
    check_dim(dim, 6)?;
    let (q, p) = quadratures(dim)?;
    let half = Complex64::new(0.5, 0.0);
    let quarter = Complex64::new(0.25, 0.0);
    let h1 = &p * &p * half - (&p * &q + &q * &p) * quarter + &q * &q * half;
    let (a_rot, a_c) = rotated_pair(dim)?;
    let h2 = &a_rot * &a_c + OperatorMatrix::identity(dim, dim) * hamiltonian_scalar();
    Ok((h1, h2))
}

/// Max entry of |H1 - H2| over the top-left (dim-2) block.
pub fn hamiltonian_block_deviation(dim: usize) -> Result<f64> {
    let (h1, h2) = hamiltonian_forms(dim)?;
    let diff = &h1 - &h2;
    Ok(max_abs(&diff.view((0, 0), (dim - 2, dim - 2)).into_owned()))
}

/// Max deviation of [A, A_c] from (sqrt(3)/2) times the identity over the
/// top-left (dim-2) block.
pub fn a_commutator_check(dim: usize) -> Result<f64> {
    check_dim(dim, 6)?;
    let (a_rot, a_c) = rotated_pair(dim)?;
    let comm = &a_rot * &a_c - &a_c * &a_rot;
    // -(i/2)(2 omega + 1) = sqrt(3)/2
    let expected = Complex64::new(0.0, -0.5) * (2.0 * OMEGA + 1.0);
    Ok(block_deviation_from_scalar(&comm, dim - 2, expected))
}

/// Sup-norm of A A_c minus its own adjoint. A_c = A^+ makes the product
/// self-adjoint at every truncation, so this is roundoff-sized; it is
/// exposed so the check runner can report the measured value.
pub fn product_hermiticity_deviation(dim: usize) -> Result<f64> {
    check_dim(dim, 6)?;
    let (a_rot, a_c) = rotated_pair(dim)?;
    let product = &a_rot * &a_c;
    let diff = &product - &product.adjoint();
    Ok(max_abs(&diff))
}

/// The j-th cyclic component of the coherent expansion: amplitudes
/// c_(3n+j) = alpha^(3n+j)/sqrt((3n+j)!) and zeros elsewhere. The squared
/// norm equals e_j(|alpha|^2) up to the truncation tail. No normalization
/// is applied: summing omega^j-weighted components over j reproduces the
/// amplitudes of exp(omega alpha a^+)|0> directly.
pub fn coherent_component(alpha: Complex64, j: u32, dim: usize) -> Result<FockState> {
    check_component(3, j)?;
    check_dim(dim, 12)?;
    if alpha.norm() > 2.0 {
        return Err(Error::InvalidArgument(format!(
            "|alpha| must be at most 2, got {}",
            alpha.norm()
        )));
    }
    let mut state = FockState::zeros(dim);
    let mut index = j as usize;
    // alpha^j / sqrt(j!) for j <= 2
    let mut amplitude = alpha.powu(j) / (1..=j as u64).product::<u64>() as f64;
    if j == 2 {
        amplitude *= 2f64.sqrt(); // 1/sqrt(2!) corrects the 1/2! above
    }
    while index < dim {
        state[index] = amplitude;
        let cubed = alpha.powu(3);
        let denom =
            (((index + 1) * (index + 2) * (index + 3)) as f64).sqrt();
        amplitude = amplitude * cubed / denom;
        index += 3;
    }
    Ok(state)
}

/// Relative eigenrelation residual
/// ||a^exponent psi - alpha^exponent psi|| / ||psi|| with the top
/// `exponent` entries of the difference zeroed (they are pure truncation
/// loss). For exponent 3 on component j the relation is exact and the
/// residual is roundoff; exponents 1 and 2 shift the support class, so the
/// two sides are orthogonal and the residual is order |alpha|.
pub fn power_eigencheck(alpha: Complex64, j: u32, exponent: u32, dim: usize) -> Result<f64> {
    if exponent == 0 || exponent as usize >= dim {
        return Err(Error::InvalidArgument(format!(
            "exponent must be in 1..dim, got {exponent}"
        )));
    }
    let state = coherent_component(alpha, j, dim)?;
    let (a, _) = ladder(dim)?;
    let mut lowered = state.clone();
    for _ in 0..exponent {
        lowered = &a * lowered;
    }
    let mut difference = lowered - state.clone() * alpha.powu(exponent);
    for i in dim - exponent as usize..dim {
        difference[i] = Complex64::new(0.0, 0.0);
    }
    let norm = state.norm();
    if norm == 0.0 {
        return Ok(0.0);
    }
    Ok(difference.norm() / norm)
}

/// [`power_eigencheck`] at the exponent where the relation holds: the
/// cyclic components are eigenvectors of a^3 with eigenvalue alpha^3.
pub fn cubic_eigencheck(alpha: Complex64, j: u32, dim: usize) -> Result<f64> {
    power_eigencheck(alpha, j, 3, dim)
}
