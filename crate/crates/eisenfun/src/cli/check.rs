//! The identity suite behind `eisenfun check`: every module's invariant
//! grid condensed into named entries with a max residual each. Three
//! entries exercise formulas that are wrong as commonly printed; those are
//! marked expected-fail and count as correct only when their residual
//! really does exceed the tolerance.

use std::io::{self, Write};

use num_complex::Complex64;

use crate::algebra::{cyclic_unit, UnitPower, OMEGA};
use crate::eft::{eft, eft_component, gaussian_eft_closed, QuadratureSpec};
use crate::error::Result;
use crate::fock::{
    a_commutator_check, coherent_component, cubic_eigencheck, hamiltonian_block_deviation,
    hamiltonian_forms, power_eigencheck, pq_commutator_deviation, product_hermiticity_deviation,
};
use crate::phf::{
    fundamental_identity_residual, parity_project, parity_symmetry_residual, phf_add,
    phf_add_symmetric, phf_delta, phf_reflect, phf_series, phf_series_real,
    secant_ode_fourth_form_residual, secant_ode_residual, tangent, tangent_derivative,
    tangent_reflection_residual, PhfComponents, SeriesSpec, TangentIndex,
};
use crate::poly::{
    eta, g0_closed, g_component, g_component_general, g_component_projection, hermite2,
    hermite2_complex, hermite_multi, hybrid_laguerre3, laguerre2, operational_binomial,
    pseudo_hermite3,
};

const TIGHT: f64 = 1e-14;

/// One named residual with its pass threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckEntry {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub expected_fail: bool,
}

impl CheckEntry {
    /// An expected-fail entry counts as correct only when the residual is a
    /// finite number genuinely above the threshold; everything else must sit
    /// at or below it.
    pub fn passed(&self) -> bool {
        if self.expected_fail {
            self.residual.is_finite() && self.residual > self.tolerance
        } else {
            self.residual <= self.tolerance
        }
    }
}

/// Every entry of one run, in a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    /// One line per entry plus a summary tail.
    pub fn write<W: Write>(&self, mut w: W) -> io::Result<()> {
        for entry in &self.entries {
            let status = match (entry.expected_fail, entry.passed()) {
                (false, true) => "PASS         ",
                (true, true) => "EXPECTED-FAIL",
                (_, false) => "FAIL         ",
            };
            let note = if entry.expected_fail {
                if entry.passed() {
                    " (documented; exceeding the threshold is the point)"
                } else {
                    " (unexpectedly inside the threshold)"
                }
            } else {
                ""
            };
            writeln!(
                w,
                "{status} {name}: max residual {residual:.3e}, tolerance {tolerance:.0e}{note}",
                name = entry.name,
                residual = entry.residual,
                tolerance = entry.tolerance,
            )?;
        }
        let failed = self.entries.iter().filter(|e| !e.passed()).count();
        if failed == 0 {
            writeln!(w, "check: {} entries, all correct", self.entries.len())
        } else {
            writeln!(
                w,
                "check: {} entries, {failed} incorrect",
                self.entries.len()
            )
        }
    }
}

/// Inclusive arithmetic grid; `step` must evenly divide the span.
fn frange(min: f64, max: f64, step: f64) -> Vec<f64> {
    let n = ((max - min) / step).round() as usize;
    (0..=n).map(|i| min + i as f64 * step).collect()
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Folds per-point residuals into their maximum; any evaluation error
/// surfaces as an infinite residual, failing the entry loudly.
struct Worst(f64);

impl Worst {
    fn new() -> Self {
        Self(0.0)
    }

    fn push(&mut self, r: Result<f64>) {
        let value = r.unwrap_or(f64::INFINITY);
        if value.is_nan() {
            self.0 = f64::INFINITY;
        } else if value > self.0 {
            self.0 = value;
        }
    }

    fn take(self) -> f64 {
        self.0
    }
}

fn relative(difference: f64, scale: f64) -> f64 {
    difference / (1.0 + scale)
}

// ---- component-function residuals ----

fn exp_partition() -> f64 {
    let mut worst = Worst::new();
    for order in [2u32, 3, 4, 5, 7] {
        for x in frange(-6.0, 6.0, 0.25) {
            worst.push(PhfComponents::new(order, real(x), TIGHT).map(|components| {
                (components.sum() - real(x.exp())).norm() / x.abs().exp()
            }));
        }
    }
    worst.take()
}

fn series_vs_projection() -> f64 {
    let mut worst = Worst::new();
    for order in [2u32, 3, 4, 5, 7] {
        for x in frange(-6.0, 6.0, 0.25) {
            for k in 0..order {
                worst.push(
                    phf_series(order, k, real(x), TIGHT).and_then(|s| {
                        crate::phf::phf_projection(order, k, real(x))
                            .map(|p| (s - p).norm() / (1.0 + x.abs().exp()))
                    }),
                );
            }
        }
    }
    worst.take()
}

fn rotation_symmetry() -> f64 {
    let mut worst = Worst::new();
    for k in 0..3 {
        for x in frange(-4.0, 4.0, 0.25) {
            worst.push(parity_symmetry_residual(3, k, x));
        }
    }
    worst.take()
}

fn delta_is_one() -> f64 {
    let mut worst = Worst::new();
    for x in frange(-4.0, 4.0, 0.25) {
        worst.push(phf_delta(x).map(|d| (d - 1.0).abs()));
    }
    worst.take()
}

fn reflection_formulas() -> f64 {
    let mut worst = Worst::new();
    for k in 0..3 {
        for x in frange(0.0, 4.0, 0.25) {
            worst.push(phf_reflect(k, x).and_then(|reflected| {
                phf_series_real(3, k, -x, TIGHT).map(|direct| (reflected - direct).abs())
            }));
        }
    }
    worst.take()
}

fn fundamental_identity() -> f64 {
    let mut worst = Worst::new();
    for k in 0..3 {
        for x in frange(-4.0, 4.0, 0.25) {
            worst.push(fundamental_identity_residual(k, x));
        }
    }
    worst.take()
}

fn addition_convolution() -> f64 {
    let mut worst = Worst::new();
    for order in [2u32, 3, 4] {
        for x in frange(-3.0, 3.0, 0.75) {
            for y in frange(-3.0, 3.0, 0.75) {
                for k in 0..order {
                    worst.push(phf_add(order, k, real(x), real(y)).and_then(|sum| {
                        phf_series(order, k, real(x + y), TIGHT)
                            .map(|target| relative((sum - target).norm(), target.norm()))
                    }));
                }
            }
        }
    }
    worst.take()
}

fn symmetric_addition_doubled_index() -> f64 {
    let mut worst = Worst::new();
    for m in 0..3u32 {
        for x in frange(-2.0, 2.0, 1.0) {
            for y in frange(-2.0, 2.0, 1.0) {
                worst.push(phf_add_symmetric(m, real(x), real(y)).and_then(|sum| {
                    phf_series(3, (2 * m) % 3, real(x + y), TIGHT)
                        .map(|target| relative((sum - target).norm(), target.norm()))
                }));
            }
        }
    }
    worst.take()
}

fn symmetric_addition_printed_index() -> f64 {
    // the same sum compared against e_m(x+y) instead of e_(2m mod 3)(x+y):
    // correct at m=0 by coincidence, so only m=1,2 are sampled here
    let mut worst = Worst::new();
    for m in 1..3u32 {
        for (x, y) in [(1.0, 0.5), (0.5, -1.0), (2.0, 1.0)] {
            worst.push(phf_add_symmetric(m, real(x), real(y)).and_then(|sum| {
                phf_series(3, m, real(x + y), TIGHT)
                    .map(|target| relative((sum - target).norm(), target.norm()))
            }));
        }
    }
    worst.take()
}

fn derivative_chain() -> f64 {
    let h = 1e-5;
    let mut worst = Worst::new();
    for k in 0..3u32 {
        for x in frange(-2.0, 2.0, 0.25) {
            let fd = phf_series_real(3, k, x + h, TIGHT)
                .and_then(|up| phf_series_real(3, k, x - h, TIGHT).map(|dn| (up - dn) / (2.0 * h)));
            worst.push(fd.and_then(|fd| {
                phf_series_real(3, (k + 2) % 3, x, TIGHT)
                    .map(|target| relative((fd - target).abs(), target.abs()))
            }));
        }
    }
    worst.take()
}

fn component_parity_rotation() -> f64 {
    let specs = [SeriesSpec::exp(), SeriesSpec::cosh(), SeriesSpec::monomial(5)];
    let mut worst = Worst::new();
    for spec in &specs {
        for k in 0..3u32 {
            for x in [-1.5, 0.5, 1.0, 2.0] {
                let weight = cyclic_unit(3, i64::from(k)).expect("order 3 is valid");
                worst.push(parity_project(spec, 3, k, OMEGA * x).and_then(|rotated| {
                    parity_project(spec, 3, k, real(x))
                        .map(|straight| (rotated - weight * straight).norm())
                }));
            }
        }
    }
    worst.take()
}

fn tangent_derivative_fd() -> f64 {
    let h = 1e-5;
    let mut worst = Worst::new();
    for (num, den) in [(1u32, 0u32), (2, 1), (2, 0)] {
        let index = TangentIndex::new(num, den).expect("indices are valid");
        for x in frange(-1.5, 2.0, 0.25) {
            let formula = match tangent_derivative(index, x) {
                Ok(v) => v,
                Err(_) => continue, // pole on the grid: skip the point
            };
            let fd = tangent(index, x + h)
                .and_then(|up| tangent(index, x - h).map(|dn| (up - dn) / (2.0 * h)));
            worst.push(fd.map(|fd| relative((fd - formula).abs(), formula.abs())));
        }
    }
    worst.take()
}

fn tangent_reflection() -> f64 {
    let mut worst = Worst::new();
    for x in [0.5, 1.0, 1.5, 2.0, 3.0] {
        worst.push(tangent_reflection_residual(x));
    }
    worst.take()
}

fn secant_equation_third_order() -> f64 {
    let mut worst = Worst::new();
    for x in frange(-0.5, 2.0, 0.25) {
        worst.push(secant_ode_residual(x, 1e-3));
    }
    worst.take()
}

fn secant_equation_at_origin() -> f64 {
    secant_ode_residual(0.0, 1e-3).unwrap_or(f64::INFINITY)
}

fn secant_equation_printed_fourth_form() -> f64 {
    // h = 4e-3 keeps the fourth-difference rounding noise near 1e-4, well
    // below the order-one residual this form produces
    secant_ode_fourth_form_residual(0.0, 4e-3).unwrap_or(f64::INFINITY)
}

// ---- polynomial residuals ----

fn hermite_generating_function() -> f64 {
    let mut worst = Worst::new();
    for t in [-1.0f64, -0.5, 0.5, 1.0] {
        for x in [-2.0, 0.0, 2.0] {
            for y in [-2.0, 0.0, 2.0] {
                let target = (x * t + y * t * t).exp();
                let mut partial = 0.0;
                let mut weight = 1.0; // t^n / n!
                let mut sum = Ok(());
                for n in 0..=40usize {
                    if n > 0 {
                        weight *= t / n as f64;
                    }
                    match hermite2(n, x, y) {
                        Ok(h) => partial += weight * h,
                        Err(e) => {
                            sum = Err(e);
                            break;
                        }
                    }
                }
                worst.push(sum.map(|()| (partial - target).abs()));
            }
        }
    }
    worst.take()
}

fn pseudo_hermite_resummation() -> f64 {
    let mut worst = Worst::new();
    for n in 0..=12usize {
        for x in [-2.0, -1.0, 1.0, 2.0] {
            for y in [-2.0, -1.0, 1.0, 2.0] {
                let target = (real(x) + OMEGA * y).powu(n as u32);
                let mut recombined = Ok(Complex64::new(0.0, 0.0));
                for j in 0..3u32 {
                    let weight = cyclic_unit(3, i64::from(j)).expect("order 3 is valid");
                    recombined = recombined.and_then(|acc| {
                        pseudo_hermite3(n, x, y, j).map(|component| acc + weight * component)
                    });
                }
                worst.push(
                    recombined.map(|sum| relative((sum - target).norm(), target.norm())),
                );
            }
        }
    }
    worst.take()
}

fn hybrid_laguerre_resummation() -> f64 {
    let mut worst = Worst::new();
    for n in 0..=12usize {
        for y in [-2.0, -1.0, 1.0, 2.0] {
            for x in [-2.0, -1.0, 1.0, 2.0] {
                let target = operational_binomial(n, y, -OMEGA, x);
                let mut recombined = Ok(Complex64::new(0.0, 0.0));
                for j in 0..3u32 {
                    let weight = cyclic_unit(3, i64::from(j)).expect("order 3 is valid");
                    recombined = recombined.and_then(|acc| {
                        hybrid_laguerre3(n, y, x, j).map(|component| acc + weight * component)
                    });
                }
                worst.push(target.and_then(|target| {
                    recombined.map(|sum| relative((sum - target).norm(), target.norm()))
                }));
            }
        }
    }
    worst.take()
}

fn eta_resummation() -> f64 {
    let mut worst = Worst::new();
    for n in 0..=12usize {
        for x in [-2.0, -1.0, 1.0, 2.0] {
            for y in [-2.0, -1.0, 1.0, 2.0] {
                let target = hermite2_complex(n, real(x), OMEGA * y);
                let mut recombined = Ok(Complex64::new(0.0, 0.0));
                for j in 0..3u32 {
                    let weight = cyclic_unit(3, i64::from(j)).expect("order 3 is valid");
                    recombined = recombined
                        .and_then(|acc| eta(n, x, y, j).map(|component| acc + weight * component));
                }
                worst.push(target.and_then(|target| {
                    recombined.map(|sum| relative((sum - target).norm(), target.norm()))
                }));
            }
        }
    }
    worst.take()
}

fn laguerre_operational_consistency() -> f64 {
    let mut worst = Worst::new();
    for n in 0..=10usize {
        for x in [-2.0, -1.0, 1.0, 2.0] {
            for y in [-2.0, -1.0, 1.0, 2.0] {
                worst.push(laguerre2(n, x, y).and_then(|direct| {
                    operational_binomial(n, y, real(-1.0), x)
                        .map(|target| relative((direct - target.re).abs(), target.norm()))
                }));
            }
        }
    }
    worst.take()
}

fn g0_series_vs_closed_form() -> f64 {
    let mut worst = Worst::new();
    for x in frange(-2.0, 2.0, 0.5) {
        for y in frange(-2.0, 2.0, 0.5) {
            worst.push(g_component(0, x, y, TIGHT).map(|series| (series - g0_closed(x, y)).abs()));
        }
    }
    worst.take()
}

fn g_series_vs_minus_sign_projection() -> f64 {
    let mut worst = Worst::new();
    for j in 0..3u32 {
        for x in frange(-2.0, 2.0, 1.0) {
            for y in frange(-2.0, 2.0, 1.0) {
                worst.push(g_component(j, x, y, TIGHT).and_then(|series| {
                    g_component_projection(j, x, y).map(|proj| (series - proj).abs())
                }));
            }
        }
    }
    worst.take()
}

fn multivariate_hermite_pair_consistency() -> f64 {
    let mut worst = Worst::new();
    for n in 0..=15usize {
        for x in [-2.0, -1.0, 1.0, 2.0] {
            for y in [-2.0, -1.0, 1.0, 2.0] {
                worst.push(hermite_multi(n, &[x, y]).and_then(|general| {
                    hermite2(n, x, y)
                        .map(|direct| relative((general - direct).abs(), direct.abs()))
                }));
            }
        }
    }
    worst.take()
}

fn exp_decomposition_general_orders() -> f64 {
    let sets: [(u32, &[f64]); 6] = [
        (2, &[1.0]),
        (2, &[-0.7]),
        (3, &[1.0, 0.5]),
        (3, &[-0.5, 1.2]),
        (4, &[0.8, -0.4, 0.6]),
        (4, &[1.0, 1.0, 1.0]),
    ];
    let mut worst = Worst::new();
    for (m, xs) in sets {
        let mut exponent = Complex64::new(0.0, 0.0);
        for (l, &x) in xs.iter().enumerate() {
            exponent += cyclic_unit(m, (l + 1) as i64).expect("order is valid") * x;
        }
        let target = exponent.exp();
        let mut recombined = Ok(Complex64::new(0.0, 0.0));
        for j in 0..m {
            let weight = cyclic_unit(m, i64::from(j)).expect("order is valid");
            recombined = recombined.and_then(|acc| {
                g_component_general(m, j, xs, TIGHT).map(|component| acc + weight * component)
            });
        }
        worst.push(recombined.map(|sum| relative((sum - target).norm(), target.norm())));
    }
    worst.take()
}

// ---- transform residuals ----

fn gaussian(x: f64) -> f64 {
    (-x * x).exp()
}

fn gaussian_transform_closed_form() -> f64 {
    let quad = QuadratureSpec::default();
    let mut worst = Worst::new();
    for m in 0..3u32 {
        for k in frange(0.0, 2.0, 0.25) {
            worst.push(eft_component(gaussian, m, k, &quad).and_then(|numeric| {
                gaussian_eft_closed(m, k).map(|closed| (numeric - closed).abs())
            }));
        }
    }
    worst.take()
}

fn transform_component_recombination() -> f64 {
    let quad = QuadratureSpec::default();
    let mut worst = Worst::new();
    for k in [0.0, 0.5, 1.0, 1.5, 2.0] {
        let full = eft(gaussian, k, UnitPower::Omega, &quad);
        let mut recombined = Ok(Complex64::new(0.0, 0.0));
        for m in 0..3u32 {
            let weight = cyclic_unit(3, i64::from(m)).expect("order 3 is valid");
            recombined = recombined.and_then(|acc| {
                eft_component(gaussian, m, k, &quad).map(|component| acc + weight * component)
            });
        }
        worst.push(
            full.and_then(|full| recombined.map(|sum| (full - sum).norm())),
        );
    }
    worst.take()
}

fn transform_conjugation() -> f64 {
    let quad = QuadratureSpec::default();
    let mut worst = Worst::new();
    for k in [0.5, 1.25, 2.0] {
        worst.push(eft(gaussian, k, UnitPower::OmegaSq, &quad).and_then(|second| {
            eft(gaussian, k, UnitPower::Omega, &quad)
                .map(|first| (second - first.conj()).norm())
        }));
    }
    worst.take()
}

fn transform_linearity() -> f64 {
    let quad = QuadratureSpec::default();
    let narrow = |x: f64| (-2.0 * x * x).exp();
    let blend = |x: f64| 0.7 * gaussian(x) - 0.3 * narrow(x);
    let mut worst = Worst::new();
    for k in [0.5, 1.5] {
        let combined = eft(blend, k, UnitPower::Omega, &quad);
        let parts = eft(gaussian, k, UnitPower::Omega, &quad).and_then(|a| {
            eft(narrow, k, UnitPower::Omega, &quad).map(|b| 0.7 * a - 0.3 * b)
        });
        worst.push(combined.and_then(|c| parts.map(|p| (c - p).norm())));
    }
    worst.take()
}

// ---- operator residuals ----

fn hamiltonian_self_adjointness() -> f64 {
    match hamiltonian_forms(12) {
        Ok((h1, _)) => {
            let diff = &h1 - h1.adjoint();
            diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
        }
        Err(_) => f64::INFINITY,
    }
}

fn coherent_component_norms() -> f64 {
    let alphas = [
        real(0.25),
        real(0.5),
        real(0.75),
        real(1.0),
        real(1.2),
        Complex64::new(0.5, 0.5),
        Complex64::new(0.3, -0.9),
    ];
    let mut worst = Worst::new();
    for &alpha in &alphas {
        for j in 0..3u32 {
            worst.push(coherent_component(alpha, j, 60).and_then(|state| {
                phf_series_real(3, j, alpha.norm_sqr(), TIGHT)
                    .map(|target| (state.norm_squared() - target).abs())
            }));
        }
    }
    worst.take()
}

fn cubic_eigenrelation() -> f64 {
    let alphas = [real(0.5), real(1.0), Complex64::new(0.5, 0.5)];
    let mut worst = Worst::new();
    for &alpha in &alphas {
        for j in 0..3u32 {
            worst.push(cubic_eigencheck(alpha, j, 60));
        }
    }
    worst.take()
}

fn power_eigenrelation_component_exponent() -> f64 {
    // the printed claim applies the ladder operator j times to the j-th
    // component; the supports of a^j |alpha_j> and |alpha_j> are disjoint
    // for j = 1, 2, so the residual is order one
    let mut worst = Worst::new();
    for j in [1u32, 2] {
        worst.push(power_eigencheck(real(0.5), j, j, 40));
    }
    worst.take()
}

/// Runs the full suite. `tol_override` replaces the threshold of every
/// standard entry (the expected-fail demonstrations keep their documented
/// thresholds, since loosening or tightening them would change what the
/// demonstration means).
pub fn run_check(tol_override: Option<f64>) -> CheckReport {
    let standard = |name: &str, tolerance: f64, residual: f64| CheckEntry {
        name: name.to_string(),
        residual,
        tolerance: tol_override.unwrap_or(tolerance),
        expected_fail: false,
    };
    let demonstration = |name: &str, tolerance: f64, residual: f64| CheckEntry {
        name: name.to_string(),
        residual,
        tolerance,
        expected_fail: true,
    };

    let entries = vec![
        standard("exp partition across components (orders 2,3,4,5,7)", 1e-12, exp_partition()),
        standard("series vs unit-rotation projection", 1e-12, series_vs_projection()),
        standard("component symmetry under argument rotation", 1e-12, rotation_symmetry()),
        standard("cubic determinant equals one", 1e-10, delta_is_one()),
        standard("reflection formulas vs series at -x", 1e-10, reflection_formulas()),
        standard("fundamental product identity", 1e-12, fundamental_identity()),
        standard("addition theorem, residue convolution", 1e-12, addition_convolution()),
        standard(
            "symmetric-index addition resums to the doubled index",
            1e-12,
            symmetric_addition_doubled_index(),
        ),
        standard("derivative chain via finite differences", 1e-7, derivative_chain()),
        standard("parity components rotate by unit powers", 1e-11, component_parity_rotation()),
        standard("tangent derivative vs finite differences", 1e-6, tangent_derivative_fd()),
        standard("tangent reflection formula", 1e-10, tangent_reflection()),
        standard("secant equation, third-order form", 1e-5, secant_equation_third_order()),
        standard("secant equation at the origin", 1e-6, secant_equation_at_origin()),
        standard("hermite generating function", 1e-10, hermite_generating_function()),
        standard("pseudo-hermite resummation", 1e-10, pseudo_hermite_resummation()),
        standard("hybrid laguerre resummation", 1e-10, hybrid_laguerre_resummation()),
        standard("eta resummation", 1e-10, eta_resummation()),
        standard(
            "laguerre vs operational binomial",
            1e-12,
            laguerre_operational_consistency(),
        ),
        standard("generating components vs closed form", 1e-10, g0_series_vs_closed_form()),
        standard(
            "generating components vs minus-sign projection",
            1e-10,
            g_series_vs_minus_sign_projection(),
        ),
        standard(
            "multivariate hermite matches the two-variable form",
            1e-12,
            multivariate_hermite_pair_consistency(),
        ),
        standard(
            "exp decomposition at general orders",
            1e-10,
            exp_decomposition_general_orders(),
        ),
        standard("gaussian transform closed form", 1e-8, gaussian_transform_closed_form()),
        standard(
            "transform component recombination",
            1e-9,
            transform_component_recombination(),
        ),
        standard("transform conjugation for real input", 1e-10, transform_conjugation()),
        standard("transform linearity", 1e-10, transform_linearity()),
        standard(
            "quadrature commutator on the interior block",
            1e-12,
            pq_commutator_deviation(12).unwrap_or(f64::INFINITY),
        ),
        standard(
            "rotated pair commutator on the interior block",
            1e-12,
            a_commutator_check(12).unwrap_or(f64::INFINITY),
        ),
        standard(
            "hamiltonian factorization on the interior block",
            1e-12,
            hamiltonian_block_deviation(12).unwrap_or(f64::INFINITY),
        ),
        standard("hamiltonian self-adjointness", 1e-13, hamiltonian_self_adjointness()),
        standard(
            "rotated product is self-adjoint (the factors are adjoints)",
            1e-13,
            product_hermiticity_deviation(12).unwrap_or(f64::INFINITY),
        ),
        standard("coherent component norms", 1e-10, coherent_component_norms()),
        standard("cubic eigenrelation of coherent components", 1e-10, cubic_eigenrelation()),
        demonstration(
            "symmetric-index addition, printed index (m=1,2)",
            1e-12,
            symmetric_addition_printed_index(),
        ),
        demonstration(
            "secant equation, printed fourth-derivative form at the origin",
            1e-5,
            secant_equation_printed_fourth_form(),
        ),
        demonstration(
            "power eigenrelation with component exponent (j=1,2)",
            1e-10,
            power_eigenrelation_component_exponent(),
        ),
    ];
    CheckReport { entries }
}
