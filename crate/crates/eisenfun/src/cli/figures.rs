//! Grid evaluation behind the command line: the five figure datasets,
//! component tables, transform tables, and parity decompositions. Every
//! builder returns a [`Table`]; per-point evaluation failures (poles,
//! non-decaying transform integrands) become missing cells, while
//! configuration mistakes fail the whole call.

use num_complex::Complex64;

use crate::algebra::UnitPower;
use crate::eft::{eft, eft_component, QuadratureSpec};
use crate::error::{Error, Result};
use crate::phf::{
    check_component, exp_unit_closed, parity_project, phf_reflect, phf_series_real, secant,
    tangent, SeriesSpec, TangentIndex, DEFAULT_TOL,
};

use super::output::Table;

/// Grid length used when the caller does not override it.
pub const DEFAULT_STEPS: usize = 121;

/// Default grid length for transform tables, where each row costs several
/// adaptive quadratures.
pub const DEFAULT_EFT_STEPS: usize = 41;

/// Endpoint-inclusive uniform grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    min: f64,
    max: f64,
    steps: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "grid bounds must be finite, got [{min}, {max}]"
            )));
        }
        if min >= max {
            return Err(Error::InvalidArgument(format!(
                "grid needs min < max, got [{min}, {max}]"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 2 steps, got {steps}"
            )));
        }
        Ok(Self { min, max, steps })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// The grid points, first exactly `min`, last `min + (max - min)`.
    /// The parameter i/(steps-1) is computed first so that symmetric grids
    /// hit interior anchors (0.5 of the span, 0.375 of the span, ...)
    /// exactly.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let span = self.max - self.min;
        let denom = (self.steps - 1) as f64;
        (0..self.steps).map(move |i| self.min + (i as f64 / denom) * span)
    }
}

/// Integrable test functions for the transform front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinFn {
    /// e^(-x^2)
    Gaussian,
    /// e^(-|x|); only a strip of k values keeps the weighted integrand
    /// decaying, so wide k grids carry empty cells at the edges.
    ExpDecay,
}

impl BuiltinFn {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "gaussian" => Ok(Self::Gaussian),
            "expdecay" => Ok(Self::ExpDecay),
            other => Err(Error::InvalidArgument(format!(
                "unknown builtin function '{other}' (expected gaussian or expdecay)"
            ))),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Self::Gaussian => (-x * x).exp(),
            Self::ExpDecay => (-x.abs()).exp(),
        }
    }

    /// Quadrature window sized to the function's decay rate: the slow
    /// exponential tail needs a far wider window than the Gaussian before
    /// the edge probes accept it.
    pub fn quadrature(&self) -> QuadratureSpec {
        match self {
            Self::Gaussian => QuadratureSpec::default(),
            Self::ExpDecay => {
                QuadratureSpec::new(60.0, 1e-10, 24).expect("fixed parameters are in bounds")
            }
        }
    }
}

/// Builtin Taylor series for the decomposition front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinSeries {
    Exp,
    Cosh,
}

impl BuiltinSeries {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "exp" => Ok(Self::Exp),
            "cosh" => Ok(Self::Cosh),
            other => Err(Error::InvalidArgument(format!(
                "unknown builtin series '{other}' (expected exp or cosh)"
            ))),
        }
    }

    pub fn spec(&self) -> SeriesSpec {
        match self {
            Self::Exp => SeriesSpec::exp(),
            Self::Cosh => SeriesSpec::cosh(),
        }
    }
}

/// Default x (or k) range of each figure.
pub fn figure_default_range(id: u8) -> Result<(f64, f64)> {
    match id {
        1 => Ok((0.0, 6.0)),
        2 => Ok((-3.0, 3.0)),
        3 => Ok((-4.0, 4.0)),
        4 => Ok((-2.0, 2.0)),
        5 => Ok((-3.0, 5.0)),
        other => Err(Error::InvalidArgument(format!(
            "figure id must be 1..=5, got {other}"
        ))),
    }
}

fn default_grid(id: u8) -> Result<GridSpec> {
    let (min, max) = figure_default_range(id)?;
    GridSpec::new(min, max, DEFAULT_STEPS)
}

/// Dataset behind figure `id`, on `grid` or the figure's default range.
///
/// 1. x, re1, im1, re2, im2, modulus: the two rotated exponentials
///    e^(wx), e^(w^2 x) and their common modulus e^(-x/2), on [0, 6].
/// 2. x, e0, e1, e2, e0r, e1r, e2r: the order-3 components and their
///    reflections e_k(-x) computed from the values at +x, on [-3, 3].
/// 3. k, re, im: first-variant transform of the Gaussian, on [-4, 4].
/// 4. x, t10, t21, t20: the three tangent ratios on [-2, 2]; rows crossing
///    a denominator zero leave that cell empty.
/// 5. x, eisen_sec, sech: the order-3 secant 1/e_0 next to the classical
///    1/cosh, on [-3, 5].
pub fn figure(id: u8, grid: Option<GridSpec>) -> Result<Table> {
    let grid = match grid {
        Some(g) => g,
        None => default_grid(id)?,
    };
    match id {
        1 => {
            let mut table = Table::new(str_columns(&["x", "re1", "im1", "re2", "im2", "modulus"]));
            for x in grid.points() {
                let z1 = exp_unit_closed(x, UnitPower::Omega);
                let z2 = exp_unit_closed(x, UnitPower::OmegaSq);
                table.push_row(vec![
                    Some(x),
                    Some(z1.re),
                    Some(z1.im),
                    Some(z2.re),
                    Some(z2.im),
                    Some(z1.norm()),
                ]);
            }
            Ok(table)
        }
        2 => {
            let mut table = Table::new(str_columns(&["x", "e0", "e1", "e2", "e0r", "e1r", "e2r"]));
            for x in grid.points() {
                let mut row = vec![Some(x)];
                for k in 0..3 {
                    row.push(point(phf_series_real(3, k, x, DEFAULT_TOL)));
                }
                for k in 0..3 {
                    row.push(point(phf_reflect(k, x)));
                }
                table.push_row(row);
            }
            Ok(table)
        }
        3 => {
            let quad = BuiltinFn::Gaussian.quadrature();
            let mut table = Table::new(str_columns(&["k", "re", "im"]));
            for k in grid.points() {
                let value = eft(|x| BuiltinFn::Gaussian.eval(x), k, UnitPower::Omega, &quad);
                let (re, im) = split(value);
                table.push_row(vec![Some(k), re, im]);
            }
            Ok(table)
        }
        4 => {
            let pairs = [(1, 0), (2, 1), (2, 0)];
            let mut table = Table::new(str_columns(&["x", "t10", "t21", "t20"]));
            for x in grid.points() {
                let mut row = vec![Some(x)];
                for (num, den) in pairs {
                    let index = TangentIndex::new(num, den)?;
                    row.push(point(tangent(index, x)));
                }
                table.push_row(row);
            }
            Ok(table)
        }
        5 => {
            let mut table = Table::new(str_columns(&["x", "eisen_sec", "sech"]));
            for x in grid.points() {
                table.push_row(vec![Some(x), point(secant(x)), Some(1.0 / x.cosh())]);
            }
            Ok(table)
        }
        other => Err(Error::InvalidArgument(format!(
            "figure id must be 1..=5, got {other}"
        ))),
    }
}

/// x grid with all components e_0..e_(m-1) at component order `order`.
pub fn phf_table(order: u32, grid: GridSpec, tol: f64) -> Result<Table> {
    check_component(order, 0)?;
    phf_series_real(order, 0, 0.0, tol)?; // rejects a bad tolerance up front
    let mut columns = vec!["x".to_string()];
    columns.extend((0..order).map(|k| format!("e{k}")));
    let mut table = Table::new(columns);
    for x in grid.points() {
        let mut row = vec![Some(x)];
        for k in 0..order {
            row.push(point(phf_series_real(order, k, x, tol)));
        }
        table.push_row(row);
    }
    Ok(table)
}

/// k grid with both transform variants of a builtin function plus its three
/// component transforms. Cells where the weighted integrand does not decay
/// inside the window stay empty.
pub fn eft_table(builtin: BuiltinFn, grid: GridSpec) -> Result<Table> {
    let quad = builtin.quadrature();
    let f = |x: f64| builtin.eval(x);
    let mut table = Table::new(str_columns(&[
        "k", "re1", "im1", "re2", "im2", "c0", "c1", "c2",
    ]));
    for k in grid.points() {
        let (re1, im1) = split(eft(f, k, UnitPower::Omega, &quad));
        let (re2, im2) = split(eft(f, k, UnitPower::OmegaSq, &quad));
        let mut row = vec![Some(k), re1, im1, re2, im2];
        for m in 0..3 {
            row.push(point(eft_component(f, m, k, &quad)));
        }
        table.push_row(row);
    }
    Ok(table)
}

/// x grid with the order-m parity components f_0..f_(m-1) of a builtin
/// series. Components of a real series at real x are exactly real.
pub fn decompose_table(series: BuiltinSeries, order: u32, grid: GridSpec) -> Result<Table> {
    check_component(order, 0)?;
    let spec = series.spec();
    let mut columns = vec!["x".to_string()];
    columns.extend((0..order).map(|j| format!("f{j}")));
    let mut table = Table::new(columns);
    for x in grid.points() {
        let mut row = vec![Some(x)];
        for j in 0..order {
            let value = parity_project(&spec, order, j, Complex64::new(x, 0.0));
            row.push(point(value.map(|z| z.re)));
        }
        table.push_row(row);
    }
    Ok(table)
}

fn str_columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn point(value: Result<f64>) -> Option<f64> {
    value.ok().filter(|v| v.is_finite())
}

fn split(value: Result<Complex64>) -> (Option<f64>, Option<f64>) {
    match value {
        Ok(z) if z.re.is_finite() && z.im.is_finite() => (Some(z.re), Some(z.im)),
        _ => (None, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 1.0, 1).is_err());
        assert!(GridSpec::new(1.0, 1.0, 10).is_err());
        assert!(GridSpec::new(2.0, 1.0, 10).is_err());
        assert!(GridSpec::new(f64::NAN, 1.0, 10).is_err());
        assert!(GridSpec::new(0.0, f64::INFINITY, 10).is_err());
    }

    #[test]
    fn grid_endpoints_and_anchors() {
        let grid = GridSpec::new(-2.0, 2.0, 121).unwrap();
        let points: Vec<f64> = grid.points().collect();
        assert_eq!(points.len(), 121);
        assert_eq!(points[0], -2.0);
        assert_eq!(points[120], 2.0);
        assert_eq!(points[60], 0.0); // midpoint of a symmetric grid is exact
        let grid = GridSpec::new(-3.0, 5.0, 121).unwrap();
        let points: Vec<f64> = grid.points().collect();
        assert_eq!(points[45], 0.0); // 45/120 = 0.375 and 0.375 * 8 = 3 are exact
    }

    #[test]
    fn figure_ids_are_bounded() {
        assert!(figure(0, None).is_err());
        assert!(figure(6, None).is_err());
    }

    #[test]
    fn figure1_starts_at_unity_and_modulus_decreases() {
        let table = figure(1, None).unwrap();
        assert_eq!(table.columns(), &["x", "re1", "im1", "re2", "im2", "modulus"]);
        assert_eq!(table.cell(0, "re1"), Some(1.0));
        assert_eq!(table.cell(0, "im1"), Some(0.0));
        assert_eq!(table.cell(0, "re2"), Some(1.0));
        assert_eq!(table.cell(0, "im2"), Some(0.0));
        let moduli: Vec<f64> = (0..table.rows().len())
            .map(|i| table.cell(i, "modulus").unwrap())
            .collect();
        assert!(moduli.windows(2).all(|w| w[1] < w[0]));
        // the two curves are complex conjugates of one another
        for i in [0, 30, 60, 90, 120] {
            assert_eq!(table.cell(i, "re1"), table.cell(i, "re2"));
            assert_eq!(table.cell(i, "im1").map(|v| -v), table.cell(i, "im2"));
        }
    }

    #[test]
    fn figure2_reflection_columns_match_the_series_at_minus_x() {
        let table = figure(2, None).unwrap();
        let rows = table.rows().len();
        for i in [0, rows / 3, rows / 2, rows - 1] {
            let x = table.cell(i, "x").unwrap();
            for (k, name) in [(0, "e0r"), (1, "e1r"), (2, "e2r")] {
                let direct = phf_series_real(3, k, -x, DEFAULT_TOL).unwrap();
                assert_relative_eq!(
                    table.cell(i, name).unwrap(),
                    direct,
                    max_relative = 1e-9,
                    epsilon = 1e-10
                );
            }
        }
    }

    #[test]
    fn figure3_is_even_in_k() {
        let grid = GridSpec::new(-2.0, 2.0, 9).unwrap();
        let table = figure(3, Some(grid)).unwrap();
        // the transform of an even function depends on k only through k^2,
        // so both columns are even; k=0 gives the plain integral 1/sqrt(2)
        assert_relative_eq!(
            table.cell(4, "re").unwrap(),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-9
        );
        assert_relative_eq!(table.cell(4, "im").unwrap(), 0.0, epsilon = 1e-9);
        for i in 0..4 {
            let j = 8 - i;
            assert_relative_eq!(
                table.cell(i, "re").unwrap(),
                table.cell(j, "re").unwrap(),
                epsilon = 1e-9
            );
            assert_relative_eq!(
                table.cell(i, "im").unwrap(),
                table.cell(j, "im").unwrap(),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn figure4_marks_the_tangent_pole_empty() {
        let table = figure(4, None).unwrap();
        let zero_row = table
            .rows()
            .iter()
            .position(|row| row[0] == Some(0.0))
            .expect("x = 0 lies on the default grid");
        assert_eq!(table.cell(zero_row, "t21"), None); // e_1(0) = 0
        assert_eq!(table.cell(zero_row, "t10"), Some(0.0));
        assert_eq!(table.cell(zero_row, "t20"), Some(0.0));
    }

    #[test]
    fn figure5_secants_agree_at_zero_and_separate() {
        let table = figure(5, None).unwrap();
        let rows = table.rows().len();
        let zero_row = (0..rows)
            .find(|&i| table.cell(i, "x") == Some(0.0))
            .unwrap();
        assert_eq!(table.cell(zero_row, "eisen_sec"), Some(1.0));
        assert_eq!(table.cell(zero_row, "sech"), Some(1.0));
        let last = rows - 1;
        assert_eq!(table.cell(last, "x"), Some(5.0));
        assert!(table.cell(last, "eisen_sec").unwrap() < 0.05);
    }

    #[test]
    fn phf_table_columns_scale_with_order() {
        let grid = GridSpec::new(0.0, 2.0, 5).unwrap();
        let table = phf_table(5, grid, DEFAULT_TOL).unwrap();
        assert_eq!(table.columns().len(), 6);
        assert_eq!(table.cell(0, "e0"), Some(1.0));
        assert_eq!(table.cell(0, "e3"), Some(0.0));
        let table = phf_table(3, GridSpec::new(1.0, 2.0, 2).unwrap(), DEFAULT_TOL).unwrap();
        assert_relative_eq!(
            table.cell(0, "e0").unwrap(),
            1.1680583133759185,
            max_relative = 1e-14
        );
        assert!(phf_table(1, grid, DEFAULT_TOL).is_err());
    }

    #[test]
    fn builtin_names_parse() {
        assert_eq!(BuiltinFn::parse("gaussian").unwrap(), BuiltinFn::Gaussian);
        assert_eq!(BuiltinFn::parse("expdecay").unwrap(), BuiltinFn::ExpDecay);
        assert!(BuiltinFn::parse("sinc").is_err());
        assert_eq!(BuiltinSeries::parse("exp").unwrap(), BuiltinSeries::Exp);
        assert_eq!(BuiltinSeries::parse("cosh").unwrap(), BuiltinSeries::Cosh);
        assert!(BuiltinSeries::parse("tan").is_err());
    }

    #[test]
    fn eft_table_recombines_and_marks_missing_cells() {
        let grid = GridSpec::new(0.0, 2.0, 3).unwrap();
        let table = eft_table(BuiltinFn::Gaussian, grid).unwrap();
        assert_eq!(
            table.columns(),
            &["k", "re1", "im1", "re2", "im2", "c0", "c1", "c2"]
        );
        // k = 0: no kernel, both variants reduce to the plain integral
        assert_relative_eq!(
            table.cell(0, "re1").unwrap(),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-9
        );
        assert_relative_eq!(table.cell(0, "im1").unwrap(), 0.0, epsilon = 1e-9);
        // the Gaussian decays fast enough everywhere on this grid
        assert!(table
            .rows()
            .iter()
            .all(|row| row.iter().all(|cell| cell.is_some())));

        // the slow tail: components stop existing once |k| reaches ~0.56
        let grid = GridSpec::new(0.0, 2.0, 3).unwrap();
        let table = eft_table(BuiltinFn::ExpDecay, grid).unwrap();
        assert!(table.cell(0, "c0").is_some());
        assert_eq!(table.cell(1, "c0"), None); // k = 1
        assert_eq!(table.cell(2, "re1"), None); // k = 2: full kernel fails too
    }

    #[test]
    fn decompose_recovers_hyperbolic_pair() {
        let grid = GridSpec::new(1.0, 2.0, 2).unwrap();
        let table = decompose_table(BuiltinSeries::Exp, 2, grid).unwrap();
        assert_eq!(table.columns(), &["x", "f0", "f1"]);
        assert_relative_eq!(
            table.cell(0, "f0").unwrap(),
            1.5430806348152438,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            table.cell(0, "f1").unwrap(),
            1.1752011936438015,
            max_relative = 1e-13
        );
        // cosh split into order 3: the three components resum to cosh
        let table = decompose_table(BuiltinSeries::Cosh, 3, grid).unwrap();
        let total: f64 = (0..3)
            .map(|j| table.cell(1, &format!("f{j}")).unwrap())
            .sum();
        assert_relative_eq!(total, 2f64.cosh(), max_relative = 1e-13);
    }
}
