//! f64 factorial table. 170! is the last finite value; accumulated rounding
//! across the table stays below a few parts in 1e14.

use std::sync::LazyLock;

pub(crate) const MAX_FACTORIAL: usize = 170;

static TABLE: LazyLock<[f64; MAX_FACTORIAL + 1]> = LazyLock::new(|| {
    let mut t = [1.0; MAX_FACTORIAL + 1];
    for n in 1..=MAX_FACTORIAL {
        t[n] = t[n - 1] * n as f64;
    }
    t
});

/// n! as f64. Panics above 170, where the value leaves the f64 range;
/// callers cap their degrees well below that.
pub(crate) fn factorial(n: usize) -> f64 {
    TABLE[n]
}
