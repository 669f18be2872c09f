//! Data-emission front end: figure and table builders over the library
//! operations, CSV/JSON serialization, and the identity check suite.

pub mod check;
pub mod figures;
pub mod output;

pub use check::{run_check, CheckEntry, CheckReport};
pub use figures::{
    decompose_table, eft_table, figure, figure_default_range, phf_table, BuiltinFn, BuiltinSeries,
    GridSpec, DEFAULT_EFT_STEPS, DEFAULT_STEPS,
};
pub use output::{Format, Table};
