//! The four verification suites, their data, and the dimension oracles.

mod fixtures;
mod oracle;
mod report;
mod sc;
mod z3;
mod z4;
mod z5;

pub use fixtures::{sc_data, z3_data, z4_descriptor, z5_data, ScData, TableRow, Z3Data, Z5Data, Z3_RELATIONS};
pub use oracle::{oracle_curve_dim, oracle_plurigenus};
pub use report::{Check, Status, VerificationReport};
pub use sc::{run_sc, sc_build, sc_predicate, ScBuild};
pub use z3::{run_z3, z3_samples, Mode, Params};
pub use z4::{run_z4, z4_presentation, Z4Sample};
pub use z5::{run_z5, z5_invariant_presentation};

use thiserror::Error;

use crate::action::ActionError;
use crate::poly::PolyError;
use crate::quotient::QuotientError;
use crate::subring::SubringError;

/// Failures in scenario setup. Failing checks are not errors; they are
/// recorded in the report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("maximum degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: u32, got: u32 },
    #[error("fixture: {0}")]
    Fixture(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Subring(#[from] SubringError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Renders `{k:v,k:v}` with keys in order.
pub fn render_census<'a>(entries: impl IntoIterator<Item = (&'a u32, &'a usize)>) -> String {
    let parts: Vec<String> = entries.into_iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Renders a tuple `(a,b,c)`.
pub fn render_tuple<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
