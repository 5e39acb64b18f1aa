//! Generating functions: the `F_T` series engine, Chebyshev closed forms,
//! occurrence generating functions and the continued-fraction evaluator.

mod cf;
mod closed;
mod engine;
mod occurrence;

pub use cf::{cf_series, default_depth, multivariate_tau_check, CfSpec, QPoly, QSeries, Var};
pub use closed::{
    decreasing_closed, generalized_fibonacci_set, kit1i_closed, kt1_closed, layered_closed,
    ClosedFamily,
};
pub use engine::{Engine, DEFAULT_ORDER_LIMIT};
pub use occurrence::{occurrence_gf, occurrence_gf_general, OccurrenceSpec, Parity};
