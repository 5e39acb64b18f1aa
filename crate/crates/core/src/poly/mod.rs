//! Exact integer-polynomial, rational-function and truncated power-series
//! arithmetic, the Chebyshev-derived polynomial family, and the tridiagonal
//! transfer matrices for bounded lattice paths.

mod cheb;
mod intpoly;
mod matrix;
mod ratfunc;
mod series;

pub use cheb::{cheby_sum_identity_check, p_cheb, q_cheb};
pub use intpoly::IntPoly;
pub use matrix::{bounded_path_gf, det, Family, MatrixKind, TriMatrix};
pub use ratfunc::{RatFunc, RatFuncJson};
pub use series::{PowerSeries, SeriesJson};
