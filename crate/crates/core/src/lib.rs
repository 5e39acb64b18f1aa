//! Exact enumeration of 3412-avoiding involutions.
//!
//! The crate covers the Motzkin-path bijection, continued-fraction
//! generating functions for permutation statistics, a memoized engine for
//! `F_T(x) = Σ |I_n(3412, T)| x^n` over arbitrary pattern sets, Chebyshev
//! closed forms, occurrence-counting generating functions and a brute-force
//! oracle used to check all of the above.

pub mod error;
pub mod genfun;
pub mod motzkin;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use motzkin::{generate_paths, motzkin_numbers, MotzkinPath, Step};
pub use perm::{ClassicStats, PatternSet, Permutation};
pub use poly::{IntPoly, PowerSeries, RatFunc};
