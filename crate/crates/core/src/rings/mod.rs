//! Exact arithmetic foundation: polynomials, rational functions, truncated
//! (possibly ramified) power series, cosine-basis trigonometric series,
//! exact matrices with nullspace, CRT and rational reconstruction.

pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod reconstruct;
pub mod series;
pub mod trig;

pub use matrix::{nullspace, nullspace_fp, nullspace_rat, Matrix};
pub use poly::{fmt_poly, Poly};
pub use ratfunc::{NuRat, RatFunc};
pub use reconstruct::{crt, rational_reconstruct, rational_reconstruct_big, ReconstructError};
pub use series::Series;
pub use trig::TrigSeries;

pub type PolyQ = Poly<crate::num::Rat>;
pub type SeriesQ = Series<crate::num::Rat>;
