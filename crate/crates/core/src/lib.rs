//! Exact algebra of piecewise-polynomial distributions on the line, the
//! intrinsic shifted product, boundary operators built from one-sided deltas,
//! and the point-interaction Schrödinger operators they define.

pub mod boundary;
pub mod dist;
pub mod error;
pub mod expr;
pub mod numerics;
pub mod poly;
pub mod scalar;
pub mod schrodinger;

pub use dist::{delta_times_smooth, star_limit_oracle, Bound, DeltaTerm, Distribution, RawDistribution};
pub use poly::Poly;
pub use scalar::{Rational, Scalar};

#[cfg(test)]
mod testing;
