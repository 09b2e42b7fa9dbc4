//! Numerical laboratory for sequence-space counterexamples in infinite
//! dimensional holomorphy and real analyticity.
//!
//! Every probe is generic over a [`scalar::Real`] (`f32` or `f64`); the
//! aliases below fix `f64`. Rank certificates also have an exact mode over
//! Gaussian rationals (see [`exact`]).

pub mod ell1;
pub mod error;
pub mod exact;
pub mod holomorphy;
pub mod linalg;
pub mod logspace;
pub mod quadrature;
pub mod real_analytic;
pub mod report;
pub mod scalar;
pub mod sequence;
pub mod span;

pub use error::{Error, Result};
pub use report::{Certified, Check, Verdict, VerificationReport};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Generator = sequence::GeneratorSpec<f64>;
pub type Sequence = sequence::FormalSequence<f64>;
pub type Truncation = sequence::TruncatedVector<f64>;
pub type Family = span::SpanningFamily<f64>;
pub type Curve = holomorphy::CurveFamily<f64>;
pub type Domain = holomorphy::Domain<f64>;
pub type Triangle = holomorphy::Triangle<f64>;
pub type L1Vector = ell1::SummableVector<f64>;
pub type TaylorSeries = real_analytic::TaylorSeries1D<f64>;
