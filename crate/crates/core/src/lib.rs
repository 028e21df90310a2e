//! Exact regularity checking for interval parametric matrices
//! `A(p) = A₀ + Σ pₖAₖ`, `p ∈ [p̲, p̄]`.
//!
//! Every decision is made in exact rational arithmetic: determinant
//! polynomials of one-parameter slices, Sturm-based real-root isolation,
//! resultants for eigenvalue extrema, and rational-function ranges for
//! solution hulls. Floating point only appears when rendering reports.

pub mod bivariate;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod hull;
pub mod matrix;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod problem;
pub mod radius;
pub mod regularity;
pub mod report;
pub mod rho0;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use model::{
    BoxPolicy, NormalizedMatrix, NormalizedSystem, ParametricLinearSystem, ParametricMatrix, Sign,
    SubproblemKey, SubsetKey,
};
pub use poly::Poly;
pub use scalar::{Interval, Rational};
