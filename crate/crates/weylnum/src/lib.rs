//! Asymptotic rate calculus for s-numbers of embeddings between
//! tensor-product (dominating-mixed-smoothness) Besov spaces and Lebesgue-type
//! target spaces.
//!
//! The crate has three layers:
//!
//! * **Exact tables** ([`params`], [`rates`]): region classification of the
//!   `(1/p1, 1/p2)` parameter plane and the full piecewise table of Weyl,
//!   approximation and entropy rates `n^{-alpha} (log n)^{gamma}` with exact
//!   rational exponents, including two-sided brackets for the limiting
//!   smoothness values and first-class `Unknown` results where no rate is
//!   known.
//! * **Verifiable models** ([`seqmodel`], [`lpnum`], [`analysis`]): the
//!   hyperbolic-cross block model whose diagonal Hilbert-case spectrum is
//!   computable exactly, finite-dimensional `l_p -> l_q` Weyl-number bounds,
//!   a small dense SVD oracle, and harnesses for the eigenvalue, 2-summing,
//!   interpolation and s-number axiom inequalities.
//! * **Executable upper-bound schemes** ([`alloc`]): the rank-budget
//!   allocation schedules behind each rate table row, evaluated numerically
//!   level by level so the claimed rates can be audited against the model.
//!
//! All classification arithmetic is exact rational; floating point only
//! enters in the numerical harnesses and schedule evaluation.

pub mod alloc;
pub mod analysis;
pub mod error;
pub mod lpnum;
pub mod params;
pub mod rates;
pub mod rational;
pub mod seqmodel;

pub use error::Error;
pub use params::{classify_region, is_compact, EmbeddingParams, Exponent, Region, Target, TSplit};
pub use rates::{
    compare_entropy_weyl, entropy_rate, isotropic_weyl_rate, mixed_approx_rate, mixed_weyl_rate,
    rate_interpolate, rate_lift, rate_multiply, EntropyWeylOrder, RateExpr, RateReport,
    RateResult, SNumberKind,
};
pub use rational::{parse_rational, rat, Rational};
pub use seqmodel::{BlockModel, DiagonalSpectrum, DyadicValue};
