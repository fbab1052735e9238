//! Spectrum estimation and computation for the modified second
//! Paine–de Hoog–Anderssen (PdHA) Sturm–Liouville problem
//!
//!   −ŷ″ + q(ẑ)ŷ = λŷ,  0 < ẑ < π,  q(ẑ) = c/(aẑ + b)ⁿ,
//!
//! with Robin boundary conditions. The crate provides
//!
//! - [`problem`]: the invariant-function family, its (b̂, ĉ) normal form,
//!   and boundary-condition types,
//! - [`liouville`]: the equivalent canonical-form problem and the
//!   transformation between the two (n = 2),
//! - [`landscape`]: the closed-form landscape function ŵ solving
//!   −ŵ″ + qŵ = 1 and the eigenvalue estimate λ₀ ≈ (5/4)·min(1/ŵ),
//! - [`eigensolver`]: shooting and finite-difference eigensolvers used to
//!   check the estimate against numerically computed spectra.

// negated comparisons like !(x > 0.0) are kept on purpose: they reject NaN
// where x <= 0.0 would let it through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eigensolver;
pub mod grid;
pub mod landscape;
pub mod liouville;
pub mod problem;
pub mod tridiag;

pub use eigensolver::{
    count_nodes, orthogonality, shoot, solve_fd_matrix, solve_robin_eigen,
    solve_slope_normalized, solve_slope_normalized_all, ClosureCondition, EigenError, EigenPair,
    SolverConfig,
};
pub use landscape::{
    characteristic_exponents, landscape_fd, BcKind, ClosedFormLandscape, EstimateResult,
    LandscapeError, SampledLandscape,
};
pub use liouville::{branch_exponent_k, BoundaryTransform, Branch, CanonicalProblem, LiouvilleError};
pub use problem::{
    InvariantParams, NormalizedInvariant, ProblemError, RobinBC, SchrodingerProblem,
};

/// Right endpoint of the spatial domain; every concrete problem lives on [0, π].
pub const DOMAIN_END: f64 = std::f64::consts::PI;
