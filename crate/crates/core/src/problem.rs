//! Domain types for the modified second PdHA problem: the invariant-function
//! family q(ẑ) = c/(aẑ + b)ⁿ, its normalized two-parameter form, and Robin
//! boundary data.
//!
//! Boundary conditions are stored with a plus sign on the derivative term at
//! both endpoints: α₀w(0) + α₁w′(0) = rhs on the left and
//! β₀w(π) + β₁w′(π) = rhs on the right.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::DOMAIN_END;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProblemError {
    #[error("invariant parameters require a > 0, b > 0, c > 0, n >= 1 (got a={a}, b={b}, c={c}, n={n})")]
    InvalidParams { a: f64, b: f64, c: f64, n: u32 },
    #[error("normalization is defined for n = 2 only (got n = {0})")]
    UnsupportedOrder(u32),
    #[error("a*zhat + b = {0} must be positive")]
    DomainError(f64),
    #[error("boundary condition has alpha0 = alpha1 = 0")]
    DegenerateBC,
    #[error("potential is not finite at zhat = {0}")]
    NonFinitePotential(f64),
}

/// Parameters (a, b, c, n) of the invariant function q(ẑ) = c/(aẑ + b)ⁿ.
///
/// Only n = 2 (the modified second PdHA problem) has closed-form landscape
/// and transformation theory; other orders are carried so the numerical
/// eigensolver can probe them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantParams {
    a: f64,
    b: f64,
    c: f64,
    n: u32,
}

impl InvariantParams {
    pub fn new(a: f64, b: f64, c: f64, n: u32) -> Result<Self, ProblemError> {
        let positive = a > 0.0 && b > 0.0 && c > 0.0;
        if !positive || !(a.is_finite() && b.is_finite() && c.is_finite()) || n < 1 {
            return Err(ProblemError::InvalidParams { a, b, c, n });
        }
        Ok(Self { a, b, c, n })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Evaluate q(ẑ) = c/(aẑ + b)ⁿ. The binomial aẑ + b must be positive.
    pub fn q(&self, zhat: f64) -> Result<f64, ProblemError> {
        let base = self.a * zhat + self.b;
        if base <= 0.0 {
            return Err(ProblemError::DomainError(base));
        }
        Ok(self.c / base.powi(self.n as i32))
    }

    /// Reduce to the two-parameter normal form b̂ = b/a, ĉ = c/a², so that
    /// q(ẑ) = ĉ/(ẑ + b̂)². Defined for n = 2.
    pub fn normalize(&self) -> Result<NormalizedInvariant, ProblemError> {
        if self.n != 2 {
            return Err(ProblemError::UnsupportedOrder(self.n));
        }
        NormalizedInvariant::new(self.b / self.a, self.c / (self.a * self.a))
    }
}

/// The normalized invariant q(ẑ) = ĉ/(ẑ + b̂)².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedInvariant {
    b_hat: f64,
    c_hat: f64,
}

impl NormalizedInvariant {
    pub fn new(b_hat: f64, c_hat: f64) -> Result<Self, ProblemError> {
        if !(b_hat > 0.0 && c_hat > 0.0 && b_hat.is_finite() && c_hat.is_finite()) {
            return Err(ProblemError::InvalidParams {
                a: 1.0,
                b: b_hat,
                c: c_hat,
                n: 2,
            });
        }
        Ok(Self { b_hat, c_hat })
    }

    pub fn b_hat(&self) -> f64 {
        self.b_hat
    }

    pub fn c_hat(&self) -> f64 {
        self.c_hat
    }

    /// q(ẑ) = ĉ/(ẑ + b̂)², intended for ẑ ∈ [0, π] where ẑ + b̂ > 0.
    pub fn q(&self, zhat: f64) -> f64 {
        self.c_hat / (zhat + self.b_hat).powi(2)
    }
}

/// Robin boundary data at one endpoint: coeff0·w + coeff1·w′ = rhs, with a
/// plus sign on the derivative term at either end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobinBC {
    pub alpha0: f64,
    pub alpha1: f64,
    pub rhs: f64,
}

impl RobinBC {
    pub fn new(alpha0: f64, alpha1: f64, rhs: f64) -> Result<Self, ProblemError> {
        let bc = Self { alpha0, alpha1, rhs };
        bc.check()?;
        Ok(bc)
    }

    /// w = value at the endpoint.
    pub fn dirichlet(value: f64) -> Self {
        Self {
            alpha0: 1.0,
            alpha1: 0.0,
            rhs: value,
        }
    }

    /// w′ = slope at the endpoint.
    pub fn neumann(slope: f64) -> Self {
        Self {
            alpha0: 0.0,
            alpha1: 1.0,
            rhs: slope,
        }
    }

    pub fn check(&self) -> Result<(), ProblemError> {
        let finite = self.alpha0.is_finite() && self.alpha1.is_finite() && self.rhs.is_finite();
        if !finite || (self.alpha0 == 0.0 && self.alpha1 == 0.0) {
            return Err(ProblemError::DegenerateBC);
        }
        Ok(())
    }

    pub fn is_dirichlet(&self) -> bool {
        self.alpha1 == 0.0
    }

    pub fn is_neumann(&self) -> bool {
        self.alpha0 == 0.0
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rhs == 0.0
    }
}

/// A Schrödinger-form problem −ŷ″ + q(ẑ)ŷ = λŷ on [0, π] with Robin data at
/// both ends. The potential is an arbitrary evaluable function, so problems
/// outside the closed-form family (e.g. n ≠ 2) can be solved numerically.
#[derive(Clone)]
pub struct SchrodingerProblem {
    potential: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub left: RobinBC,
    pub right: RobinBC,
}

impl fmt::Debug for SchrodingerProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SchrodingerProblem")
            .field("left", &self.left)
            .field("right", &self.right)
            .finish_non_exhaustive()
    }
}

impl SchrodingerProblem {
    pub fn new<F>(potential: F, left: RobinBC, right: RobinBC) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            potential: Arc::new(potential),
            left,
            right,
        }
    }

    pub fn potential(&self) -> &(dyn Fn(f64) -> f64 + Send + Sync) {
        self.potential.as_ref()
    }

    pub fn q(&self, zhat: f64) -> f64 {
        (self.potential)(zhat)
    }

    /// Check both boundary conditions and probe the potential for finiteness
    /// on a fixed 1001-point uniform grid, which catches endpoint
    /// singularities without symbolic analysis.
    pub fn validated(self) -> Result<Self, ProblemError> {
        self.left.check()?;
        self.right.check()?;
        for i in 0..=1000 {
            let z = DOMAIN_END * i as f64 / 1000.0;
            if !(self.potential)(z).is_finite() {
                return Err(ProblemError::NonFinitePotential(z));
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn normalize_identity_when_a_is_one() {
        let p = InvariantParams::new(1.0, 0.1, 1.0, 2).unwrap();
        let n = p.normalize().unwrap();
        assert_eq!(n.b_hat(), 0.1);
        assert_eq!(n.c_hat(), 1.0);
    }

    #[test]
    fn normalize_scales_by_a() {
        let p = InvariantParams::new(2.0, 1.0, 8.0, 2).unwrap();
        let n = p.normalize().unwrap();
        assert_relative_eq!(n.b_hat(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(n.c_hat(), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn normalize_preserves_q_pointwise() {
        let p = InvariantParams::new(2.0, 0.2, 4.0, 2).unwrap();
        let n = p.normalize().unwrap();
        assert_relative_eq!(n.b_hat(), 0.1, max_relative = 1e-15);
        assert_relative_eq!(n.c_hat(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(p.q(0.0).unwrap(), 100.0, max_relative = 1e-14);
        assert_relative_eq!(n.q(0.0), 100.0, max_relative = 1e-14);
        // 100 points across the domain, 1 ulp-scale agreement
        for i in 0..100 {
            let z = DOMAIN_END * i as f64 / 99.0;
            assert_relative_eq!(p.q(z).unwrap(), n.q(z), max_relative = 1e-14);
        }
    }

    #[test]
    fn normalize_rejects_other_orders() {
        let p = InvariantParams::new(1.0, 1.0, 1.0, 3).unwrap();
        assert_eq!(p.normalize(), Err(ProblemError::UnsupportedOrder(3)));
    }

    #[test]
    fn q_reference_values() {
        let p = InvariantParams::new(1.0, 0.1, 1.0, 2).unwrap();
        assert_relative_eq!(p.q(0.0).unwrap(), 100.0, max_relative = 1e-14);
        assert_relative_eq!(
            p.q(DOMAIN_END).unwrap(),
            1.0 / (DOMAIN_END + 0.1).powi(2),
            max_relative = 1e-14
        );
        let wide = InvariantParams::new(1.0, 2.0, 1.0, 2).unwrap();
        assert_relative_eq!(wide.q(0.0).unwrap(), 0.25, max_relative = 1e-15);
    }

    #[test]
    fn q_rejects_nonpositive_binomial() {
        let p = InvariantParams::new(1.0, 1.0, 1.0, 2).unwrap();
        assert!(matches!(p.q(-1.0), Err(ProblemError::DomainError(_))));
        assert!(matches!(p.q(-2.0), Err(ProblemError::DomainError(_))));
    }

    #[test]
    fn q_is_strictly_decreasing() {
        let p = InvariantParams::new(1.5, 0.3, 2.0, 2).unwrap();
        let mut prev = p.q(0.0).unwrap();
        for i in 1..=200 {
            let z = DOMAIN_END * i as f64 / 200.0;
            let cur = p.q(z).unwrap();
            assert!(cur < prev, "q must decrease, failed at zhat={z}");
            prev = cur;
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(InvariantParams::new(0.0, 1.0, 1.0, 2).is_err());
        assert!(InvariantParams::new(1.0, -1.0, 1.0, 2).is_err());
        assert!(InvariantParams::new(1.0, 1.0, 0.0, 2).is_err());
        assert!(InvariantParams::new(1.0, 1.0, 1.0, 0).is_err());
    }

    #[test]
    fn validation_accepts_free_particle_dirichlet() {
        let sp = SchrodingerProblem::new(|_| 0.0, RobinBC::dirichlet(0.0), RobinBC::dirichlet(0.0));
        assert!(sp.validated().is_ok());
    }

    #[test]
    fn validation_rejects_degenerate_bc() {
        let bad = RobinBC {
            alpha0: 0.0,
            alpha1: 0.0,
            rhs: 0.0,
        };
        let sp = SchrodingerProblem::new(|_| 0.0, bad, RobinBC::dirichlet(0.0));
        assert_eq!(sp.validated().unwrap_err(), ProblemError::DegenerateBC);
        assert!(RobinBC::new(0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<InvariantParams>();
        assert_send_sync::<NormalizedInvariant>();
        assert_send_sync::<RobinBC>();
        assert_send_sync::<SchrodingerProblem>();
    }

    #[test]
    fn validation_rejects_singular_endpoint() {
        // b_hat = 0 puts the pole of q at the left endpoint
        let sp = SchrodingerProblem::new(
            |z: f64| 1.0 / (z * z),
            RobinBC::dirichlet(0.0),
            RobinBC::dirichlet(0.0),
        );
        assert_eq!(
            sp.validated().unwrap_err(),
            ProblemError::NonFinitePotential(0.0)
        );
    }
}
