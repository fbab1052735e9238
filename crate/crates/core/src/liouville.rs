//! Canonical-form problems that Liouville's transformation maps onto the
//! modified second PdHA problem.
//!
//! For exponents k with c = a²k(k + 1), the canonical Sturm–Liouville
//! problem −(u(z) y′)′ = λy with
//!
//!   u(z) = [a(1 − 2k)(z − d)]^(−4k/(1−2k))
//!
//! transforms under ẑ = ∫ dz/√u, v = u^(−1/4), y = v·ŷ into
//! −ŷ″ + c/(aẑ + b)²·ŷ = λŷ on [0, π]. Both sign branches of k produce
//! Liouville-equivalent canonical problems with the same invariant function.

use thiserror::Error;

use crate::DOMAIN_END;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiouvilleError {
    #[error("canonical family requires a != 0 and b, c > 0 (got a={a}, b={b}, c={c})")]
    InvalidParams { a: f64, b: f64, c: f64 },
    #[error("argument {0} is outside the transformation domain")]
    DomainError(f64),
    #[error("1 - 2k = 0: the variable change degenerates")]
    SingularExponent,
    #[error("boundary coefficients at one endpoint are both zero")]
    DegenerateBC,
}

/// Sign choice in k = ½(−1 ± √(a² + 4c)/a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Exponent k of the canonical coefficient function, satisfying
/// c = a²k(k + 1) exactly for either branch.
pub fn branch_exponent_k(a: f64, c: f64, branch: Branch) -> Result<f64, LiouvilleError> {
    if a == 0.0 || !(c > 0.0) || !a.is_finite() || !c.is_finite() {
        return Err(LiouvilleError::InvalidParams { a, b: f64::NAN, c });
    }
    let root = (a * a + 4.0 * c).sqrt() / a;
    Ok(match branch {
        Branch::Plus => 0.5 * (-1.0 + root),
        Branch::Minus => 0.5 * (-1.0 - root),
    })
}

/// Transformed Robin coefficients for the Schrödinger-form problem.
///
/// Dirichlet data is preserved: a vanishing derivative coefficient stays zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryTransform {
    pub alpha0: f64,
    pub alpha1: f64,
    pub beta0: f64,
    pub beta1: f64,
}

/// One member of the canonical family, pinned to an invariant-parameter
/// triple (a, b, c), a shift d, and a branch choice for k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalProblem {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    branch: Branch,
    k: f64,
    z0: f64,
    z1: f64,
}

impl CanonicalProblem {
    pub fn new(a: f64, b: f64, c: f64, d: f64, branch: Branch) -> Result<Self, LiouvilleError> {
        if !(a > 0.0 && b > 0.0 && c > 0.0) || !d.is_finite() {
            return Err(LiouvilleError::InvalidParams { a, b, c });
        }
        let k = branch_exponent_k(a, c, branch)?;
        let m = 1.0 - 2.0 * k;
        if m == 0.0 || !m.is_finite() {
            return Err(LiouvilleError::SingularExponent);
        }
        let z0 = b.powf(m) / (a * m) + d;
        let z1 = (a * DOMAIN_END + b).powf(m) / (a * m) + d;
        Ok(Self {
            a,
            b,
            c,
            d,
            branch,
            k,
            z0,
            z1,
        })
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

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Image of ẑ = 0 under the change of variable.
    pub fn z0(&self) -> f64 {
        self.z0
    }

    /// Image of ẑ = π.
    pub fn z1(&self) -> f64 {
        self.z1
    }

    /// Power −4k/(1 − 2k) appearing in u(z).
    pub fn exponent(&self) -> f64 {
        -4.0 * self.k / (1.0 - 2.0 * self.k)
    }

    /// Factor a(1 − 2k) multiplying (z − d) in u(z).
    pub fn base_factor(&self) -> f64 {
        self.a * (1.0 - 2.0 * self.k)
    }

    /// Canonical coefficient u(z) = [a(1 − 2k)(z − d)]^(−4k/(1−2k)).
    pub fn u_of_z(&self, z: f64) -> Result<f64, LiouvilleError> {
        let base = self.base_factor() * (z - self.d);
        if base <= 0.0 {
            return Err(LiouvilleError::DomainError(z));
        }
        Ok(base.powf(self.exponent()))
    }

    /// Forward map z(ẑ) = (aẑ + b)^(1−2k)/(a(1 − 2k)) + d for ẑ ∈ [0, π].
    pub fn z_from_zhat(&self, zhat: f64) -> Result<f64, LiouvilleError> {
        if !(-DOMAIN_SLACK..=DOMAIN_END + DOMAIN_SLACK).contains(&zhat) {
            return Err(LiouvilleError::DomainError(zhat));
        }
        let m = 1.0 - 2.0 * self.k;
        Ok((self.a * zhat + self.b).powf(m) / (self.a * m) + self.d)
    }

    /// Inverse map ẑ(z) = (1/a)·{[a(1 − 2k)(z − d)]^(1/(1−2k)) − b} for
    /// z ∈ [z0, z1].
    pub fn zhat_from_z(&self, z: f64) -> Result<f64, LiouvilleError> {
        let span = (self.z1 - self.z0).abs();
        if z < self.z0 - DOMAIN_SLACK * span || z > self.z1 + DOMAIN_SLACK * span {
            return Err(LiouvilleError::DomainError(z));
        }
        let m = 1.0 - 2.0 * self.k;
        let base = self.base_factor() * (z - self.d);
        if base <= 0.0 {
            return Err(LiouvilleError::DomainError(z));
        }
        Ok((base.powf(1.0 / m) - self.b) / self.a)
    }

    /// v(ẑ) = (aẑ + b)^k.
    pub fn v_hat(&self, zhat: f64) -> f64 {
        (self.a * zhat + self.b).powf(self.k)
    }

    /// u(ẑ) = (aẑ + b)^(−4k); equals v(ẑ)^(−4) pointwise.
    pub fn u_hat(&self, zhat: f64) -> f64 {
        (self.a * zhat + self.b).powf(-4.0 * self.k)
    }

    /// dv/dẑ = a·k·(aẑ + b)^(k−1).
    pub fn dv_dzhat(&self, zhat: f64) -> f64 {
        self.a * self.k * (self.a * zhat + self.b).powf(self.k - 1.0)
    }

    /// dz/dẑ = √u = (aẑ + b)^(−2k).
    pub fn dz_dzhat(&self, zhat: f64) -> f64 {
        (self.a * zhat + self.b).powf(-2.0 * self.k)
    }

    /// Central-difference estimate of the invariant q = v·(1/v)″ at an
    /// interior point; converges at second order to c/(aẑ + b)².
    pub fn invariant_fd(&self, zhat: f64, h: f64) -> Result<f64, LiouvilleError> {
        if !(h > 0.0) || zhat < h - DOMAIN_SLACK || zhat > DOMAIN_END - h + DOMAIN_SLACK {
            return Err(LiouvilleError::DomainError(zhat));
        }
        let recip = |x: f64| 1.0 / self.v_hat(x);
        let second = (recip(zhat + h) - 2.0 * recip(zhat) + recip(zhat - h)) / (h * h);
        Ok(self.v_hat(zhat) * second)
    }

    /// Exact invariant c/(aẑ + b)², used at the endpoints where the central
    /// difference is unavailable.
    pub fn invariant_analytic(&self, zhat: f64) -> f64 {
        self.c / (self.a * zhat + self.b).powi(2)
    }

    /// Transform canonical boundary coefficients (a₀, a₁, b₀, b₁) into the
    /// Schrödinger-form coefficients:
    ///
    ///   α₀ = a₀v(0) − (a₁/ż(0))·v̇(0),    α₁ = a₁·v(0)/ż(0),
    ///   β₀ = b₀v(π) + (b₁/ż(π))·v̇(π),    β₁ = b₁·v(π)/ż(π).
    pub fn transform_bc(
        &self,
        a0: f64,
        a1: f64,
        b0: f64,
        b1: f64,
    ) -> Result<BoundaryTransform, LiouvilleError> {
        if (a0 == 0.0 && a1 == 0.0) || (b0 == 0.0 && b1 == 0.0) {
            return Err(LiouvilleError::DegenerateBC);
        }
        let (v0, dv0, zdot0) = (self.v_hat(0.0), self.dv_dzhat(0.0), self.dz_dzhat(0.0));
        let (v1, dv1, zdot1) = (
            self.v_hat(DOMAIN_END),
            self.dv_dzhat(DOMAIN_END),
            self.dz_dzhat(DOMAIN_END),
        );
        Ok(BoundaryTransform {
            alpha0: a0 * v0 - a1 / zdot0 * dv0,
            alpha1: a1 * v0 / zdot0,
            beta0: b0 * v1 + b1 / zdot1 * dv1,
            beta1: b1 * v1 / zdot1,
        })
    }
}

// Slack for floating-point round-off at the interval ends.
const DOMAIN_SLACK: f64 = 1e-9;

/// Shift d making z0 = 0 for the classical instance (a = 1 = c, b = 0.1,
/// minus branch), as used throughout the worked example.
pub fn classical_shift() -> f64 {
    let m = 2.0 + 5.0_f64.sqrt();
    -(0.1_f64.powf(m)) / m
}

/// The classical second PdHA problem's canonical form (minus branch).
pub fn classical_canonical() -> CanonicalProblem {
    CanonicalProblem::new(1.0, 0.1, 1.0, classical_shift(), Branch::Minus)
        .expect("classical parameters are valid")
}
