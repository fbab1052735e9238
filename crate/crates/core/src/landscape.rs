//! Closed-form landscape function and effective potential for the modified
//! second PdHA problem.
//!
//! The landscape function ŵ solves −ŵ″ + ĉ/(ẑ + b̂)²·ŵ = 1 on [0, π] with the
//! problem's boundary conditions. With characteristic exponents φ₁, φ₂ from
//! φ² − φ − ĉ = 0 the general solution is
//!
//!   ŵ(ẑ) = C₁(ẑ + b̂)^φ₁ + C₂(ẑ + b̂)^φ₂ + (ẑ + b̂)²/(ĉ − 2),   ĉ ≠ 2,
//!
//! and the lowest eigenvalue is estimated as λ₀ ≈ (5/4)·Ŵ_min where
//! Ŵ = 1/ŵ is the effective potential. The resonant case ĉ = 2 is rejected:
//! the particular solution above degenerates there.

use thiserror::Error;

use crate::grid::linspace;
use crate::problem::RobinBC;
use crate::tridiag::solve_bordered_tridiagonal;
use crate::DOMAIN_END;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LandscapeError {
    #[error("c_hat = 2 is resonant: the polynomial particular solution degenerates")]
    ResonantCase,
    #[error("boundary data admits no landscape solution (singular coefficient system)")]
    UnsolvableBoundaryData,
    #[error("c_hat = 0 makes phi2 = 0 and the Neumann coefficient formulas divide by it")]
    ZeroExponent,
    #[error("boundary coefficients at one endpoint are both zero")]
    DegenerateBC,
    #[error("finite-difference system is singular")]
    SingularSystem,
    #[error("landscape function is nonpositive everywhere; effective potential undefined")]
    NonPositiveLandscape,
    #[error("parameters must be positive and finite (b_hat={b_hat}, c_hat={c_hat})")]
    InvalidParams { b_hat: f64, c_hat: f64 },
}

/// Roots (φ₁, φ₂) of φ² − φ − ĉ = 0 with φ₁ ≥ φ₂; for ĉ = 1 the larger root
/// is the golden ratio. Requires ĉ ≥ 0.
pub fn characteristic_exponents(c_hat: f64) -> (f64, f64) {
    debug_assert!(c_hat >= 0.0);
    let root = (1.0 + 4.0 * c_hat).sqrt();
    (0.5 * (1.0 + root), 0.5 * (1.0 - root))
}

const RESONANCE_TOL: f64 = 1e-12;
const SINGULARITY_TOL: f64 = 1e-12;

fn check_params(b_hat: f64, c_hat: f64) -> Result<(), LandscapeError> {
    if !(b_hat > 0.0) || !(c_hat >= 0.0) || !b_hat.is_finite() || !c_hat.is_finite() {
        return Err(LandscapeError::InvalidParams { b_hat, c_hat });
    }
    if (c_hat - 2.0).abs() < RESONANCE_TOL {
        return Err(LandscapeError::ResonantCase);
    }
    Ok(())
}

/// Coefficients (C₁, C₂) for Robin data α₀ŵ(0) + α₁ŵ′(0) = w₀,
/// β₀ŵ(π) + β₁ŵ′(π) = w₁, found by solving the 2×2 boundary system directly.
pub fn solve_coefficients_robin(
    b_hat: f64,
    c_hat: f64,
    left: &RobinBC,
    right: &RobinBC,
) -> Result<(f64, f64), LandscapeError> {
    check_params(b_hat, c_hat)?;
    left.check().map_err(|_| LandscapeError::DegenerateBC)?;
    right.check().map_err(|_| LandscapeError::DegenerateBC)?;
    let (p1, p2) = characteristic_exponents(c_hat);
    let (a0, a1, w0) = (left.alpha0, left.alpha1, left.rhs);
    let (b0, b1, w1) = (right.alpha0, right.alpha1, right.rhs);
    let pb = DOMAIN_END + b_hat;

    let m11 = b_hat.powf(p1) * (a0 + a1 * p1 / b_hat);
    let m12 = b_hat.powf(p2) * (a0 + a1 * p2 / b_hat);
    let m21 = pb.powf(p1) * (b0 + b1 * p1 / pb);
    let m22 = pb.powf(p2) * (b0 + b1 * p2 / pb);
    let r1 = w0 + b_hat * (a0 * b_hat + 2.0 * a1) / (2.0 - c_hat);
    let r2 = w1 + pb * (b0 * pb + 2.0 * b1) / (2.0 - c_hat);

    let det = m11 * m22 - m12 * m21;
    let scale = (m11 * m22).abs().max((m12 * m21).abs()).max(1e-300);
    if det.abs() <= SINGULARITY_TOL * scale {
        return Err(LandscapeError::UnsolvableBoundaryData);
    }
    Ok(((r1 * m22 - m12 * r2) / det, (m11 * r2 - r1 * m21) / det))
}

/// The same Robin coefficients written as the transcribed quotients
/// C₁ = Ĉ₁/Ĉ, C₂ = Ĉ₂/Ĉ. Kept as an independent route so the two can be
/// cross-checked against each other.
pub fn robin_coefficients_closed_form(
    b_hat: f64,
    c_hat: f64,
    left: &RobinBC,
    right: &RobinBC,
) -> Result<(f64, f64), LandscapeError> {
    check_params(b_hat, c_hat)?;
    left.check().map_err(|_| LandscapeError::DegenerateBC)?;
    right.check().map_err(|_| LandscapeError::DegenerateBC)?;
    let (p1, p2) = characteristic_exponents(c_hat);
    let (a0, a1, w0) = (left.alpha0, left.alpha1, left.rhs);
    let (b0, b1, w1) = (right.alpha0, right.alpha1, right.rhs);
    let b = b_hat;
    let pb = DOMAIN_END + b;
    let two_c = 2.0 - c_hat;

    let left_load = w0 * two_c + b * (a0 * b + 2.0 * a1);
    let right_load = w1 * two_c + pb * (b0 * pb + 2.0 * b1);
    let c1_hat = left_load * pb.powf(p2) * (b0 + b1 * p2 / pb)
        - b.powf(p2) * (a0 + a1 * p2 / b) * right_load;
    let c2_hat = b.powf(p1) * (a0 + a1 * p1 / b) * right_load
        - pb.powf(p1) * (b0 + b1 * p1 / pb) * left_load;
    let c_hat_det = two_c
        * (b.powf(p1) * pb.powf(p2) * (a0 + a1 * p1 / b) * (b0 + b1 * p2 / pb)
            - b.powf(p2) * pb.powf(p1) * (a0 + a1 * p2 / b) * (b0 + b1 * p1 / pb));

    let scale = two_c.abs()
        * (b.powf(p1) * pb.powf(p2) * (a0 + a1 * p1 / b) * (b0 + b1 * p2 / pb))
            .abs()
            .max((b.powf(p2) * pb.powf(p1) * (a0 + a1 * p2 / b) * (b0 + b1 * p1 / pb)).abs())
            .max(1e-300);
    if c_hat_det.abs() <= SINGULARITY_TOL * scale {
        return Err(LandscapeError::UnsolvableBoundaryData);
    }
    Ok((c1_hat / c_hat_det, c2_hat / c_hat_det))
}

/// Dirichlet coefficients for ŵ(0) = ŵ₀, ŵ(π) = ŵ₁.
pub fn coefficients_dirichlet(
    b_hat: f64,
    c_hat: f64,
    w0_hat: f64,
    w1_hat: f64,
) -> Result<(f64, f64), LandscapeError> {
    check_params(b_hat, c_hat)?;
    let (p1, p2) = characteristic_exponents(c_hat);
    let b = b_hat;
    let pb = DOMAIN_END + b;
    let two_c = 2.0 - c_hat;

    let bracket = b.powf(p1) * pb.powf(p2) - b.powf(p2) * pb.powf(p1);
    let scale = (b.powf(p1) * pb.powf(p2)).abs().max((b.powf(p2) * pb.powf(p1)).abs());
    if bracket.abs() <= SINGULARITY_TOL * scale {
        return Err(LandscapeError::UnsolvableBoundaryData);
    }
    let den = two_c * bracket;
    let left_load = w0_hat * two_c + b * b;
    let right_load = w1_hat * two_c + pb * pb;
    Ok((
        (left_load * pb.powf(p2) - b.powf(p2) * right_load) / den,
        (b.powf(p1) * right_load - pb.powf(p1) * left_load) / den,
    ))
}

/// Neumann coefficients for ŵ′(0) = s₀, ŵ′(π) = s₁. The case ĉ = 0 is
/// excluded: φ₂ = 0 appears in the C₂ denominator.
pub fn coefficients_neumann(
    b_hat: f64,
    c_hat: f64,
    s0: f64,
    s1: f64,
) -> Result<(f64, f64), LandscapeError> {
    check_params(b_hat, c_hat)?;
    if c_hat == 0.0 {
        return Err(LandscapeError::ZeroExponent);
    }
    let (p1, p2) = characteristic_exponents(c_hat);
    let b = b_hat;
    let pb = DOMAIN_END + b;
    let two_c = 2.0 - c_hat;

    let bracket = b.powf(p1 - 1.0) * pb.powf(p2 - 1.0) - b.powf(p2 - 1.0) * pb.powf(p1 - 1.0);
    let scale = (b.powf(p1 - 1.0) * pb.powf(p2 - 1.0))
        .abs()
        .max((b.powf(p2 - 1.0) * pb.powf(p1 - 1.0)).abs());
    if bracket.abs() <= SINGULARITY_TOL * scale {
        return Err(LandscapeError::UnsolvableBoundaryData);
    }
    let left_load = s0 * two_c + 2.0 * b;
    let right_load = s1 * two_c + 2.0 * pb;
    Ok((
        (left_load * pb.powf(p2 - 1.0) - b.powf(p2 - 1.0) * right_load) / (p1 * two_c * bracket),
        (b.powf(p1 - 1.0) * right_load - pb.powf(p1 - 1.0) * left_load) / (p2 * two_c * bracket),
    ))
}

/// Which boundary data produced a closed-form landscape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcKind {
    Dirichlet,
    Neumann,
    Robin,
}

/// The analytic landscape solution for one parameter pair (b̂, ĉ) and one set
/// of boundary data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormLandscape {
    b_hat: f64,
    c_hat: f64,
    phi1: f64,
    phi2: f64,
    c1: f64,
    c2: f64,
    bc_kind: BcKind,
}

/// Landscape maximum, effective-potential minimum, and the eigenvalue
/// estimate λ₀ ≈ (5/4)·Ŵ_min derived from them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateResult {
    /// Location of the landscape maximum in [0, π].
    pub z_star: f64,
    /// ŵ_max = ŵ(z_star).
    pub landscape_max: f64,
    /// Ŵ_min = 1/ŵ_max.
    pub effective_potential_min: f64,
    /// 1.25 · Ŵ_min.
    pub lambda0_est: f64,
}

impl ClosedFormLandscape {
    pub fn robin(
        b_hat: f64,
        c_hat: f64,
        left: &RobinBC,
        right: &RobinBC,
    ) -> Result<Self, LandscapeError> {
        let (c1, c2) = solve_coefficients_robin(b_hat, c_hat, left, right)?;
        Ok(Self::from_parts(b_hat, c_hat, c1, c2, BcKind::Robin))
    }

    pub fn dirichlet(b_hat: f64, c_hat: f64, w0: f64, w1: f64) -> Result<Self, LandscapeError> {
        let (c1, c2) = coefficients_dirichlet(b_hat, c_hat, w0, w1)?;
        Ok(Self::from_parts(b_hat, c_hat, c1, c2, BcKind::Dirichlet))
    }

    pub fn neumann(b_hat: f64, c_hat: f64, s0: f64, s1: f64) -> Result<Self, LandscapeError> {
        let (c1, c2) = coefficients_neumann(b_hat, c_hat, s0, s1)?;
        Ok(Self::from_parts(b_hat, c_hat, c1, c2, BcKind::Neumann))
    }

    fn from_parts(b_hat: f64, c_hat: f64, c1: f64, c2: f64, bc_kind: BcKind) -> Self {
        let (phi1, phi2) = characteristic_exponents(c_hat);
        Self {
            b_hat,
            c_hat,
            phi1,
            phi2,
            c1,
            c2,
            bc_kind,
        }
    }

    pub fn b_hat(&self) -> f64 {
        self.b_hat
    }

    pub fn c_hat(&self) -> f64 {
        self.c_hat
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn phi2(&self) -> f64 {
        self.phi2
    }

    pub fn coefficients(&self) -> (f64, f64) {
        (self.c1, self.c2)
    }

    pub fn bc_kind(&self) -> BcKind {
        self.bc_kind
    }

    /// ŵ(ẑ).
    pub fn eval(&self, zhat: f64) -> f64 {
        let s = zhat + self.b_hat;
        self.c1 * s.powf(self.phi1) + self.c2 * s.powf(self.phi2)
            + s * s / (self.c_hat - 2.0)
    }

    /// ŵ′(ẑ) = C₁φ₁(ẑ+b̂)^(φ₁−1) + C₂φ₂(ẑ+b̂)^(φ₂−1) + 2(ẑ+b̂)/(ĉ−2).
    pub fn derivative(&self, zhat: f64) -> f64 {
        let s = zhat + self.b_hat;
        self.c1 * self.phi1 * s.powf(self.phi1 - 1.0)
            + self.c2 * self.phi2 * s.powf(self.phi2 - 1.0)
            + 2.0 * s / (self.c_hat - 2.0)
    }

    /// ŵ″(ẑ), analytic.
    pub fn second_derivative(&self, zhat: f64) -> f64 {
        let s = zhat + self.b_hat;
        self.c1 * self.phi1 * (self.phi1 - 1.0) * s.powf(self.phi1 - 2.0)
            + self.c2 * self.phi2 * (self.phi2 - 1.0) * s.powf(self.phi2 - 2.0)
            + 2.0 / (self.c_hat - 2.0)
    }

    /// All interior roots of ŵ′ in (0, π), each refined to |ŵ′| < 1e−12.
    ///
    /// A sign-change scan on a 2001-point grid brackets the roots; Newton
    /// iterations refine them, falling back to bisection whenever a step
    /// would leave its bracket. Monotone landscapes yield an empty list.
    pub fn critical_points(&self) -> Vec<f64> {
        const SCAN_POINTS: usize = 2001;
        const TOL: f64 = 1e-12;
        const MAX_ITER: usize = 100;

        let grid = linspace(0.0, DOMAIN_END, SCAN_POINTS);
        let mut roots = Vec::new();
        let mut prev_z = grid[0];
        let mut prev_d = self.derivative(prev_z);
        for &z in &grid[1..] {
            let d = self.derivative(z);
            if prev_d == 0.0 && prev_z > 0.0 {
                roots.push(prev_z);
            } else if prev_d * d < 0.0 {
                let (mut lo, mut hi) = (prev_z, z);
                let (mut flo, _fhi) = (prev_d, d);
                let mut x = 0.5 * (lo + hi);
                for _ in 0..MAX_ITER {
                    let fx = self.derivative(x);
                    if fx.abs() < TOL {
                        break;
                    }
                    if flo * fx < 0.0 {
                        hi = x;
                    } else {
                        lo = x;
                        flo = fx;
                    }
                    let slope = self.second_derivative(x);
                    let newton = x - fx / slope;
                    x = if slope != 0.0 && newton > lo && newton < hi {
                        newton
                    } else {
                        0.5 * (lo + hi)
                    };
                }
                roots.push(x);
            }
            prev_z = z;
            prev_d = d;
        }
        roots
    }

    /// Landscape maximum over critical points and endpoints, the resulting
    /// effective-potential minimum, and the eigenvalue estimate.
    pub fn estimate_lambda0(&self) -> Result<EstimateResult, LandscapeError> {
        let mut candidates = self.critical_points();
        candidates.push(0.0);
        candidates.push(DOMAIN_END);
        let (mut z_star, mut w_max) = (0.0, f64::NEG_INFINITY);
        for z in candidates {
            let w = self.eval(z);
            if w > w_max {
                w_max = w;
                z_star = z;
            }
        }
        if !(w_max > 0.0) {
            return Err(LandscapeError::NonPositiveLandscape);
        }
        let w_min = 1.0 / w_max;
        Ok(EstimateResult {
            z_star,
            landscape_max: w_max,
            effective_potential_min: w_min,
            lambda0_est: 1.25 * w_min,
        })
    }
}

/// A landscape sampled on a uniform grid, as produced by the
/// finite-difference solver.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledLandscape {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

/// Second-order finite-difference solve of −ŵ″ + q(ẑ)ŵ = 1 on n uniform
/// intervals with Robin data at both ends. Dirichlet rows pin the endpoint
/// value; other Robin rows use second-order one-sided derivative stencils,
/// giving an almost-tridiagonal system. Serves as the independent numerical
/// oracle for the closed form and covers potentials outside the family.
pub fn landscape_fd<F>(
    potential: F,
    left: &RobinBC,
    right: &RobinBC,
    n: usize,
) -> Result<SampledLandscape, LandscapeError>
where
    F: Fn(f64) -> f64,
{
    assert!(n >= 3, "landscape_fd needs at least 3 intervals");
    left.check().map_err(|_| LandscapeError::DegenerateBC)?;
    right.check().map_err(|_| LandscapeError::DegenerateBC)?;
    let grid = linspace(0.0, DOMAIN_END, n + 1);
    let h = DOMAIN_END / n as f64;
    let m = n + 1;
    let mut sub = vec![0.0; m];
    let mut diag = vec![0.0; m];
    let mut sup = vec![0.0; m];
    let mut rhs = vec![0.0; m];
    let mut corner_first = 0.0;
    let mut corner_last = 0.0;

    if left.is_dirichlet() {
        diag[0] = left.alpha0;
        rhs[0] = left.rhs;
    } else {
        // alpha0 w0 + alpha1 (-3w0 + 4w1 - w2)/(2h) = rhs
        diag[0] = left.alpha0 - 3.0 * left.alpha1 / (2.0 * h);
        sup[0] = 4.0 * left.alpha1 / (2.0 * h);
        corner_first = -left.alpha1 / (2.0 * h);
        rhs[0] = left.rhs;
    }
    for i in 1..n {
        sub[i] = -1.0 / (h * h);
        diag[i] = 2.0 / (h * h) + potential(grid[i]);
        sup[i] = -1.0 / (h * h);
        rhs[i] = 1.0;
    }
    if right.is_dirichlet() {
        diag[n] = right.alpha0;
        rhs[n] = right.rhs;
    } else {
        // beta0 wN + beta1 (3wN - 4w_{N-1} + w_{N-2})/(2h) = rhs
        diag[n] = right.alpha0 + 3.0 * right.alpha1 / (2.0 * h);
        sub[n] = -4.0 * right.alpha1 / (2.0 * h);
        corner_last = right.alpha1 / (2.0 * h);
        rhs[n] = right.rhs;
    }

    let values = solve_bordered_tridiagonal(&sub, &diag, &sup, corner_first, corner_last, &rhs)
        .ok_or(LandscapeError::SingularSystem)?;
    // a singular operator (e.g. pure Neumann with incompatible source) shows
    // up as a near-zero pivot amplifying the solution instead of an exact one
    if values.iter().any(|v| !v.is_finite() || v.abs() > 1e12) {
        return Err(LandscapeError::SingularSystem);
    }
    Ok(SampledLandscape { grid, values })
}
