//! Uniform grids and composite quadrature on them.

/// `n` equally spaced points from `a` to `b` inclusive (`n >= 2`).
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "linspace needs at least 2 points");
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + i as f64 * step })
        .collect()
}

/// Composite trapezoidal rule for samples with uniform spacing `h`.
pub fn trapezoid_uniform(h: f64, values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let interior: f64 = values[1..values.len() - 1].iter().sum();
    h * (0.5 * (values[0] + values[values.len() - 1]) + interior)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linspace_hits_endpoints() {
        let g = linspace(0.0, std::f64::consts::PI, 1001);
        assert_eq!(g.len(), 1001);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[1000], std::f64::consts::PI);
    }

    #[test]
    fn trapezoid_integrates_sin_squared() {
        // ∫₀^π sin² = π/2
        let g = linspace(0.0, std::f64::consts::PI, 2001);
        let v: Vec<f64> = g.iter().map(|z| z.sin().powi(2)).collect();
        let h = g[1] - g[0];
        assert_relative_eq!(
            trapezoid_uniform(h, &v),
            std::f64::consts::PI / 2.0,
            epsilon = 1e-8
        );
    }
}
