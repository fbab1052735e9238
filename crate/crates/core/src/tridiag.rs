//! Tridiagonal linear solves and Sturm-sequence eigenvalue bisection.

/// Solve a tridiagonal system by the Thomas algorithm. `sub[i]` multiplies
/// `x[i-1]` in row i (`sub[0]` unused), `sup[i]` multiplies `x[i+1]` (last
/// unused). Returns `None` on a vanishing pivot.
pub fn solve_tridiagonal(
    sub: &[f64],
    diag: &[f64],
    sup: &[f64],
    rhs: &[f64],
) -> Option<Vec<f64>> {
    let n = diag.len();
    assert!(sub.len() == n && sup.len() == n && rhs.len() == n);
    if n == 0 {
        return Some(Vec::new());
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    if diag[0] == 0.0 || !diag[0].is_finite() {
        return None;
    }
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let pivot = diag[i] - sub[i] * c[i - 1];
        if pivot == 0.0 || !pivot.is_finite() {
            return None;
        }
        c[i] = sup[i] / pivot;
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / pivot;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    Some(x)
}

/// Solve a tridiagonal system augmented with one extra entry in the first
/// row (column 2) and one in the last row (column n-3), as produced by
/// second-order one-sided boundary stencils. The corners are eliminated
/// against the adjacent rows, then the Thomas algorithm runs.
pub fn solve_bordered_tridiagonal(
    sub: &[f64],
    diag: &[f64],
    sup: &[f64],
    corner_first: f64,
    corner_last: f64,
    rhs: &[f64],
) -> Option<Vec<f64>> {
    let n = diag.len();
    if n < 3 {
        return solve_tridiagonal(sub, diag, sup, rhs);
    }
    let mut sub = sub.to_vec();
    let mut diag = diag.to_vec();
    let mut sup = sup.to_vec();
    let mut rhs = rhs.to_vec();
    if corner_first != 0.0 {
        // row0 -= (corner_first / sup[1]) * row1
        if sup[1] == 0.0 {
            return None;
        }
        let f = corner_first / sup[1];
        diag[0] -= f * sub[1];
        sup[0] -= f * diag[1];
        rhs[0] -= f * rhs[1];
    }
    if corner_last != 0.0 {
        if sub[n - 2] == 0.0 {
            return None;
        }
        let f = corner_last / sub[n - 2];
        sub[n - 1] -= f * diag[n - 2];
        diag[n - 1] -= f * sup[n - 2];
        rhs[n - 1] -= f * rhs[n - 2];
    }
    solve_tridiagonal(&sub, &diag, &sup, &rhs)
}

const PIVOT_GUARD: f64 = 1e-300;

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `lambda`, via the Sturm sequence of LDLT pivots.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `count` smallest eigenvalues of a symmetric tridiagonal matrix,
/// each located by bisection on the Sturm count within Gershgorin bounds.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Vec<f64> {
    let n = diag.len();
    let count = count.min(n);
    if count == 0 {
        return Vec::new();
    }
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    lo -= 1.0;
    hi += 1.0;

    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut a = if let Some(&prev) = out.last() { prev } else { lo };
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count(diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}
