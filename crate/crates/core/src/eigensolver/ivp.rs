//! Adaptive Dormand–Prince 5(4) integration of −y″ + q(ẑ)y = λy written as
//! the first-order pair (y, y′). Steps are clamped to the output grid so the
//! trajectory is sampled exactly at the requested points.

use super::EigenError;

/// Solution samples on the output grid.
#[derive(Debug, Clone)]
pub(crate) struct Trajectory {
    pub y: Vec<f64>,
    pub yp: Vec<f64>,
}

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
// b5 - b4: coefficients of the embedded error estimate.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

type State = [f64; 2];

#[inline]
fn rhs<F: Fn(f64) -> f64>(potential: &F, lambda: f64, z: f64, s: State) -> State {
    [s[1], (potential(z) - lambda) * s[0]]
}

/// Integrate from `grid[0]` to the end of `grid`, recording (y, y′) at every
/// grid point. Local error per step is controlled to `tol` (used as both
/// absolute and relative weight).
pub(crate) fn integrate_grid<F: Fn(f64) -> f64>(
    potential: &F,
    lambda: f64,
    y0: f64,
    yp0: f64,
    grid: &[f64],
    tol: f64,
) -> Result<Trajectory, EigenError> {
    assert!(grid.len() >= 2);
    let span = grid[grid.len() - 1] - grid[0];
    let h_min = 1e-14 * span.abs().max(1.0);

    let mut y = Vec::with_capacity(grid.len());
    let mut yp = Vec::with_capacity(grid.len());
    let mut state: State = [y0, yp0];
    y.push(state[0]);
    yp.push(state[1]);

    let mut z = grid[0];
    let mut h = (grid[1] - grid[0]).min(span / 100.0);
    let mut k1 = rhs(potential, lambda, z, state);

    for &target in &grid[1..] {
        while z < target {
            let step = h.min(target - z);
            let (next, err, k7) = dp_step(potential, lambda, z, state, step, k1, tol);
            if err <= 1.0 {
                z += step;
                state = next;
                k1 = k7; // first-same-as-last
                h = step * (0.9 * err.max(1e-10).powf(-0.2)).clamp(0.2, 5.0);
            } else {
                h = step * (0.9 * err.powf(-0.2)).clamp(0.2, 0.9);
                if h < h_min {
                    return Err(EigenError::StepFailure { z, lambda });
                }
            }
        }
        y.push(state[0]);
        yp.push(state[1]);
    }
    Ok(Trajectory { y, yp })
}

#[inline]
#[allow(clippy::needless_range_loop)]
fn dp_step<F: Fn(f64) -> f64>(
    potential: &F,
    lambda: f64,
    z: f64,
    s: State,
    h: f64,
    k1: State,
    tol: f64,
) -> (State, f64, State) {
    let stage = |coeffs: &[f64], ks: &[State]| -> State {
        let mut out = s;
        for (c, k) in coeffs.iter().zip(ks.iter()) {
            out[0] += h * c * k[0];
            out[1] += h * c * k[1];
        }
        out
    };
    let k2 = rhs(potential, lambda, z + C[1] * h, stage(&A2, &[k1]));
    let k3 = rhs(potential, lambda, z + C[2] * h, stage(&A3, &[k1, k2]));
    let k4 = rhs(potential, lambda, z + C[3] * h, stage(&A4, &[k1, k2, k3]));
    let k5 = rhs(potential, lambda, z + C[4] * h, stage(&A5, &[k1, k2, k3, k4]));
    let k6 = rhs(
        potential,
        lambda,
        z + C[5] * h,
        stage(&A6, &[k1, k2, k3, k4, k5]),
    );
    let ks = [k1, k2, k3, k4, k5, k6, [0.0, 0.0]];

    let mut next = s;
    for i in 0..6 {
        next[0] += h * B5[i] * ks[i][0];
        next[1] += h * B5[i] * ks[i][1];
    }
    let k7 = rhs(potential, lambda, z + h, next);
    let ks = [k1, k2, k3, k4, k5, k6, k7];

    let mut err: f64 = 0.0;
    for comp in 0..2 {
        let mut e = 0.0;
        for i in 0..7 {
            e += E[i] * ks[i][comp];
        }
        e *= h;
        let weight = tol + tol * s[comp].abs().max(next[comp].abs());
        err = err.max((e / weight).abs());
    }
    (next, err, k7)
}
