//! Self-verification suite: the ten acceptance checks plus a handful of
//! module-level invariant spot checks, shared by `pdha verify` and the
//! acceptance test target.
//!
//! Check 1 asserts the published Fig. 7 reference pair (1.520, 4.493) as
//! stated. The computed second eigenvalue is 4.94331, which matches the
//! classical second PdHA literature value 4.9433098221 and the independent
//! finite-difference route; the 4.493 reference appears to be a digit
//! transposition of 4.943, so that check reports FAIL with the analysis in
//! its detail line rather than being loosened to pass.

use std::time::Instant;

use pdha::eigensolver::{
    count_nodes, orthogonality, solve_fd_matrix, solve_robin_eigen, solve_slope_normalized_all,
    ClosureCondition, SolverConfig,
};
use pdha::grid::linspace;
use pdha::landscape::{
    characteristic_exponents, coefficients_dirichlet, coefficients_neumann, landscape_fd,
    robin_coefficients_closed_form, solve_coefficients_robin, ClosedFormLandscape,
};
use pdha::liouville::{classical_canonical, classical_shift, Branch, CanonicalProblem};
use pdha::problem::{NormalizedInvariant, RobinBC};
use pdha::DOMAIN_END;

use crate::sweep::{run_sweep, sweep_csv, SweepConfig};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: String,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: &str, name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            id: id.to_string(),
            name,
            passed,
            detail,
        }
    }
}

/// Frozen pseudo-random (ĉ, b̂) grid for the spectral-structure checks.
const SPECTRAL_CASES: [(f64, f64); 20] = [
    (1.2567, 2.1797),
    (0.6601, 0.9534),
    (1.8879, 2.0873),
    (1.0918, 0.538),
    (1.1102, 1.209),
    (0.8202, 2.8681),
    (0.2009, 4.2771),
    (0.9974, 5.6412),
    (0.9139, 1.6781),
    (0.2092, 0.3723),
    (1.1642, 5.4648),
    (0.1008, 2.919),
    (1.771, 2.6459),
    (0.1733, 1.4155),
    (0.1877, 0.575),
    (1.8947, 3.2302),
    (1.5292, 1.4275),
    (0.4135, 3.6613),
    (0.4405, 2.299),
    (0.1476, 1.0005),
];

/// Frozen pseudo-random (ĉ, b̂, BC kind) cases for the closed-form-vs-oracle
/// check; kind 0 = Dirichlet, 1 = Neumann (slopes ±1), 2 = Robin.
const LANDSCAPE_CASES: [(f64, f64, u8); 20] = [
    (1.5676, 2.7783, 2),
    (0.5464, 3.9489, 1),
    (0.9749, 5.1559, 0),
    (0.1442, 3.4083, 2),
    (0.4333, 5.754, 0),
    (1.3547, 2.4763, 2),
    (0.6201, 2.9846, 1),
    (1.7828, 0.93, 2),
    (1.8406, 1.8615, 2),
    (0.9192, 3.0909, 1),
    (1.5918, 4.6029, 2),
    (1.8426, 2.1323, 0),
    (1.1242, 1.682, 2),
    (1.3364, 2.9723, 1),
    (0.1287, 4.4594, 2),
    (1.3298, 0.2148, 2),
    (0.7384, 3.6484, 1),
    (0.1971, 5.7589, 1),
    (1.7907, 2.4912, 2),
    (1.5952, 4.5709, 0),
];

fn q_of(c_hat: f64, b_hat: f64) -> impl Fn(f64) -> f64 {
    move |z: f64| c_hat / (z + b_hat) / (z + b_hat)
}

fn landscape_bc(kind: u8) -> (RobinBC, RobinBC) {
    match kind {
        0 => (RobinBC::dirichlet(0.0), RobinBC::dirichlet(0.0)),
        1 => (RobinBC::neumann(1.0), RobinBC::neumann(-1.0)),
        _ => (
            RobinBC::new(1.0, 0.5, 0.2).expect("valid"),
            RobinBC::new(1.0, -0.5, 0.1).expect("valid"),
        ),
    }
}

/// Classical PdHA Dirichlet spectrum against the published reference pair.
pub fn criterion_01_classical_spectrum() -> CriterionResult {
    let start = Instant::now();
    let cfg = SolverConfig::default();
    let bc = RobinBC::dirichlet(0.0);
    let outcome = solve_robin_eigen(&q_of(1.0, 0.1), &bc, &bc, 1, &cfg);
    let elapsed = start.elapsed().as_secs_f64();
    match outcome {
        Ok(pairs) => {
            let (l0, l1) = (pairs[0].lambda, pairs[1].lambda);
            let ok0 = (l0 - 1.520).abs() <= 0.005;
            let ok1 = (l1 - 4.493).abs() <= 0.005;
            let fast = elapsed < 1.0;
            let mut detail = format!(
                "lambda0={l0:.6} (target 1.520+-0.005: {}), lambda1={l1:.6} (target 4.493+-0.005: {}), {elapsed:.3}s",
                pass_str(ok0),
                pass_str(ok1)
            );
            if !ok1 {
                detail.push_str(
                    "; computed lambda1 matches the classical second PdHA reference \
                     4.9433098221 and the finite-difference route; the 4.493 target \
                     appears to be a digit transposition of 4.943",
                );
            }
            CriterionResult::new(
                "1",
                "classical Dirichlet spectrum",
                ok0 && ok1 && fast,
                detail,
            )
        }
        Err(e) => CriterionResult::new("1", "classical Dirichlet spectrum", false, e.to_string()),
    }
}

/// Dirichlet family at b̂ = 0.5 and 6 against the published references.
pub fn criterion_02_dirichlet_family() -> CriterionResult {
    let start = Instant::now();
    let cfg = SolverConfig::default();
    let bc = RobinBC::dirichlet(0.0);
    let targets = [(0.5, 1.297, 4.416), (6.0, 1.018, 4.018)];
    let mut detail = String::new();
    let mut passed = true;
    for (b_hat, t0, t1) in targets {
        match solve_robin_eigen(&q_of(1.0, b_hat), &bc, &bc, 1, &cfg) {
            Ok(pairs) => {
                let ok = (pairs[0].lambda - t0).abs() <= 0.005
                    && (pairs[1].lambda - t1).abs() <= 0.005;
                passed &= ok;
                detail.push_str(&format!(
                    "b={b_hat}: ({:.4}, {:.4}) vs ({t0}, {t1}) {}; ",
                    pairs[0].lambda,
                    pairs[1].lambda,
                    pass_str(ok)
                ));
            }
            Err(e) => {
                passed = false;
                detail.push_str(&format!("b={b_hat}: {e}; "));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    passed &= elapsed < 2.0;
    detail.push_str(&format!("{elapsed:.3}s"));
    CriterionResult::new("2", "Dirichlet family references", passed, detail)
}

/// Analytic estimator calibration in the ĉ → 0 limit via the Robin path.
pub fn criterion_03_estimator_calibration() -> CriterionResult {
    let left = RobinBC::dirichlet(0.0);
    let right = RobinBC::dirichlet(0.0);
    let outcome = ClosedFormLandscape::robin(1.0, 0.0, &left, &right)
        .and_then(|w| w.estimate_lambda0());
    match outcome {
        Ok(est) => {
            let expected = 10.0 / (DOMAIN_END * DOMAIN_END);
            let err = (est.lambda0_est - expected).abs();
            let over = (est.lambda0_est - 1.0) - (expected - 1.0);
            let passed = err < 1e-10 && over.abs() < 1e-10;
            CriterionResult::new(
                "3",
                "estimator calibration at q=0",
                passed,
                format!(
                    "lambda0_est={:.12} vs 10/pi^2={expected:.12}, |diff|={err:.2e}",
                    est.lambda0_est
                ),
            )
        }
        Err(e) => CriterionResult::new("3", "estimator calibration at q=0", false, e.to_string()),
    }
}

/// Every Dirichlet sweep row overestimates its numerical eigenvalue, with
/// bounded relative excess.
pub fn criterion_04_overestimation_sweep() -> CriterionResult {
    let start = Instant::now();
    let cfg = SweepConfig::dirichlet_default();
    let rows = run_sweep(&cfg);
    let mut failures = 0usize;
    let mut worst_rel: f64 = 0.0;
    let mut under = 0usize;
    for row in &rows {
        match (row.lambda0_est, row.lambda0_num, &row.error) {
            (Some(est), Some(num), None) => {
                if est < num {
                    under += 1;
                }
                worst_rel = worst_rel.max((est - num) / num);
            }
            _ => failures += 1,
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let passed = failures == 0 && under == 0 && worst_rel <= 0.25 && elapsed < 30.0;
    CriterionResult::new(
        "4",
        "overestimation across Dirichlet sweep",
        passed,
        format!(
            "{} rows, {failures} failed, {under} underestimates, max rel overestimate {:.4}, {elapsed:.2}s",
            rows.len(),
            worst_rel
        ),
    )
}

/// Closed-form landscape against the finite-difference oracle on the frozen
/// case set: sup error at N = 4000 and observed order from N = 500 → 1000.
pub fn criterion_05_closed_form_vs_oracle() -> CriterionResult {
    let mut worst_sup: f64 = 0.0;
    let mut worst_order = f64::INFINITY;
    let mut detail_err = None;
    for &(c_hat, b_hat, kind) in &LANDSCAPE_CASES {
        let (left, right) = landscape_bc(kind);
        let closed = match kind {
            0 => ClosedFormLandscape::dirichlet(b_hat, c_hat, 0.0, 0.0),
            1 => ClosedFormLandscape::neumann(b_hat, c_hat, 1.0, -1.0),
            _ => ClosedFormLandscape::robin(b_hat, c_hat, &left, &right),
        };
        let closed = match closed {
            Ok(w) => w,
            Err(e) => {
                detail_err = Some(format!("({c_hat},{b_hat},{kind}): {e}"));
                break;
            }
        };
        let sup = |n: usize| -> Result<f64, String> {
            let fd = landscape_fd(q_of(c_hat, b_hat), &left, &right, n).map_err(|e| e.to_string())?;
            Ok(fd
                .grid
                .iter()
                .zip(fd.values.iter())
                .map(|(z, v)| (v - closed.eval(*z)).abs())
                .fold(0.0, f64::max))
        };
        match (sup(4000), sup(500), sup(1000)) {
            (Ok(e4000), Ok(e500), Ok(e1000)) => {
                worst_sup = worst_sup.max(e4000);
                worst_order = worst_order.min((e500 / e1000).log2());
            }
            _ => {
                detail_err = Some(format!("({c_hat},{b_hat},{kind}): oracle solve failed"));
                break;
            }
        }
    }
    let passed = detail_err.is_none() && worst_sup < 1e-5 && worst_order >= 1.9;
    CriterionResult::new(
        "5",
        "closed form vs finite-difference oracle",
        passed,
        detail_err.unwrap_or(format!(
            "20 cases: worst sup error {worst_sup:.2e} (N=4000), worst observed order {worst_order:.3}"
        )),
    )
}

fn lcg_stream(seed: u64) -> impl FnMut() -> f64 {
    let mut state = seed;
    move || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Transcribed Robin quotients equal the direct 2×2 solve; Dirichlet and
/// Neumann closed forms equal their Robin specializations.
pub fn criterion_06_formula_transcription() -> CriterionResult {
    let mut draw = lcg_stream(0xA409_3822_299F_31D0);
    let mut checked = 0usize;
    let mut worst: f64 = 0.0;
    let mut attempts = 0usize;
    while checked < 100 && attempts < 10_000 {
        attempts += 1;
        let b_hat = 0.1 + 5.9 * draw();
        let c_hat = 1.9 * draw();
        let coeff = |d: &mut dyn FnMut() -> f64| -2.0 + 4.0 * d();
        let (a0, a1, b0, b1) = (coeff(&mut draw), coeff(&mut draw), coeff(&mut draw), coeff(&mut draw));
        let (w0, w1) = (coeff(&mut draw), coeff(&mut draw));
        if a0.abs() + a1.abs() < 0.1 || b0.abs() + b1.abs() < 0.1 {
            continue;
        }
        // skip near-singular boundary systems; both routes degenerate there
        let (p1, p2) = characteristic_exponents(c_hat);
        let pb = DOMAIN_END + b_hat;
        let m11 = b_hat.powf(p1) * (a0 + a1 * p1 / b_hat);
        let m12 = b_hat.powf(p2) * (a0 + a1 * p2 / b_hat);
        let m21 = pb.powf(p1) * (b0 + b1 * p1 / pb);
        let m22 = pb.powf(p2) * (b0 + b1 * p2 / pb);
        let det = m11 * m22 - m12 * m21;
        if det.abs() <= 1e-6 * (m11 * m22).abs().max((m12 * m21).abs()) {
            continue;
        }
        let left = RobinBC::new(a0, a1, w0).expect("non-degenerate");
        let right = RobinBC::new(b0, b1, w1).expect("non-degenerate");
        let solved = solve_coefficients_robin(b_hat, c_hat, &left, &right);
        let formula = robin_coefficients_closed_form(b_hat, c_hat, &left, &right);
        match (solved, formula) {
            (Ok(s), Ok(f)) => {
                let scale = s.0.abs().max(s.1.abs()).max(1e-300);
                worst = worst.max((s.0 - f.0).abs() / scale).max((s.1 - f.1).abs() / scale);
                checked += 1;
            }
            _ => continue,
        }
    }
    let mut worst_spec: f64 = 0.0;
    let mut draw2 = lcg_stream(0x082E_FA98_EC4E_6C89);
    for _ in 0..20 {
        let b_hat = 0.1 + 5.9 * draw2();
        let c_hat = 0.05 + 1.85 * draw2();
        let (w0, w1) = (-2.0 + 4.0 * draw2(), -2.0 + 4.0 * draw2());
        let (rd1, rd2) = solve_coefficients_robin(
            b_hat,
            c_hat,
            &RobinBC::dirichlet(w0),
            &RobinBC::dirichlet(w1),
        )
        .expect("solvable");
        let (d1, d2) = coefficients_dirichlet(b_hat, c_hat, w0, w1).expect("solvable");
        let (rn1, rn2) = solve_coefficients_robin(
            b_hat,
            c_hat,
            &RobinBC::neumann(w0),
            &RobinBC::neumann(w1),
        )
        .expect("solvable");
        let (n1, n2) = coefficients_neumann(b_hat, c_hat, w0, w1).expect("solvable");
        let scale_d = rd1.abs().max(rd2.abs()).max(1e-300);
        let scale_n = rn1.abs().max(rn2.abs()).max(1e-300);
        worst_spec = worst_spec
            .max((rd1 - d1).abs() / scale_d)
            .max((rd2 - d2).abs() / scale_d)
            .max((rn1 - n1).abs() / scale_n)
            .max((rn2 - n2).abs() / scale_n);
    }
    let passed = checked == 100 && worst < 1e-12 && worst_spec < 1e-12;
    CriterionResult::new(
        "6",
        "coefficient formula transcription",
        passed,
        format!(
            "{checked}/100 Robin cases, worst rel diff {worst:.2e}; specializations worst {worst_spec:.2e}"
        ),
    )
}

/// Canonical-problem construction for the classical instance and the
/// invariant function recovered from v by central differences.
pub fn criterion_07_liouville_round_trip() -> CriterionResult {
    let minus = classical_canonical();
    let z1_ok = (minus.z1() - 34.4068).abs() <= 1e-3;
    let d_ok = (minus.d().abs() / 1.37e-5 - 1.0).abs() <= 0.01;
    let plus = CanonicalProblem::new(1.0, 0.1, 1.0, 0.0, Branch::Plus).expect("valid");
    let mut worst_fd: f64 = 0.0;
    let mut worst_branch_gap: f64 = 0.0;
    for i in 1..=10 {
        let zhat = DOMAIN_END * i as f64 / 11.0;
        let qm = minus.invariant_fd(zhat, 1e-4).expect("interior");
        let qp = plus.invariant_fd(zhat, 1e-4).expect("interior");
        let analytic = minus.invariant_analytic(zhat);
        worst_fd = worst_fd.max((qm - analytic).abs());
        worst_branch_gap = worst_branch_gap.max((qm - qp).abs());
    }
    let passed = z1_ok && d_ok && worst_fd <= 1e-6 && worst_branch_gap <= 1e-6;
    CriterionResult::new(
        "7",
        "Liouville transformation round trip",
        passed,
        format!(
            "z1={:.6} ({}), |d|={:.4e} ({}), worst invariant error {worst_fd:.2e}, branch gap {worst_branch_gap:.2e}",
            minus.z1(),
            pass_str(z1_ok),
            minus.d().abs(),
            pass_str(d_ok)
        ),
    )
}

/// Node counts, orthogonality, cross-method eigenvalue agreement, and the
/// discrete operator residual across the frozen spectral case grid.
pub fn criterion_08_spectral_structure() -> CriterionResult {
    let cfg = SolverConfig::default();
    let bc = RobinBC::dirichlet(0.0);
    let mut worst_gap: f64 = 0.0;
    let mut worst_ortho: f64 = 0.0;
    let mut worst_residual: f64 = 0.0;
    let mut detail_err = None;
    for &(c_hat, b_hat) in &SPECTRAL_CASES {
        let q = q_of(c_hat, b_hat);
        let pairs = match solve_robin_eigen(&q, &bc, &bc, 4, &cfg) {
            Ok(p) => p,
            Err(e) => {
                detail_err = Some(format!("({c_hat},{b_hat}): {e}"));
                break;
            }
        };
        for (n, pair) in pairs.iter().enumerate() {
            if pair.node_count != n || count_nodes(&pair.values) != n {
                detail_err = Some(format!(
                    "({c_hat},{b_hat}): node count {} at index {n}",
                    pair.node_count
                ));
            }
        }
        let cross = orthogonality(&pairs[0], &pairs[1]).expect("same grid");
        worst_ortho = worst_ortho.max(cross.abs());
        let fd = solve_fd_matrix(&q, &bc, &bc, 1, 4000).expect("assembles");
        for pair in pairs.iter().take(2) {
            worst_gap = worst_gap.max((pair.lambda - fd[pair.index]).abs());
            let h = pair.grid[1] - pair.grid[0];
            let y = &pair.values;
            for i in 1..y.len() - 1 {
                let d2 = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h);
                let res = -d2 + (q(pair.grid[i]) - pair.lambda) * y[i];
                worst_residual = worst_residual.max(res.abs());
            }
        }
    }
    let passed =
        detail_err.is_none() && worst_gap < 1e-4 && worst_ortho < 1e-6 && worst_residual < 1e-5;
    CriterionResult::new(
        "8",
        "spectral structure across case grid",
        passed,
        detail_err.unwrap_or(format!(
            "20 cases, nodes 0..=4 correct, worst |shoot-fd| {worst_gap:.2e}, worst |<e0,e1>| {worst_ortho:.2e}, worst discrete residual {worst_residual:.2e}"
        )),
    )
}

/// Fig. 8 slope-mode targets, λ₀ ordered by b̂; never printed as reproduced.
const SLOPE_TARGETS: [(f64, f64, f64); 3] =
    [(0.3, 0.718, 2.082), (0.5, 0.500, 1.371), (6.0, 0.254, 1.119)];

/// Neumann slope mode: unit-L2 closure must converge with λ₀ decreasing in
/// b̂; distances to the published six eigenvalues are documented per closure.
pub fn criterion_09_neumann_mode() -> CriterionResult {
    let cfg = SolverConfig {
        lambda_scan: (0.02, 3.8, 0.02),
        ..SolverConfig::default()
    };
    let mut unit_lambda0 = Vec::new();
    let mut doc = String::new();
    let mut converged = true;
    let closures = [
        ("unit_l2", ClosureCondition::UnitL2),
        ("left_value(1)", ClosureCondition::LeftValue(1.0)),
        ("right_value(0)", ClosureCondition::RightValue(0.0)),
    ];
    for (tag, closure) in closures {
        for (b_hat, t0, t1) in SLOPE_TARGETS {
            let q = q_of(1.0, b_hat);
            match solve_slope_normalized_all(&q, 1.0, -1.0, closure, &cfg) {
                Ok(pairs) => {
                    let lambdas: Vec<f64> = pairs.iter().map(|p| p.lambda).collect();
                    let d0 = lambdas
                        .iter()
                        .map(|l| (l - t0).abs())
                        .fold(f64::INFINITY, f64::min);
                    let d1 = lambdas
                        .iter()
                        .map(|l| (l - t1).abs())
                        .fold(f64::INFINITY, f64::min);
                    if matches!(closure, ClosureCondition::UnitL2) {
                        unit_lambda0.push(lambdas[0]);
                    }
                    doc.push_str(&format!(
                        "[{tag} b={b_hat}] roots {:?}, dist to ({t0}, {t1}) = ({d0:.3}, {d1:.3}); ",
                        lambdas
                            .iter()
                            .map(|l| (l * 1e4).round() / 1e4)
                            .collect::<Vec<_>>()
                    ));
                }
                Err(e) => {
                    if matches!(closure, ClosureCondition::UnitL2) {
                        converged = false;
                    }
                    doc.push_str(&format!("[{tag} b={b_hat}] no solution ({e}); "));
                }
            }
        }
    }
    let decreasing = unit_lambda0.len() == 3
        && unit_lambda0[0] > unit_lambda0[1]
        && unit_lambda0[1] > unit_lambda0[2];
    let passed = converged && decreasing;
    CriterionResult::new(
        "9",
        "Neumann slope mode under unit-L2 closure",
        passed,
        format!(
            "unit_l2 lambda0 by b: {:?} (decreasing: {}); published-value distances per closure: {doc}",
            unit_lambda0
                .iter()
                .map(|l| (l * 1e4).round() / 1e4)
                .collect::<Vec<_>>(),
            pass_str(decreasing)
        ),
    )
}

/// Two full sweep constructions must produce byte-identical CSV.
pub fn criterion_10_sweep_determinism() -> CriterionResult {
    let mut dirichlet = SweepConfig::dirichlet_default();
    dirichlet.c_hats = vec![1.0];
    dirichlet.b_step = 0.3;
    let mut neumann = SweepConfig::neumann_default();
    neumann.b_lo = 0.3;
    neumann.b_hi = 2.0;
    neumann.b_step = 1.7;
    let render = |cfg: &SweepConfig| sweep_csv(cfg, &run_sweep(cfg));
    let first = format!("{}{}", render(&dirichlet), render(&neumann));
    let second = format!("{}{}", render(&dirichlet), render(&neumann));
    let passed = first == second && !first.is_empty();
    CriterionResult::new(
        "10",
        "sweep output determinism",
        passed,
        format!(
            "two runs of {} bytes: {}",
            first.len(),
            if passed { "identical" } else { "DIFFER" }
        ),
    )
}

/// Quick module-level invariant spot checks reported alongside the criteria.
pub fn extra_checks() -> Vec<CriterionResult> {
    let mut out = Vec::new();

    let (phi1, _) = characteristic_exponents(1.0);
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    out.push(CriterionResult::new(
        "inv-a",
        "golden ratio exponent at c_hat=1",
        (phi1 - golden).abs() < 1e-14,
        format!("phi1={phi1:.16}"),
    ));

    let cfg = SolverConfig::default();
    let bc = RobinBC::dirichlet(0.0);
    let free = solve_robin_eigen(&|_| 0.0, &bc, &bc, 1, &cfg);
    let ok = free
        .as_ref()
        .map(|p| (p[0].lambda - 1.0).abs() < 1e-6 && (p[1].lambda - 4.0).abs() < 1e-6)
        .unwrap_or(false);
    out.push(CriterionResult::new(
        "inv-b",
        "free-particle Dirichlet spectrum {1, 4}",
        ok,
        free.map(|p| format!("({:.8}, {:.8})", p[0].lambda, p[1].lambda))
            .unwrap_or_else(|e| e.to_string()),
    ));

    let d = classical_shift();
    let cp = CanonicalProblem::new(1.0, 0.1, 1.0, d, Branch::Minus).expect("valid");
    let grid = linspace(0.0, DOMAIN_END, 51);
    let worst = grid
        .iter()
        .map(|z| {
            let v = cp.v_hat(*z);
            let u = cp.u_hat(*z);
            ((u - v.powi(-4)) / u).abs()
        })
        .fold(0.0, f64::max);
    out.push(CriterionResult::new(
        "inv-c",
        "u = v^(-4) pointwise",
        worst < 1e-13,
        format!("worst rel diff {worst:.2e}"),
    ));

    let p = NormalizedInvariant::new(0.1, 1.0).expect("valid");
    let w = ClosedFormLandscape::dirichlet(0.1, 1.0, 0.0, 0.0).expect("solvable");
    let residual = linspace(0.0, DOMAIN_END, 1001)
        .iter()
        .map(|z| (-w.second_derivative(*z) + p.q(*z) * w.eval(*z) - 1.0).abs())
        .fold(0.0, f64::max);
    out.push(CriterionResult::new(
        "inv-d",
        "landscape ODE residual (classical)",
        residual < 1e-8,
        format!("max |residual| {residual:.2e}"),
    ));

    out
}

pub fn run_all() -> Vec<CriterionResult> {
    let mut results = vec![
        criterion_01_classical_spectrum(),
        criterion_02_dirichlet_family(),
        criterion_03_estimator_calibration(),
        criterion_04_overestimation_sweep(),
        criterion_05_closed_form_vs_oracle(),
        criterion_06_formula_transcription(),
        criterion_07_liouville_round_trip(),
        criterion_08_spectral_structure(),
        criterion_09_neumann_mode(),
        criterion_10_sweep_determinism(),
    ];
    results.extend(extra_checks());
    results
}

fn pass_str(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Render the pass/fail table.
pub fn report(results: &[CriterionResult]) -> String {
    let mut out = String::from("id     status  name\n");
    for r in results {
        out.push_str(&format!(
            "{:<6} {:<7} {}\n       {}\n",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        ));
    }
    let criteria: Vec<&CriterionResult> =
        results.iter().filter(|r| !r.id.starts_with("inv")).collect();
    let passed = criteria.iter().filter(|r| r.passed).count();
    out.push_str(&format!(
        "{passed}/{} acceptance checks passed\n",
        criteria.len()
    ));
    out
}
