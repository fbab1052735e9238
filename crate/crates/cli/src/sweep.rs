//! Parameter sweeps pairing the landscape eigenvalue estimate with the
//! numerically computed spectrum, row by row over (ĉ, b̂).

use std::fmt;

use pdha::eigensolver::{
    solve_robin_eigen, solve_slope_normalized_all, ClosureCondition, SolverConfig,
};
use pdha::landscape::ClosedFormLandscape;
use pdha::problem::{NormalizedInvariant, RobinBC};

use crate::csvfmt::{fmt_g12, fmt_opt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepBc {
    Dirichlet,
    Neumann,
}

impl fmt::Display for SweepBc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepBc::Dirichlet => write!(f, "dirichlet"),
            SweepBc::Neumann => write!(f, "neumann"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub bc: SweepBc,
    pub c_hats: Vec<f64>,
    pub b_lo: f64,
    pub b_hi: f64,
    pub b_step: f64,
    /// Slope data for the Neumann mode (landscape and eigenfunctions).
    pub slopes: (f64, f64),
    pub closure: ClosureCondition,
    pub solver: SolverConfig,
}

impl SweepConfig {
    /// Dirichlet defaults: ĉ ∈ {0.5, 1, 1.9}, b̂ from 0.1 to 6.0 step 0.1.
    pub fn dirichlet_default() -> Self {
        Self {
            bc: SweepBc::Dirichlet,
            c_hats: vec![0.5, 1.0, 1.9],
            b_lo: 0.1,
            b_hi: 6.0,
            b_step: 0.1,
            slopes: (1.0, -1.0),
            closure: ClosureCondition::UnitL2,
            solver: SolverConfig::default(),
        }
    }

    /// Neumann defaults: ĉ = 1, slopes (1, −1), unit-L2 closure, and a scan
    /// window sized for the two lowest solutions.
    pub fn neumann_default() -> Self {
        Self {
            bc: SweepBc::Neumann,
            c_hats: vec![1.0],
            b_lo: 0.1,
            b_hi: 6.0,
            b_step: 0.1,
            slopes: (1.0, -1.0),
            closure: ClosureCondition::UnitL2,
            solver: SolverConfig {
                lambda_scan: (0.02, 8.0, 0.04),
                ..SolverConfig::default()
            },
        }
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if !(self.b_lo > 0.0 && self.b_step > 0.0 && self.b_lo <= self.b_hi) {
            anyhow::bail!("b range requires 0 < lo <= hi and step > 0");
        }
        if self.c_hats.is_empty() {
            anyhow::bail!("at least one c_hat required");
        }
        if self.c_hats.iter().any(|c| (*c - 2.0).abs() < 1e-12) {
            anyhow::bail!("c_hat = 2 is resonant and excluded");
        }
        self.solver.check().map_err(|e| anyhow::anyhow!(e))?;
        Ok(())
    }

    pub fn b_values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            let b = self.b_lo + i as f64 * self.b_step;
            if b > self.b_hi + 1e-9 {
                break;
            }
            out.push(b);
            i += 1;
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub bc: SweepBc,
    pub c_hat: f64,
    pub b_hat: f64,
    pub lambda0_est: Option<f64>,
    pub lambda0_num: Option<f64>,
    pub lambda1_num: Option<f64>,
    pub rel_overestimate: Option<f64>,
    pub error: Option<String>,
}

/// Landscape estimate plus numerical λ₀, λ₁ for every (ĉ, b̂) pair, emitted in
/// deterministic (ĉ, b̂) order. Per-row failures are recorded in the row and
/// the sweep continues.
pub fn run_sweep(cfg: &SweepConfig) -> Vec<SweepRow> {
    let mut rows = Vec::new();
    for &c_hat in &cfg.c_hats {
        for b_hat in cfg.b_values() {
            rows.push(sweep_row(cfg, c_hat, b_hat));
        }
    }
    rows
}

fn sweep_row(cfg: &SweepConfig, c_hat: f64, b_hat: f64) -> SweepRow {
    let mut row = SweepRow {
        bc: cfg.bc,
        c_hat,
        b_hat,
        lambda0_est: None,
        lambda0_num: None,
        lambda1_num: None,
        rel_overestimate: None,
        error: None,
    };
    let outcome = (|| -> Result<(), String> {
        let invariant =
            NormalizedInvariant::new(b_hat, c_hat).map_err(|e| e.to_string())?;
        let q = move |z: f64| invariant.q(z);
        let (s0, s1) = cfg.slopes;
        let landscape = match cfg.bc {
            SweepBc::Dirichlet => ClosedFormLandscape::dirichlet(b_hat, c_hat, 0.0, 0.0),
            SweepBc::Neumann => ClosedFormLandscape::neumann(b_hat, c_hat, s0, s1),
        }
        .map_err(|e| e.to_string())?;
        row.lambda0_est = Some(
            landscape
                .estimate_lambda0()
                .map_err(|e| e.to_string())?
                .lambda0_est,
        );
        match cfg.bc {
            SweepBc::Dirichlet => {
                let bc = RobinBC::dirichlet(0.0);
                let pairs = solve_robin_eigen(&q, &bc, &bc, 1, &cfg.solver)
                    .map_err(|e| e.to_string())?;
                row.lambda0_num = Some(pairs[0].lambda);
                row.lambda1_num = Some(pairs[1].lambda);
            }
            SweepBc::Neumann => {
                let pairs = solve_slope_normalized_all(&q, s0, s1, cfg.closure, &cfg.solver)
                    .map_err(|e| e.to_string())?;
                row.lambda0_num = Some(pairs[0].lambda);
                row.lambda1_num = pairs.get(1).map(|p| p.lambda);
            }
        }
        if let (Some(est), Some(num)) = (row.lambda0_est, row.lambda0_num) {
            row.rel_overestimate = Some((est - num) / num);
        }
        Ok(())
    })();
    if let Err(message) = outcome {
        row.error = Some(message.replace(',', ";"));
    }
    row
}

fn closure_tag(c: ClosureCondition) -> String {
    match c {
        ClosureCondition::UnitL2 => "unit_l2".to_string(),
        ClosureCondition::LeftValue(g) => format!("left_value({})", fmt_g12(g)),
        ClosureCondition::RightValue(g) => format!("right_value({})", fmt_g12(g)),
    }
}

/// CSV for the sweep: one metadata comment line recording the grid, closure,
/// and solver settings, a header, then one line per row.
pub fn sweep_csv(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    let (lo, hi, step) = cfg.solver.lambda_scan;
    let mut out = String::new();
    out.push_str(&format!(
        "# pdha sweep bc={} closure={} s0={} s1={} b=[{},{}]:{} c_hats={} scan=[{},{}]:{} n_points={}\n",
        cfg.bc,
        closure_tag(cfg.closure),
        fmt_g12(cfg.slopes.0),
        fmt_g12(cfg.slopes.1),
        fmt_g12(cfg.b_lo),
        fmt_g12(cfg.b_hi),
        fmt_g12(cfg.b_step),
        cfg.c_hats.iter().map(|c| fmt_g12(*c)).collect::<Vec<_>>().join(";"),
        fmt_g12(lo),
        fmt_g12(hi),
        fmt_g12(step),
        cfg.solver.n_points,
    ));
    out.push_str("bc,c_hat,b_hat,lambda0_est,lambda0_num,lambda1_num,rel_overestimate,status\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.bc,
            fmt_g12(row.c_hat),
            fmt_g12(row.b_hat),
            fmt_opt(row.lambda0_est),
            fmt_opt(row.lambda0_num),
            fmt_opt(row.lambda1_num),
            fmt_opt(row.rel_overestimate),
            row.error.as_deref().unwrap_or("ok"),
        ));
    }
    out
}
