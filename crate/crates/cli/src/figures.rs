//! CSV data underlying each reference figure, using its fixed parameter
//! set. The first line of every file is a metadata comment recording the
//! figure id and its parameters, so a reader can recover the generating
//! configuration from the file alone.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context};

use pdha::eigensolver::{
    solve_robin_eigen, solve_slope_normalized_all, ClosureCondition, SolverConfig,
};
use pdha::grid::linspace;
use pdha::landscape::ClosedFormLandscape;
use pdha::liouville::classical_canonical;
use pdha::problem::{InvariantParams, NormalizedInvariant, RobinBC};
use pdha::DOMAIN_END;

use crate::csvfmt::fmt_g12;
use crate::sweep::{run_sweep, SweepBc, SweepConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    F1a,
    F1b,
    F2a,
    F2b,
    F3a,
    F3b,
    F4a,
    F4b,
    F5a,
    F5b,
    F6a,
    F6b,
    F7a,
    F7b,
    F8a,
    F8b,
}

impl FigureId {
    pub const ALL: [FigureId; 16] = [
        FigureId::F1a,
        FigureId::F1b,
        FigureId::F2a,
        FigureId::F2b,
        FigureId::F3a,
        FigureId::F3b,
        FigureId::F4a,
        FigureId::F4b,
        FigureId::F5a,
        FigureId::F5b,
        FigureId::F6a,
        FigureId::F6b,
        FigureId::F7a,
        FigureId::F7b,
        FigureId::F8a,
        FigureId::F8b,
    ];
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FigureId::F1a => "1a",
            FigureId::F1b => "1b",
            FigureId::F2a => "2a",
            FigureId::F2b => "2b",
            FigureId::F3a => "3a",
            FigureId::F3b => "3b",
            FigureId::F4a => "4a",
            FigureId::F4b => "4b",
            FigureId::F5a => "5a",
            FigureId::F5b => "5b",
            FigureId::F6a => "6a",
            FigureId::F6b => "6b",
            FigureId::F7a => "7a",
            FigureId::F7b => "7b",
            FigureId::F8a => "8a",
            FigureId::F8b => "8b",
        };
        write!(f, "{s}")
    }
}

impl FromStr for FigureId {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .iter()
            .copied()
            .find(|id| id.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| anyhow::anyhow!("unknown figure id {s:?} (expected 1a..8b)"))
    }
}

/// Recover (figure id, parameter string) from a generated file's first line.
pub fn parse_metadata(csv: &str) -> Option<(FigureId, String)> {
    let first = csv.lines().next()?;
    let rest = first.strip_prefix("# pdha figure=")?;
    let (id, params) = rest.split_once(' ')?;
    Some((id.parse().ok()?, params.to_string()))
}

const CURVE_POINTS: usize = 501;

fn metadata(id: FigureId, params: &str) -> String {
    format!("# pdha figure={id} {params}\n")
}

/// Build the CSV for one figure.
pub fn figure_csv(id: FigureId) -> anyhow::Result<String> {
    match id {
        FigureId::F1a => invariant_family_csv(id, &[0.1, 0.5, 1.0, 2.0], true),
        FigureId::F1b => invariant_family_csv(id, &[0.1, 1.0, 1.9], false),
        FigureId::F2a => canonical_u_csv(id),
        FigureId::F2b => classical_invariant_csv(id),
        FigureId::F3a => landscape_csv(id, &[0.1, 1.0, 2.0], SweepBc::Dirichlet, false),
        FigureId::F3b => landscape_csv(id, &[0.1, 1.0, 2.0], SweepBc::Dirichlet, true),
        FigureId::F4a => landscape_csv(id, &[0.3, 1.0, 2.0], SweepBc::Neumann, false),
        FigureId::F4b => landscape_csv(id, &[0.3, 1.0, 2.0], SweepBc::Neumann, true),
        FigureId::F5a => sweep_csv_for(id, SweepBc::Dirichlet, vec![0.5, 1.0, 1.9]),
        FigureId::F5b => sweep_csv_for(id, SweepBc::Neumann, vec![1.0]),
        FigureId::F6a => sweep_csv_for(id, SweepBc::Neumann, vec![0.1]),
        FigureId::F6b => sweep_csv_for(id, SweepBc::Neumann, vec![1.9]),
        FigureId::F7a => dirichlet_eigenfunction_csv(id, 0),
        FigureId::F7b => dirichlet_eigenfunction_csv(id, 1),
        FigureId::F8a => slope_eigenfunction_csv(id, 0),
        FigureId::F8b => slope_eigenfunction_csv(id, 1),
    }
}

/// Figs. 1a/1b: the invariant function for several b (fixed a = 1 = c) or
/// several c (fixed a = 1 = b).
fn invariant_family_csv(id: FigureId, values: &[f64], vary_b: bool) -> anyhow::Result<String> {
    let (tag, params) = if vary_b {
        ("b", format!("a=1 c=1 b={}", join(values)))
    } else {
        ("c", format!("a=1 b=1 c={}", join(values)))
    };
    let mut out = metadata(id, &params);
    out.push_str("zhat");
    for v in values {
        out.push_str(&format!(",q_{tag}{}", fmt_g12(*v)));
    }
    out.push('\n');
    let grid = linspace(0.0, DOMAIN_END, CURVE_POINTS);
    let family: Vec<InvariantParams> = values
        .iter()
        .map(|&v| {
            if vary_b {
                InvariantParams::new(1.0, v, 1.0, 2)
            } else {
                InvariantParams::new(1.0, 1.0, v, 2)
            }
        })
        .collect::<Result<_, _>>()
        .context("figure parameters")?;
    for z in grid {
        out.push_str(&fmt_g12(z));
        for p in &family {
            out.push_str(&format!(",{}", fmt_g12(p.q(z).expect("positive binomial"))));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Fig. 2a: the canonical coefficient u(z) of the classical instance on
/// [z0, z1].
fn canonical_u_csv(id: FigureId) -> anyhow::Result<String> {
    let cp = classical_canonical();
    let params = format!(
        "a=1 b=0.1 c=1 branch=minus d={} z0={} z1={}",
        fmt_g12(cp.d()),
        fmt_g12(cp.z0()),
        fmt_g12(cp.z1())
    );
    let mut out = metadata(id, &params);
    out.push_str("z,u\n");
    for z in linspace(cp.z0(), cp.z1(), CURVE_POINTS) {
        // clamp the left endpoint into the open domain of the power law
        let z_eval = if z <= cp.z0() {
            cp.z0() + 1e-12 * (cp.z1() - cp.z0())
        } else {
            z
        };
        let u = cp.u_of_z(z_eval).context("u evaluation")?;
        out.push_str(&format!("{},{}\n", fmt_g12(z), fmt_g12(u)));
    }
    Ok(out)
}

/// Fig. 2b: the classical invariant function.
fn classical_invariant_csv(id: FigureId) -> anyhow::Result<String> {
    let p = InvariantParams::new(1.0, 0.1, 1.0, 2).context("classical parameters")?;
    let mut out = metadata(id, "a=1 b=0.1 c=1");
    out.push_str("zhat,q\n");
    for z in linspace(0.0, DOMAIN_END, CURVE_POINTS) {
        out.push_str(&format!(
            "{},{}\n",
            fmt_g12(z),
            fmt_g12(p.q(z).expect("positive binomial"))
        ));
    }
    Ok(out)
}

/// Figs. 3-4: landscape functions (or effective potentials) at ĉ = 1 for the
/// reference b̂ sets; Dirichlet data ŵ(0) = 0 = ŵ(π), Neumann data
/// ŵ′(0) = 1 = −ŵ′(π). The effective potential column is empty where ŵ ≤ 0.
fn landscape_csv(
    id: FigureId,
    b_hats: &[f64],
    bc: SweepBc,
    effective: bool,
) -> anyhow::Result<String> {
    let c_hat = 1.0;
    let bc_params = match bc {
        SweepBc::Dirichlet => "bc=dirichlet w0=0 w1=0",
        SweepBc::Neumann => "bc=neumann s0=1 s1=-1",
    };
    let mut out = metadata(
        id,
        &format!("c_hat=1 b_hats={} {bc_params}", join(b_hats)),
    );
    let prefix = if effective { "W" } else { "w" };
    out.push_str("zhat");
    for b in b_hats {
        out.push_str(&format!(",{prefix}_b{}", fmt_g12(*b)));
    }
    out.push('\n');
    let solutions: Vec<ClosedFormLandscape> = b_hats
        .iter()
        .map(|&b| match bc {
            SweepBc::Dirichlet => ClosedFormLandscape::dirichlet(b, c_hat, 0.0, 0.0),
            SweepBc::Neumann => ClosedFormLandscape::neumann(b, c_hat, 1.0, -1.0),
        })
        .collect::<Result<_, _>>()
        .context("landscape construction")?;
    for z in linspace(0.0, DOMAIN_END, CURVE_POINTS) {
        out.push_str(&fmt_g12(z));
        for w in &solutions {
            let value = w.eval(z);
            if effective {
                out.push_str(&format!(",{}", crate::csvfmt::fmt_effective(value)));
            } else {
                out.push_str(&format!(",{}", fmt_g12(value)));
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// Figs. 5-6: eigenvalue sweeps. Reuses the sweep engine with each figure's
/// ĉ set and re-tags the metadata line with the figure id.
fn sweep_csv_for(id: FigureId, bc: SweepBc, c_hats: Vec<f64>) -> anyhow::Result<String> {
    let mut cfg = match bc {
        SweepBc::Dirichlet => SweepConfig::dirichlet_default(),
        SweepBc::Neumann => SweepConfig::neumann_default(),
    };
    cfg.c_hats = c_hats;
    cfg.validate()?;
    let rows = run_sweep(&cfg);
    let body = crate::sweep::sweep_csv(&cfg, &rows);
    let (first, rest) = body
        .split_once('\n')
        .expect("sweep csv has a metadata line");
    let tail = first
        .strip_prefix("# pdha sweep ")
        .expect("sweep metadata prefix");
    Ok(format!("{}{}\n", metadata(id, tail), rest.trim_end()))
}

/// Figs. 7a/7b: Dirichlet eigenfunctions of the given order at ĉ = 1 for
/// b̂ ∈ {0.1, 0.5, 6}; the eigenvalues go into the metadata line.
fn dirichlet_eigenfunction_csv(id: FigureId, order: usize) -> anyhow::Result<String> {
    let b_hats = [0.1, 0.5, 6.0];
    let cfg = SolverConfig::default();
    let bc = RobinBC::dirichlet(0.0);
    let mut columns = Vec::new();
    let mut lambdas = Vec::new();
    for &b in &b_hats {
        let invariant = NormalizedInvariant::new(b, 1.0).context("parameters")?;
        let q = move |z: f64| invariant.q(z);
        let pairs = solve_robin_eigen(&q, &bc, &bc, order, &cfg)
            .with_context(|| format!("eigensolve at b_hat={b}"))?;
        let pair = pairs.into_iter().nth(order).expect("requested order");
        lambdas.push(pair.lambda);
        columns.push(pair);
    }
    let params = format!(
        "c_hat=1 b_hats={} bc=dirichlet order={order} lambdas={}",
        join(&b_hats),
        join(&lambdas)
    );
    let mut out = metadata(id, &params);
    out.push_str("zhat");
    for b in &b_hats {
        out.push_str(&format!(",y_b{}", fmt_g12(*b)));
    }
    out.push('\n');
    let grid = &columns[0].grid;
    for (i, z) in grid.iter().enumerate() {
        out.push_str(&fmt_g12(*z));
        for pair in &columns {
            out.push_str(&format!(",{}", fmt_g12(pair.values[i])));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Figs. 8a/8b: slope-normalized eigenfunctions (ŷ′(0) = 1 = −ŷ′(π)) of the
/// given order at ĉ = 1 for b̂ ∈ {0.3, 0.5, 6}, under the unit-L2 closure.
fn slope_eigenfunction_csv(id: FigureId, order: usize) -> anyhow::Result<String> {
    let b_hats = [0.3, 0.5, 6.0];
    let cfg = SolverConfig {
        lambda_scan: (0.02, 8.0, 0.04),
        ..SolverConfig::default()
    };
    let mut columns = Vec::new();
    let mut lambdas = Vec::new();
    for &b in &b_hats {
        let invariant = NormalizedInvariant::new(b, 1.0).context("parameters")?;
        let q = move |z: f64| invariant.q(z);
        let pairs = solve_slope_normalized_all(&q, 1.0, -1.0, ClosureCondition::UnitL2, &cfg)
            .with_context(|| format!("slope mode at b_hat={b}"))?;
        if pairs.len() <= order {
            bail!("only {} slope-mode solutions at b_hat={b}", pairs.len());
        }
        let pair = pairs.into_iter().nth(order).expect("checked length");
        lambdas.push(pair.lambda);
        columns.push(pair);
    }
    let params = format!(
        "c_hat=1 b_hats={} bc=neumann s0=1 s1=-1 closure=unit_l2 order={order} lambdas={}",
        join(&b_hats),
        join(&lambdas)
    );
    let mut out = metadata(id, &params);
    out.push_str("zhat");
    for b in &b_hats {
        out.push_str(&format!(",y_b{}", fmt_g12(*b)));
    }
    out.push('\n');
    let grid = &columns[0].grid;
    for (i, z) in grid.iter().enumerate() {
        out.push_str(&fmt_g12(*z));
        for pair in &columns {
            out.push_str(&format!(",{}", fmt_g12(pair.values[i])));
        }
        out.push('\n');
    }
    Ok(out)
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| fmt_g12(*v))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_strings() {
        for id in FigureId::ALL {
            let parsed: FigureId = id.to_string().parse().unwrap();
            assert_eq!(parsed, id);
        }
        assert!("9z".parse::<FigureId>().is_err());
    }

    #[test]
    fn invariant_figure_has_reference_parameters() {
        let csv = figure_csv(FigureId::F1a).unwrap();
        let (id, params) = parse_metadata(&csv).unwrap();
        assert_eq!(id, FigureId::F1a);
        assert_eq!(params, "a=1 c=1 b=0.1,0.5,1,2");
        assert!(csv.lines().nth(1).unwrap().starts_with("zhat,q_b0.1,"));
        // dashed-blue curve (b = 2) starts at 1/4
        let first_row = csv.lines().nth(2).unwrap();
        assert!(first_row.starts_with("0,"));
        assert!(first_row.ends_with(",0.25"));
    }

    #[test]
    fn effective_potential_blank_where_landscape_vanishes() {
        let csv = figure_csv(FigureId::F3b).unwrap();
        // at zhat = 0 the Dirichlet landscape is 0, so all W fields are empty
        let first_row = csv.lines().nth(2).unwrap();
        assert_eq!(first_row, "0,,,");
    }
}
