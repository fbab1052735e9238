//! Figure-data files must carry their generating parameters: re-reading the
//! metadata line recovers the figure id and its parameter set, and
//! regeneration is byte-identical.

use pdha_cli::figures::{figure_csv, parse_metadata, FigureId};

/// Reference parameter sets; computed tails (eigenvalues) are matched by prefix.
fn expected_params(id: FigureId) -> (&'static str, bool) {
    match id {
        FigureId::F1a => ("a=1 c=1 b=0.1,0.5,1,2", true),
        FigureId::F1b => ("a=1 b=1 c=0.1,1,1.9", true),
        FigureId::F2a => (
            "a=1 b=0.1 c=1 branch=minus d=-1.37078423709e-5 z0=0 z1=34.4068073507",
            true,
        ),
        FigureId::F2b => ("a=1 b=0.1 c=1", true),
        FigureId::F3a | FigureId::F3b => ("c_hat=1 b_hats=0.1,1,2 bc=dirichlet w0=0 w1=0", true),
        FigureId::F4a | FigureId::F4b => ("c_hat=1 b_hats=0.3,1,2 bc=neumann s0=1 s1=-1", true),
        FigureId::F5a => (
            "bc=dirichlet closure=unit_l2 s0=1 s1=-1 b=[0.1,6]:0.1 c_hats=0.5;1;1.9 scan=[0,60]:0.25 n_points=2001",
            true,
        ),
        FigureId::F5b => (
            "bc=neumann closure=unit_l2 s0=1 s1=-1 b=[0.1,6]:0.1 c_hats=1 scan=[0.02,8]:0.04 n_points=2001",
            true,
        ),
        FigureId::F6a => (
            "bc=neumann closure=unit_l2 s0=1 s1=-1 b=[0.1,6]:0.1 c_hats=0.1 scan=[0.02,8]:0.04 n_points=2001",
            true,
        ),
        FigureId::F6b => (
            "bc=neumann closure=unit_l2 s0=1 s1=-1 b=[0.1,6]:0.1 c_hats=1.9 scan=[0.02,8]:0.04 n_points=2001",
            true,
        ),
        FigureId::F7a => ("c_hat=1 b_hats=0.1,0.5,6 bc=dirichlet order=0 lambdas=", false),
        FigureId::F7b => ("c_hat=1 b_hats=0.1,0.5,6 bc=dirichlet order=1 lambdas=", false),
        FigureId::F8a => (
            "c_hat=1 b_hats=0.3,0.5,6 bc=neumann s0=1 s1=-1 closure=unit_l2 order=0 lambdas=",
            false,
        ),
        FigureId::F8b => (
            "c_hat=1 b_hats=0.3,0.5,6 bc=neumann s0=1 s1=-1 closure=unit_l2 order=1 lambdas=",
            false,
        ),
    }
}

#[test]
fn static_figures_round_trip_and_are_deterministic() {
    for id in [
        FigureId::F1a,
        FigureId::F1b,
        FigureId::F2a,
        FigureId::F2b,
        FigureId::F3a,
        FigureId::F3b,
        FigureId::F4a,
        FigureId::F4b,
    ] {
        let csv = figure_csv(id).unwrap();
        let (parsed, params) = parse_metadata(&csv).unwrap();
        assert_eq!(parsed, id);
        let (expected, exact) = expected_params(id);
        assert!(exact);
        assert_eq!(params, expected, "figure {id}");
        assert_eq!(figure_csv(id).unwrap(), csv, "figure {id} not deterministic");
        assert!(csv.lines().count() > 100);
    }
}

#[test]
fn eigenfunction_figures_round_trip() {
    for id in [FigureId::F7a, FigureId::F7b, FigureId::F8a, FigureId::F8b] {
        let csv = figure_csv(id).unwrap();
        let (parsed, params) = parse_metadata(&csv).unwrap();
        assert_eq!(parsed, id);
        let (prefix, _) = expected_params(id);
        assert!(
            params.starts_with(prefix),
            "figure {id}: params {params:?} missing prefix {prefix:?}"
        );
        assert_eq!(csv.lines().count(), 2003); // metadata + header + 2001 samples
    }
}

#[test]
fn fig7_eigenvalues_decrease_with_b_hat() {
    let csv = figure_csv(FigureId::F7a).unwrap();
    let (_, params) = parse_metadata(&csv).unwrap();
    let lambdas: Vec<f64> = params
        .split("lambdas=")
        .nth(1)
        .unwrap()
        .split(',')
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(lambdas.len(), 3);
    assert!(lambdas[0] > lambdas[1] && lambdas[1] > lambdas[2], "{lambdas:?}");
    assert!((lambdas[0] - 1.5198658).abs() < 1e-4);
}

#[test]
fn dirichlet_sweep_figure_round_trips() {
    let csv = figure_csv(FigureId::F5a).unwrap();
    let (parsed, params) = parse_metadata(&csv).unwrap();
    assert_eq!(parsed, FigureId::F5a);
    assert_eq!(params, expected_params(FigureId::F5a).0);
    assert_eq!(csv.lines().count(), 2 + 180);
    assert!(csv.lines().skip(2).all(|l| l.ends_with(",ok")));
}

#[test]
fn neumann_sweep_figures_round_trip() {
    for id in [FigureId::F5b, FigureId::F6a, FigureId::F6b] {
        let csv = figure_csv(id).unwrap();
        let (parsed, params) = parse_metadata(&csv).unwrap();
        assert_eq!(parsed, id);
        assert_eq!(params, expected_params(id).0, "figure {id}");
        assert_eq!(csv.lines().count(), 2 + 60, "figure {id}");
    }
}
