//! JSON problem configuration consumed by the CLI:
//! {"a":…, "b":…, "c":…, "n":…, "bc":{"left":{"alpha0":…,"alpha1":…,"rhs":…},"right":{…}}}

use std::path::Path;

use anyhow::Context;
use serde::Deserialize;

use pdha::problem::{InvariantParams, ProblemError, RobinBC};

#[derive(Debug, Clone, Deserialize)]
pub struct ProblemConfig {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub n: u32,
    pub bc: BcPair,
}

#[derive(Debug, Clone, Deserialize)]
pub struct BcPair {
    pub left: BcSide,
    pub right: BcSide,
}

#[derive(Debug, Clone, Deserialize)]
pub struct BcSide {
    pub alpha0: f64,
    pub alpha1: f64,
    pub rhs: f64,
}

impl BcSide {
    pub fn robin(&self) -> Result<RobinBC, ProblemError> {
        RobinBC::new(self.alpha0, self.alpha1, self.rhs)
    }
}

impl Default for ProblemConfig {
    /// The classical second PdHA problem: a = 1 = c, b = 0.1, homogeneous
    /// Dirichlet data at both endpoints.
    fn default() -> Self {
        Self {
            a: 1.0,
            b: 0.1,
            c: 1.0,
            n: 2,
            bc: BcPair {
                left: BcSide {
                    alpha0: 1.0,
                    alpha1: 0.0,
                    rhs: 0.0,
                },
                right: BcSide {
                    alpha0: 1.0,
                    alpha1: 0.0,
                    rhs: 0.0,
                },
            },
        }
    }
}

impl ProblemConfig {
    pub fn from_path(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let cfg: Self = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        Ok(cfg)
    }

    pub fn params(&self) -> Result<InvariantParams, ProblemError> {
        InvariantParams::new(self.a, self.b, self.c, self.n)
    }

    pub fn left(&self) -> Result<RobinBC, ProblemError> {
        self.bc.left.robin()
    }

    pub fn right(&self) -> Result<RobinBC, ProblemError> {
        self.bc.right.robin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_schema() {
        let text = r#"{"a":1.0,"b":0.1,"c":1.0,"n":2,
            "bc":{"left":{"alpha0":1.0,"alpha1":0.0,"rhs":0.0},
                  "right":{"alpha0":1.0,"alpha1":0.0,"rhs":0.0}}}"#;
        let cfg: ProblemConfig = serde_json::from_str(text).unwrap();
        assert_eq!(cfg.n, 2);
        assert!(cfg.params().is_ok());
        assert!(cfg.left().unwrap().is_dirichlet());
    }

    #[test]
    fn rejects_degenerate_bc() {
        let mut cfg = ProblemConfig::default();
        cfg.bc.left.alpha0 = 0.0;
        assert!(cfg.left().is_err());
    }
}
