//! Command-line front end for the modified second PdHA toolkit: parameter
//! sweeps, figure data emission, single-problem estimates and solves, the
//! canonical-form transformation, and a self-verification suite.

pub mod config;
pub mod csvfmt;
pub mod figures;
pub mod sweep;
pub mod verify;
