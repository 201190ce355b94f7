//! Optional TOML defaults. Command-line flags win over the file, the file
//! wins over the built-ins below.
//!
//! ```toml
//! tol = 1e-9
//! seed = 7
//!
//! [table]
//! xi_grid = [0.1, 0.25, 0.5]
//! lambda_grid = [0.0]
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 20_240_611;
pub const DEFAULT_IDENTITY_TOL: f64 = 1e-13;
pub const DEFAULT_XI_GRID: [f64; 7] = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9];

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub identity_tol: Option<f64>,
    #[serde(default)]
    pub table: TableDefaults,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDefaults {
    pub xi_grid: Option<Vec<f64>>,
    pub lambda_grid: Option<Vec<f64>>,
    pub tol: Option<f64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidRequest(format!("cannot read {}: {e}", path.display())))?;
        text.parse()
    }

    pub fn tol(&self, flag: Option<f64>) -> f64 {
        flag.or(self.tol).unwrap_or(DEFAULT_TOL)
    }

    pub fn seed(&self, flag: Option<u64>) -> u64 {
        flag.or(self.seed).unwrap_or(DEFAULT_SEED)
    }

    pub fn identity_tol(&self, flag: Option<f64>) -> f64 {
        flag.or(self.identity_tol).unwrap_or(DEFAULT_IDENTITY_TOL)
    }

    pub fn table_tol(&self, flag: Option<f64>) -> f64 {
        flag.or(self.table.tol).or(self.tol).unwrap_or(DEFAULT_TOL)
    }
}

impl std::str::FromStr for Config {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Parse(format!("config: {e}")))
    }
}
