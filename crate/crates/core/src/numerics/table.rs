use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat_to_f64, Rat};

/// Exact levels with optional finite-difference values next to them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub nu: Vec<i64>,
    #[serde(skip)]
    pub exact: Vec<Rat>,
    pub numeric: Vec<f64>,
    pub residuals: Vec<f64>,
}

impl SpectrumTable {
    pub fn exact_only(nu: Vec<i64>, exact: Vec<Rat>) -> Self {
        SpectrumTable {
            nu,
            exact,
            numeric: Vec::new(),
            residuals: Vec::new(),
        }
    }

    pub fn with_numeric(mut self, numeric: Vec<f64>) -> Result<Self> {
        if numeric.len() != self.exact.len() {
            return Err(Error::Input(format!(
                "{} numeric values for {} exact levels",
                numeric.len(),
                self.exact.len()
            )));
        }
        self.residuals = numeric
            .iter()
            .zip(&self.exact)
            .map(|(n, e)| (n - rat_to_f64(e)).abs())
            .collect();
        self.numeric = numeric;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.exact.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exact.is_empty()
    }

    pub fn has_numeric(&self) -> bool {
        !self.numeric.is_empty()
    }

    pub fn max_residual(&self) -> Option<f64> {
        self.residuals.iter().copied().reduce(f64::max)
    }
}
