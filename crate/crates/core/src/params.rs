//! Named parameters shared by the identity registry and the series builders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, StatParams};

/// Optional parameters of an identity; each identity reads the ones it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<Partition>,
}

fn missing(name: &str) -> Error {
    Error::InvalidParams(format!("missing parameter `{name}`"))
}

impl Params {
    pub fn with_m(m: usize) -> Self {
        Params { m: Some(m), ..Params::default() }
    }

    pub fn with_j(j: i64) -> Self {
        Params { j: Some(j), ..Params::default() }
    }

    pub fn with_n(n: usize) -> Self {
        Params { n: Some(n), ..Params::default() }
    }

    pub fn with_alpha_beta(alpha: u32, beta: u32) -> Self {
        Params { alpha: Some(alpha), beta: Some(beta), ..Params::default() }
    }

    pub fn with_core(m: usize, core: Partition) -> Self {
        Params { m: Some(m), core: Some(core), ..Params::default() }
    }

    /// `m`, which must be at least 2.
    pub fn require_m(&self) -> Result<usize> {
        match self.m {
            Some(m) if m >= 2 => Ok(m),
            Some(m) => Err(Error::InvalidParams(format!("m must be at least 2, got {m}"))),
            None => Err(missing("m")),
        }
    }

    pub fn require_j(&self) -> Result<i64> {
        self.j.ok_or_else(|| missing("j"))
    }

    pub fn require_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| missing("n"))
    }

    pub fn require_alpha_beta(&self) -> Result<StatParams> {
        let a = self.alpha.ok_or_else(|| missing("alpha"))?;
        let b = self.beta.ok_or_else(|| missing("beta"))?;
        StatParams::new(a, b)
    }

    pub fn require_core(&self) -> Result<&Partition> {
        self.core.as_ref().ok_or_else(|| missing("core"))
    }
}
