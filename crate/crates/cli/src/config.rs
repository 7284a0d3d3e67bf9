//! Job configuration: a TOML file, overridden by command-line values.
//!
//! ```toml
//! recipe = "quasi-perfect-2xm"
//! property = "quasi-perfect"
//! # or: code = "code.json"
//! output = "cert.json"
//! threads = 2
//! constant = 1.0
//!
//! [params]
//! q = 2
//! m = 2
//! u = 2
//!
//! [budgets]
//! codewords = 4194304
//! ambient = 4194304
//! syndromes = 65536
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use sumrank::Budgets;

#[derive(Debug, Clone, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BudgetConfig {
    pub codewords: Option<u64>,
    pub ambient: Option<u64>,
    pub syndromes: Option<u64>,
}

#[derive(Debug, Clone, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub recipe: Option<String>,
    pub property: Option<String>,
    pub code: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    pub constant: Option<f64>,
    #[serde(default)]
    pub params: BTreeMap<String, u64>,
    #[serde(default)]
    pub budgets: BudgetConfig,
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<JobConfig> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn load_optional(path: Option<&Path>) -> Result<JobConfig> {
        path.map(JobConfig::load).transpose().map(Option::unwrap_or_default)
    }

    /// Budgets from the file, each overridden by a command-line value when given.
    pub fn budgets(&self, overrides: &BudgetConfig) -> Result<Budgets> {
        let d = Budgets::default();
        let pick = |cli: Option<u64>, file: Option<u64>, default: u64, name: &str| -> Result<u64> {
            let v = cli.or(file).unwrap_or(default);
            if v == 0 {
                bail!("{name} budget must be positive");
            }
            Ok(v)
        };
        Ok(Budgets {
            codewords: pick(overrides.codewords, self.budgets.codewords, d.codewords, "codeword")?,
            ambient: pick(overrides.ambient, self.budgets.ambient, d.ambient, "ambient")?,
            syndromes: pick(overrides.syndromes, self.budgets.syndromes, d.syndromes, "syndrome")?,
        })
    }
}

/// Splits `key=value` arguments.
pub fn parse_pairs(args: &[String]) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for a in args {
        let (k, v) = a.split_once('=').with_context(|| format!("expected key=value, got {a:?}"))?;
        if k.is_empty() {
            bail!("empty key in {a:?}");
        }
        if out.insert(k.to_string(), v.to_string()).is_some() {
            bail!("parameter {k} given twice");
        }
    }
    Ok(out)
}

/// Integer parameters for a recipe: file values overridden by `key=value` arguments.
pub fn recipe_params(file: &BTreeMap<String, u64>, args: &[String]) -> Result<BTreeMap<String, u64>> {
    let mut out = file.clone();
    for (k, v) in parse_pairs(args)? {
        let n: u64 = v.parse().with_context(|| format!("parameter {k} must be a nonnegative integer, got {v:?}"))?;
        out.insert(k, n);
    }
    Ok(out)
}
