//! JSON tables: a default rule plus per-profile overrides.
//!
//! ```json
//! { "m": 3, "n": 3, "default": "pareto", "overrides": { "xyz|yzx|zxy": ["x"] } }
//! ```
//!
//! An optional `"labels": "xyz"` pins the alternative labels; otherwise they
//! come from the default rule (for examples) or from the override text.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alternative::Universe;
use crate::error::{Error, Result};
use crate::profile::Profile;

use super::Correspondence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub m: usize,
    pub n: usize,
    pub default: String,
    #[serde(default)]
    pub overrides: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<String>,
}

impl TableFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("table JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn build(&self) -> Result<Correspondence> {
        let default = Correspondence::from_name(&self.default, self.m, self.n)?;
        let universe = match &self.labels {
            Some(labels) => Universe::with_labels(labels)?,
            None if default.has_fixed_labels() || self.overrides.is_empty() => {
                default.universe().clone()
            }
            None => Universe::infer(
                self.overrides
                    .iter()
                    .flat_map(|(k, v)| k.chars().chain(v.iter().flat_map(|s| s.chars())))
                    .filter(|c| !c.is_whitespace() && *c != '|'),
            )?,
        };
        if universe.size() != self.m {
            return Err(Error::Config(format!(
                "table declares m = {} but its labels name {} alternatives",
                self.m,
                universe.size()
            )));
        }
        if default.has_fixed_labels() && universe != *default.universe() {
            return Err(Error::Config(format!(
                "'{}' uses labels {:?}",
                self.default,
                default.universe().labels()
            )));
        }
        let default = default.with_universe(universe.clone())?;
        let mut overrides = Vec::with_capacity(self.overrides.len());
        for (text, labels) in &self.overrides {
            let u = Profile::parse(text, &universe)?;
            if u.individuals() != self.n {
                return Err(Error::Mismatch(format!(
                    "override '{text}' has {} individuals; table declares n = {}",
                    u.individuals(),
                    self.n
                )));
            }
            overrides.push((u, universe.parse_set(labels)?));
        }
        Correspondence::with_overrides(default, overrides)?.with_universe(universe)
    }
}
