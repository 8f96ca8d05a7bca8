use std::collections::BTreeMap;

use priestley::Limits;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: BTreeMap<String, Value>,
}

/// The caps in force. The thread count is left out on purpose: it only
/// changes scheduling, and reports must not depend on it.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigSnapshot {
    pub max_size: usize,
    pub max_downset_size: usize,
    pub max_prime_size: usize,
    pub max_dim_size: usize,
    pub max_cube_size: usize,
    pub max_hom_size: usize,
    pub max_enum_size: usize,
}

impl From<&Limits> for ConfigSnapshot {
    fn from(l: &Limits) -> Self {
        ConfigSnapshot {
            max_size: l.max_size,
            max_downset_size: l.max_downset_size,
            max_prime_size: l.max_prime_size,
            max_dim_size: l.max_dim_size,
            max_cube_size: l.max_cube_size,
            max_hom_size: l.max_hom_size,
            max_enum_size: l.max_enum_size,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: CommandEcho,
    pub config: ConfigSnapshot,
    pub verdict: String,
    pub result: Value,
    /// Wall-clock milliseconds, only with `--timing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}
