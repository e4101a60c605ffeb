use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{apply_move, MoveSpec, RewriteError};
use crate::gausscode::{parse, GaussCode};

/// Hex SHA-256 of the serialized code.
pub fn snapshot_hash(code: &GaussCode) -> String {
    let digest = Sha256::digest(code.to_string().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    #[serde(rename = "spec")]
    pub spec: MoveSpec,
    pub hash: String,
}

/// Moves applied to `initial`, each with the hash of the code it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteTrace {
    pub schema: u32,
    pub initial: String,
    pub steps: Vec<TraceStep>,
}

impl RewriteTrace {
    pub fn new(initial: &GaussCode) -> Self {
        RewriteTrace { schema: 1, initial: initial.to_string(), steps: Vec::new() }
    }

    /// Applies every spec in order from `initial`, recording each result.
    pub fn record(initial: &GaussCode, specs: &[MoveSpec]) -> Result<(Self, GaussCode), RewriteError> {
        let mut trace = RewriteTrace::new(initial);
        let mut code = initial.clone();
        for spec in specs {
            code = apply_move(&code, spec)?;
            trace.steps.push(TraceStep { spec: spec.clone(), hash: snapshot_hash(&code) });
        }
        Ok((trace, code))
    }

    /// Re-applies the moves and checks every recorded hash.
    pub fn replay(&self) -> Result<GaussCode, RewriteError> {
        let mut code = parse(&self.initial).map_err(|e| RewriteError::BadTrace(e.to_string()))?;
        for (i, step) in self.steps.iter().enumerate() {
            code = apply_move(&code, &step.spec)?;
            let found = snapshot_hash(&code);
            if found != step.hash {
                return Err(RewriteError::TraceMismatch { step: i, expected: step.hash.clone(), found });
            }
        }
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, RewriteError> {
        serde_json::from_str(text).map_err(|e| RewriteError::BadTrace(e.to_string()))
    }
}
