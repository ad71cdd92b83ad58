use std::path::Path;

use geomgraph::{Error, ErrorKind};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Everything that determines a run's output. Wall time is logged to stderr
/// instead, so that reruns stay byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub seed: Option<u64>,
    pub parameters: Map<String, Value>,
    pub version: &'static str,
    pub threads: usize,
}

impl RunManifest {
    pub fn new(command: &str, threads: usize) -> Self {
        RunManifest {
            command: command.to_string(),
            inputs: Vec::new(),
            seed: None,
            parameters: Map::new(),
            version: env!("CARGO_PKG_VERSION"),
            threads,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).expect("parameters serialize"));
    }

    /// Reads an input file and records its digest.
    pub fn read(&mut self, path: &Path) -> Result<String, Error> {
        let bytes = std::fs::read(path).map_err(|e| Error::Parse {
            position: path.display().to_string(),
            message: e.to_string(),
        })?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|e| Error::Parse {
            position: path.display().to_string(),
            message: e.to_string(),
        })
    }
}

/// A command's result and the exit code it maps to.
pub struct Outcome {
    pub body: Value,
    pub code: i32,
}

impl Outcome {
    pub fn new(body: impl Serialize, code: i32) -> Self {
        Outcome {
            body: serde_json::to_value(body).expect("results serialize"),
            code,
        }
    }

    pub fn ok(body: impl Serialize) -> Self {
        Self::new(body, EXIT_OK)
    }

    /// Exit 0 when `positive`, else 1.
    pub fn finding(body: impl Serialize, positive: bool) -> Self {
        Self::new(body, if positive { EXIT_OK } else { EXIT_NEGATIVE })
    }
}

/// Result fields with the manifest added under `"manifest"`; non-object
/// results are nested under `"result"`.
pub fn render(body: Value, manifest: &RunManifest) -> String {
    let mut obj = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    obj.insert("manifest".into(), serde_json::to_value(manifest).expect("manifest serializes"));
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("output serializes");
    s.push('\n');
    s
}

fn slug(e: &Error) -> &'static str {
    match e {
        Error::EmptyGraph => "empty-graph",
        Error::NoSuchEdge(..) => "no-such-edge",
        Error::UnknownVertex(_) => "unknown-vertex",
        Error::Parse { .. } => "parse",
        Error::Hypothesis { lemma, .. } => lemma,
        Error::NotACycle(_) => "not-a-cycle",
        Error::DifferentHosts => "different-hosts",
        Error::NotTwoConnected => "not-two-connected",
        Error::NotASeparator(_) => "not-a-separator",
        Error::Disconnected { .. } => "disconnected",
        Error::InsufficientConnectivity { .. } => "insufficient-connectivity",
        Error::BadCell(_) => "bad-cell",
        Error::InconsistentBoundary(_) => "inconsistent-boundary",
        Error::NotSubcomplex(_) => "not-subcomplex",
        Error::NotClosedEmbedded(_) => "not-closed-embedded",
        Error::RegionsUnavailable(_) => "regions-unavailable",
        Error::MissingRegions(_) => "missing-regions",
        Error::Preflight { .. } => "preflight",
        Error::WrongStage { .. } => "wrong-stage",
        Error::TooLarge(_) => "too-large",
        Error::InvalidArgument(_) => "invalid-argument",
        Error::Json(_) => "json",
    }
}

pub fn error_outcome(group: &str, e: &Error) -> Outcome {
    let (kind, code) = match e.kind() {
        ErrorKind::Input => ("input", EXIT_INPUT),
        ErrorKind::Hypothesis => ("hypothesis", EXIT_HYPOTHESIS),
        ErrorKind::Budget => ("budget", EXIT_BUDGET),
    };
    let mut err = json!({
        "code": format!("{group}.{}", slug(e)),
        "kind": kind,
        "message": e.to_string(),
    });
    if code == EXIT_BUDGET {
        err["note"] = json!("nothing was truncated; rerun on a smaller instance or raise the limit");
    }
    Outcome::new(json!({ "error": err }), code)
}
