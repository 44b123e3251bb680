use std::fmt;

use serde_json::{json, Map, Value};
use superring_core::{Error, Tri};

/// Result of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub verb: String,
    pub verdict: Option<String>,
    pub value: Option<String>,
    pub witness: Option<String>,
    pub detail: Vec<String>,
    pub timing_ms: f64,
}

impl Outcome {
    pub fn value(verb: &str, value: impl Into<String>) -> Outcome {
        Outcome {
            verb: verb.to_string(),
            verdict: None,
            value: Some(value.into()),
            witness: None,
            detail: Vec::new(),
            timing_ms: 0.0,
        }
    }

    pub fn verdict(verb: &str, v: Tri) -> Outcome {
        Outcome {
            verb: verb.to_string(),
            verdict: Some(v.to_string()),
            value: None,
            witness: None,
            detail: Vec::new(),
            timing_ms: 0.0,
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Outcome {
        self.witness = Some(w.into());
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Outcome {
        let d = d.into();
        if !d.is_empty() {
            self.detail.push(d);
        }
        self
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("verb".into(), json!(self.verb));
        if let Some(v) = &self.verdict {
            m.insert("verdict".into(), json!(v));
        }
        if let Some(v) = &self.value {
            m.insert("value".into(), json!(v));
        }
        if let Some(w) = &self.witness {
            m.insert("witness".into(), json!(w));
        }
        if !self.detail.is_empty() {
            m.insert("detail".into(), json!(self.detail));
        }
        m.insert(
            "timing_ms".into(),
            json!((self.timing_ms * 1000.0).round() / 1000.0),
        );
        Value::Object(m)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.verdict, &self.value) {
            (Some(v), _) => write!(f, "{v}")?,
            (None, Some(v)) => write!(f, "{v}")?,
            (None, None) => write!(f, "ok")?,
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for d in &self.detail {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

/// Errors surfaced by the command layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Core(Error),
    User {
        line: usize,
        col: usize,
        message: String,
    },
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// 1 for user errors, 2 for resource caps, 3 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Resource(_)) => 2,
            CliError::Core(Error::Internal(_)) => 3,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.to_string(), "exit_code": self.exit_code() })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::User { line, col, message } => {
                write!(f, "line {line}, column {col}: {message}")
            }
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}
