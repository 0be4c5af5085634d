use std::fmt;

use serde_json::{json, Value};

/// A failure reported as `{"error": {...}}` with a nonzero exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> CliError {
        CliError { kind: kind.into(), message: message.into(), line: None, column: None }
    }

    pub fn syntax(message: impl Into<String>, line: usize, column: usize) -> CliError {
        CliError::new("syntax", message).at(line, column)
    }

    pub fn usage(message: impl Into<String>) -> CliError {
        CliError::new("usage", message)
    }

    pub fn math(message: impl Into<String>) -> CliError {
        CliError::new("math", message)
    }

    pub fn at(mut self, line: usize, column: usize) -> CliError {
        self.line = Some(line);
        self.column = Some(column);
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind.as_str() {
            "usage" => 2,
            "syntax" | "illegal-generator" | "exponent-overflow" | "json" => 3,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut e = json!({"kind": self.kind, "message": self.message});
        if let (Some(l), Some(c)) = (self.line, self.column) {
            e["line"] = json!(l);
            e["column"] = json!(c);
        }
        json!({ "error": e })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "{} error at {l}:{c}: {}", self.kind, self.message),
            _ => write!(f, "{} error: {}", self.kind, self.message),
        }
    }
}

impl From<hopf_forge::Error> for CliError {
    fn from(e: hopf_forge::Error) -> CliError {
        use hopf_forge::Error as E;
        let kind = match &e {
            E::IllegalGenerator { .. } => "illegal-generator",
            E::CapExceeded(_) | E::DegreeBound { .. } | E::Unbounded(_) => "cap",
            E::Json(_) => "json",
            _ => "math",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError::new("json", e.to_string()).at(e.line(), e.column())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::new("io", e.to_string())
    }
}
