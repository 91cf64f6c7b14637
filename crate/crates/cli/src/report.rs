use std::process::ExitCode;

use serde_json::{json, Value};

/// What a command prints, and whether its claim held.
#[derive(Debug)]
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn pass(text: impl Into<String>, json: Value) -> Self {
        Report {
            ok: true,
            text: text.into(),
            json,
        }
    }

    pub fn fail(text: impl Into<String>, json: Value) -> Self {
        Report {
            ok: false,
            text: text.into(),
            json,
        }
    }

    pub fn emit(self, as_json: bool) -> ExitCode {
        if as_json {
            println!("{}", serde_json::to_string_pretty(&self.json).expect("reports serialize"));
        } else if !self.text.is_empty() {
            println!("{}", self.text);
        }
        ExitCode::from(if self.ok { 0 } else { 1 })
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit 2.
    Input(anyhow::Error),
    /// An operator precondition does not hold: exit 1.
    Precondition(String),
}

impl CliError {
    pub fn emit(self, as_json: bool) -> ExitCode {
        let (code, kind, msg) = match &self {
            CliError::Input(e) => (2, "input", format!("{e:#}")),
            CliError::Precondition(m) => (1, "precondition", m.clone()),
        };
        if as_json {
            println!("{}", json!({ "error": kind, "message": msg }));
        }
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Input(e)
    }
}
