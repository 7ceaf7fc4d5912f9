use std::fmt::Display;
use std::path::Path;

use fvpg::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Code {
    Check = 1,
    Input = 2,
    Solver = 3,
    Gate = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub code: Code,
    pub message: String,
}

impl Failure {
    pub fn new(code: Code, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(Code::Input, message)
    }

    pub fn io(path: &Path, err: impl Display) -> Self {
        Self::input(format!("{}: {err}", path.display()))
    }

    /// Errors raised while reading or building a mesh.
    pub fn mesh(source: &str, err: Error) -> Self {
        Self::input(format!("{source}: {err}"))
    }

    /// Errors raised by the scheme or the linear solver.
    pub fn solver(err: Error) -> Self {
        let code = match err {
            Error::InvalidLevels { .. } | Error::Parse { .. } => Code::Input,
            _ => Code::Solver,
        };
        Self::new(code, err.to_string())
    }
}
