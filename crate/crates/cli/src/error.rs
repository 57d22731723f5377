use std::fmt;
use std::process::ExitCode;

/// Exit statuses: 0 success, 1 I/O failure, 2 usage, 3 capacity, 4
/// verification mismatch.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

pub const USAGE: u8 = 2;
pub const CAPACITY: u8 = 3;
pub const MISMATCH: u8 = 4;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError {
            code: MISMATCH,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ltm_core::Error> for CliError {
    fn from(e: ltm_core::Error) -> Self {
        let code = match e {
            ltm_core::Error::Capacity(_) => CAPACITY,
            ltm_core::Error::Consistency(_) => MISMATCH,
            _ => USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: 1,
            message: e.to_string(),
        }
    }
}
