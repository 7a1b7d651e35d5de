use std::fmt;
use std::path::{Path, PathBuf};

use clap::Args;

use foamlab_core::foam::FoamError;
use foamlab_core::statespace::StateSpaceError;

/// Exit codes: 1 = a reproduction/selftest check failed, 10 = input file
/// not found, 11 = schema violation, 12 = evaluation integrity,
/// 13 = precondition / invalid argument. clap keeps its usual 2 for
/// usage errors.
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_FILE_NOT_FOUND: u8 = 10;
pub const EXIT_SCHEMA: u8 = 11;
pub const EXIT_INTEGRITY: u8 = 12;
pub const EXIT_PRECONDITION: u8 = 13;

#[derive(Debug)]
pub enum CliError {
    CheckFailed(String),
    FileNotFound(String),
    Schema(String),
    Integrity(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
            CliError::FileNotFound(_) => EXIT_FILE_NOT_FOUND,
            CliError::Schema(_) => EXIT_SCHEMA,
            CliError::Integrity(_) => EXIT_INTEGRITY,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }

    pub fn precondition(e: impl fmt::Display) -> Self {
        CliError::Precondition(e.to_string())
    }

    pub fn schema(e: impl fmt::Display) -> Self {
        CliError::Schema(e.to_string())
    }

    pub fn from_foam(e: FoamError) -> Self {
        match e {
            FoamError::Integrity(_)
            | FoamError::Inconsistency(_)
            | FoamError::NotHomogeneous(_) => CliError::Integrity(e.to_string()),
            FoamError::Invalid(_) => CliError::Schema(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }

    pub fn from_statespace(e: StateSpaceError) -> Self {
        match e {
            StateSpaceError::Foam(f) => CliError::from_foam(f),
            StateSpaceError::Degree(d) => CliError::Integrity(d.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::CheckFailed(m) => write!(f, "{m}"),
            CliError::FileNotFound(m) => write!(f, "file not found: {m}"),
            CliError::Schema(m) => write!(f, "schema violation: {m}"),
            CliError::Integrity(m) => write!(f, "evaluation integrity: {m}"),
            CliError::Precondition(m) => write!(f, "{m}"),
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::FileNotFound(path.display().to_string())
        } else {
            CliError::Precondition(format!("cannot read {}: {e}", path.display()))
        }
    })
}

#[derive(Args)]
pub struct OutputArgs {
    /// Emit machine-readable JSON instead of the human table
    #[arg(long)]
    pub json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn emit(args: &OutputArgs, human: String, value: serde_json::Value) -> Result<(), CliError> {
    let text = if args.json {
        serde_json::to_string_pretty(&value).expect("report serialization cannot fail")
    } else {
        human
    };
    match &args.out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Precondition(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
