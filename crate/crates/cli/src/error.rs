use std::fmt;
use std::path::Path;

use ncpit::circuit::CircuitError;
use ncpit::ncpoly::NcPolyError;
use ncpit::pit::PitError;

/// A failed command. The variant decides the exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameter combinations.
    Usage(String),
    Io(String),
    Parse(String),
    /// The method cannot serve the request, or a resource limit was hit.
    Inapplicable(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Parse(_) => 4,
            CliError::Inapplicable(_) => 5,
        }
    }

    pub fn io(path: &Path, e: std::io::Error) -> CliError {
        CliError::Io(format!("{}: {e}", path.display()))
    }

    pub fn parse(path: &Path, e: impl fmt::Display) -> CliError {
        CliError::Parse(format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Parse(m) | CliError::Inapplicable(m) => f.write_str(m),
        }
    }
}

impl From<PitError> for CliError {
    fn from(e: PitError) -> Self {
        match e {
            PitError::MissingSparsityBound(_) => CliError::Usage(format!(
                "{e}\nhint: pass --log2-sparsity K, where 2^K bounds the number of monomials"
            )),
            PitError::MissingDegreeBound => {
                CliError::Usage(format!("{e}\nhint: pass --degree-log2 B, where 2^B bounds (n + 2) * degree"))
            }
            PitError::FieldTooSmall { .. }
            | PitError::DegenerateBound { .. }
            | PitError::InvalidParams(_)
            | PitError::UnknownMethod(_) => CliError::Usage(e.to_string()),
            PitError::DimTooLarge { .. } | PitError::BoxDimRefused { .. } | PitError::Box(_) => {
                CliError::Inapplicable(e.to_string())
            }
            PitError::NcPoly(_) | PitError::Isolate(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CircuitError> for CliError {
    fn from(e: CircuitError) -> Self {
        match e {
            CircuitError::CapExceeded { .. } => CliError::Inapplicable(e.to_string()),
            CircuitError::Generator(_) | CircuitError::InputArity { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<NcPolyError> for CliError {
    fn from(e: NcPolyError) -> Self {
        match e {
            NcPolyError::Syntax { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
