use cyclic_cert::crossing::CrossingError;
use cyclic_cert::cyclic::CyclicError;
use cyclic_cert::domination::DominationError;
use cyclic_cert::formats::FormatError;
use cyclic_cert::graph::GraphError;
use cyclic_cert::rational::RationalError;
use cyclic_cert::BudgetExceeded;

/// Everything that ends a run without a yes/no answer.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, malformed content. Exit 2.
    Input { kind: &'static str, message: String },
    /// A search ran out of nodes or time. Exit 3.
    Budget(String),
}

impl CliError {
    pub fn input(kind: &'static str, message: impl Into<String>) -> CliError {
        CliError::Input {
            kind,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } => 2,
            CliError::Budget(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input { kind, .. } => kind,
            CliError::Budget(_) => "budget",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input { message, .. } | CliError::Budget(message) => message,
        }
    }
}

impl From<BudgetExceeded> for CliError {
    fn from(e: BudgetExceeded) -> Self {
        CliError::Budget(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Budget(b) => b.into(),
            other => CliError::input("graph", other.to_string()),
        }
    }
}

impl From<CyclicError> for CliError {
    fn from(e: CyclicError) -> Self {
        CliError::input("cyclic", e.to_string())
    }
}

impl From<RationalError> for CliError {
    fn from(e: RationalError) -> Self {
        CliError::input("parse", e.to_string())
    }
}

impl From<DominationError> for CliError {
    fn from(e: DominationError) -> Self {
        match e {
            DominationError::Budget(b) => b.into(),
            DominationError::Graph(g) => g.into(),
            other => CliError::input("domination", other.to_string()),
        }
    }
}

impl From<CrossingError> for CliError {
    fn from(e: CrossingError) -> Self {
        match e {
            CrossingError::Graph(g) => g.into(),
            other => CliError::input("crossing", other.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Graph(g) => g.into(),
            FormatError::Crossing(c) => c.into(),
            FormatError::Io { .. } => CliError::input("io", e.to_string()),
            other => CliError::input("parse", other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::input("parse", e.to_string())
    }
}
