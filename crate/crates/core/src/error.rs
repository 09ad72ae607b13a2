use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("resource limit `{limit}` exceeded: {value} > {max}")]
    ResourceLimit {
        limit: &'static str,
        value: u128,
        max: u128,
    },

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("{d} does not divide the group exponent {exponent}")]
    NotDivisor { d: u64, exponent: u64 },

    #[error("{r} is not coprime to the conductor {conductor}")]
    NotCoprime { r: i64, conductor: u32 },

    #[error("class functions are indexed by different class sets")]
    MismatchedTable,

    #[error("elements {0} and {1} do not commute")]
    NonCommuting(String, String),

    #[error("index {index} out of range for {what} (len {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Parse {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn check_index(what: &'static str, index: usize, len: usize) -> Result<()> {
        if index < len {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { what, index, len })
        }
    }
}
