pub mod chartab;
pub mod cyclotomic;
pub mod error;
pub mod indicators;
pub mod numtheory;
pub mod oracle;
pub mod permcore;

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
