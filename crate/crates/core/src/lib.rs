pub mod cover;
pub mod curve;
pub mod error;
pub mod fiber;
pub mod field;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod syzygy;
pub mod verdict;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::Ring;
pub use verdict::{Mismatch, Verdict};
