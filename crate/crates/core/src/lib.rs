#![forbid(unsafe_code)]
pub mod algebra;
pub mod cells;
pub mod diagrams;
pub mod error;
pub mod field;
pub mod linalg;
pub mod partitions;
pub mod repthy;
pub mod schurweyl;
pub mod specht;
pub mod suites;

pub use error::{Error, Result};
