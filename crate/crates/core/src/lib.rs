pub mod codes;
pub mod constructions;
pub mod cosets;
pub mod cyclotomic;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod numtheory;
pub mod poly;
pub mod report;
pub mod repro;

pub use error::{Error, Result};
