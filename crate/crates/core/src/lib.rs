pub mod bfactor;
pub mod budget;
pub mod combinat;
pub mod cone;
pub mod error;
pub mod format;
pub mod graphs;
pub mod lp;
pub mod matching;
pub mod report;
pub mod schedule;

pub use error::{Error, Result};
