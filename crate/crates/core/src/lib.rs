//! Bridge-sphere bookkeeping for arborescent links.

pub mod census;
pub mod error;
pub mod groups;
pub mod linkdata;
pub mod rationals;

pub use error::{Error, Result};
