pub mod cli;
pub mod demo;
pub mod error;
pub mod extension;
pub mod json;
pub mod linalg;
pub mod matroid;
pub mod quotient;
pub mod realization;
pub mod tropical;

pub use error::{Error, Result};
pub use matroid::{ElementSet, FlatFamily, Matroid};
