//! Command-line front end for the polygram enumeration toolkit.

pub mod app;
pub mod bfile;
pub mod error;
pub mod output;
pub mod reference;
pub mod sequences;
pub mod verify;

pub use error::{CliError, Result};
