//! Exact enumeration of parallelogram polyominoes, parallelogram polycubes
//! and their d-dimensional analogues.
//!
//! Every count is an arbitrary-precision integer. The formula modules
//! ([`polyomino`], [`polycube`], [`hyperd`], [`dirichlet`]) are checked
//! against an independent geometric brute force in [`oracle`].

pub mod dirichlet;
pub mod error;
pub mod exactmath;
pub mod hyperd;
pub mod oracle;
pub mod polycube;
pub mod polyomino;
pub mod series;
pub mod table;

pub use error::{Error, Result};
pub use exactmath::{BigCount, ExactRational, OrderedSetPartition};
pub use series::{BivariateSeries, TruncatedSeries};
pub use table::CountTable;
