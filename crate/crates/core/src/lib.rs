//! Exact enumeration of ballot and Dyck paths that avoid `r` consecutive
//! steps in one direction, built on Euler (polynomial) coefficients.
//!
//! Every count is exact: closed forms, recurrence tables, polynomial
//! extensions and generating functions are cross-checked against each other
//! and against brute-force enumeration in [`oracle`].

pub mod error;
pub mod euler;
pub mod exact;
pub mod oracle;
pub mod paths;
pub mod poly;
pub mod polyseq;
pub mod reference;
pub mod report;
pub mod series;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRational};
pub use paths::{BallotPoint, Direction, DyckPoint, RunRestriction};
pub use poly::DensePolynomial;
pub use report::Report;
pub use tables::{CountTable, TableKind};
