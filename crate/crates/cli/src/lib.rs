//! Command-line front end for the `gwistor` crate.

pub mod app;
pub mod eval;
pub mod expr;
