//! File format and command-line front end for [`polyhull_core`].

pub mod cli;
pub mod format;

pub use format::{
    format_constraint, format_poly, parse_constraint, parse_poly, parse_poly_file, ParseError,
    PolyFile,
};
