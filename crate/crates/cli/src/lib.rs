//! Command-line front end: expression parser, file formats and subcommands.

pub mod commands;
pub mod format;
pub mod parse;
