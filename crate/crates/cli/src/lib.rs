//! Command-line front end: argument parsing, result documents and their
//! JSON, LaTeX and text renderings.

pub mod app;
pub mod document;
pub mod render;

pub use app::{execute, run, Cli, Command, Format, Outcome};
pub use document::{ResultDocument, SCHEMA_VERSION};
