//! Library surface of the `circulant` command-line tool: command
//! implementations and the stable export formats, kept importable so
//! integration tests can drive them directly.

pub mod commands;
pub mod formats;
