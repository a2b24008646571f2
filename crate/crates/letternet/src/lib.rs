//! File-system and command-line layer over [`letternet_core`].
//!
//! Reads a letter manifest and its bodies, runs the annotation pipeline on
//! each letter in parallel, builds and prunes networks, and writes GEXF,
//! DOT, JSON, CSV and text reports atomically.

pub mod cli;
pub mod commands;
pub mod config;
mod error;
pub mod io;
pub mod manifest;

pub use error::{Error, Result};
pub use letternet_core as core;
