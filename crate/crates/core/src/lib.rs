//! Allocation-only core of `letternet`.
//!
//! Turns cleaned letter text into annotated sentences, extracts lexical
//! relations (co-occurrences and heuristic verb/noun pairs), aggregates them
//! into weighted typed graphs, prunes and ranks those graphs, and renders
//! them to interchange formats as strings. Everything here is pure: file
//! access, manifests and the command line live in the `letternet` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod lexeme;
mod pos;

pub mod corpus;
pub mod export;
pub mod extraction;
pub mod network;
pub mod pipeline;

pub use error::{Error, Result};
pub use lexeme::Lexeme;
pub use pos::PosClass;
