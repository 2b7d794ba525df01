//! Library side of the `hyperlab` binary: documents and subcommands.

pub mod commands;
pub mod docs;

pub use commands::{run, Cli, Command, Output};
pub use docs::{FamilyDocument, SpaceDocument, SubbaseDocument};
