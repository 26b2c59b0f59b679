//! Library surface of the CLI: b-file handling, output rendering, and the
//! identity checks, kept separate from argument parsing so integration tests
//! can exercise them directly.

pub mod bfile;
pub mod render;
pub mod verify;
