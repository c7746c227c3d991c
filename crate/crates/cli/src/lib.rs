//! Library surface of the harmkit command-line tool: map file storage,
//! deterministic SVG rendering, and the bulk verification suites. The
//! binary in `main.rs` is a thin argument-parsing layer over these.

pub mod mapfile;
pub mod render;
pub mod verify;
