//! Library surface of the atlas CLI: command implementations, reference
//! tables and output formatting, shared by the binary and the test suites.

pub mod cache;
pub mod dump;
pub mod enumerate;
pub mod output;
pub mod series;
pub mod tables;
pub mod verify;
