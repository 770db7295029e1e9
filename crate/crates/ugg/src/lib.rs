//! File formats, SVG rendering, seeded random trees and the acceptance
//! runners behind the `ugg` command-line tool.

pub mod error;
pub mod format;
pub mod random;
pub mod selftest;
pub mod svg;

pub use error::{Result, WorkbenchError};
