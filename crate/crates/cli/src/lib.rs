//! Library side of the `qautcert` binary: configuration, suite runners,
//! certificate assembly, diffing and rendering.

pub mod certificate;
pub mod config;
pub mod diff;
pub mod render;
pub mod suites;
