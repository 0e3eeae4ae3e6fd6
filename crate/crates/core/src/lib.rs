//! Exact computation engine for simple closed curves and Dehn-twist words on
//! closed oriented surfaces, with machine-checkable certificates for the
//! standard twist relations and a small symbolic proof replayer.

pub mod error;
pub mod atlas;
pub mod surface;

pub use error::{Error, Result};
