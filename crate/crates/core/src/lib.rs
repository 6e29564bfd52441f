//! Exact classical invariants of binary forms and moduli of hyperelliptic
//! curves whose reduced automorphism group is cyclic or `A4`.
#![no_std]

extern crate alloc;

pub mod a4;
pub mod arith;
pub mod cyclic;
mod error;
pub mod forms;

pub use error::{Error, Result};

/// Kernel version reported alongside every result.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
