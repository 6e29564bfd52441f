//! JSON formats, the locus table fixture and batch execution on top of
//! `hypermoduli-core`.

pub mod codec;
pub mod fixture;
mod request;

pub use request::{Command, Engine, Failure, Provenance, Report, Request};

use rayon::prelude::*;
use serde_json::Value;

use codec::Malformed;

/// Runs every request of a JSON array, possibly in parallel; reports keep
/// the input order.
pub fn run_batch(engine: &Engine, requests: &Value) -> Result<Vec<Report>, Malformed> {
    let items = codec::array(requests, "input")?;
    Ok(items
        .par_iter()
        .enumerate()
        .map(|(i, v)| match Request::decode(v, &format!("input[{i}]")) {
            Ok(r) => engine.run(&r),
            Err(m) => engine.reject(m),
        })
        .collect())
}
