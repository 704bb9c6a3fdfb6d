#![no_std]
extern crate alloc;

pub mod detect;
pub mod error;
pub mod generators;
pub mod graph;
pub mod holes;
pub mod hub_partition;
pub mod builder;
pub mod central_bag;
pub mod oracle;
pub mod separators;
pub mod set;
pub mod treedec;

pub use error::{Error, Result};
pub use graph::{Graph, Induced};
pub use set::VertexSet;
pub use treedec::TreeDecomposition;
