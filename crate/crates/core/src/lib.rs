pub mod canon;
pub mod classes;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod koszul;
pub mod poset;
pub mod report;
pub mod toric;
pub mod vertex_set;

pub use error::{Error, Result};
