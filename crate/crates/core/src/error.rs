use thiserror::Error;

use crate::poset::PatternKind;

/// Errors raised by graph, poset and semigroup constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph or poset needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is out of range for {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("{what}: {size} exceeds the supported bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element {element} is out of range for a poset on {n} elements")]
    InvalidElement { element: usize, n: usize },
    #[error("relations are cyclic through element {0}")]
    NotAntisymmetric(usize),
    #[error("a semigroup needs at least one generator")]
    EmptyGenerators,
    #[error("generator index {index} is out of range for {count} generators")]
    InvalidGenerator { index: usize, count: usize },
    #[error("poset contains the {0} pattern")]
    PatternPrecondition(PatternKind),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_at_most(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::TooLarge { what, size, bound })
    } else {
        Ok(())
    }
}
