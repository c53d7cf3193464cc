use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("group order must be at least 1")]
    InvalidOrder,

    #[error("group table validation failed: {0}")]
    InvalidTable(String),

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("connection set must not contain the identity")]
    IdentityInConnectionSet,

    #[error("digraph must be nonempty")]
    EmptyDigraph,

    #[error("vertex set must be a proper nonempty subset of the vertices")]
    InvalidFragment,

    #[error("digraph is not strongly connected; arc connectivity is undefined")]
    NotStronglyConnected,

    #[error("{what} exceeds capacity cap ({size} > {cap})")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("unknown group spec `{0}` (expected Zn, Dn, Sn, or `A x B`)")]
    UnknownGroupSpec(String),

    #[error("self-loop or duplicate arc ({0}, {1})")]
    BadArc(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
