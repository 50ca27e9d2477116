use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation (n < 2, odd n for
    /// a parity bipartition, mismatched rings, non-coprime moduli, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured size cap would be exceeded.
    #[error("{what} is {size}, exceeding the cap of {cap}")]
    Resource {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    /// A graph that should be regular was not. Only a construction bug triggers this.
    #[error("graph is not regular: vertex {vertex} has degree {found}, expected {expected}")]
    NotRegular {
        vertex: usize,
        found: usize,
        expected: usize,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, size: u64, cap: u64) -> Result<()> {
    if size > cap {
        Err(Error::Resource { what, size, cap })
    } else {
        Ok(())
    }
}
