//! Involutory Cayley graphs over `Z_n` and over the polynomials of degree at
//! most `d` in `Z_n[x]`.
//!
//! Two vertices `a`, `b` are adjacent when `(a - b)^2 = 1` in `Z_n[x]`. The
//! crate builds these finite graphs, computes their invariants exactly, and
//! checks them against closed-form predictions ([`oracle`]).
//!
//! Polynomials of degree at most `d` sit inside the power series ring
//! `Z_n[[x]]` with the same squares, so the power-series graph is served by
//! the same [`poly::PolyRingSpec`].

pub mod error;
pub mod export;
pub mod graph;
pub mod invariants;
pub mod limits;
pub mod oracle;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use graph::{build_cayley_graph, tensor_product, CayleyGraph, Graph};
pub use limits::Limits;
pub use poly::{PolyRingSpec, TruncPoly};
pub use ring::{factorize, Factorization, ZMod};
