//! Decision procedures, bounds and certificates for d-representability of
//! finite simplicial complexes.
//!
//! The toolkit builds the dual complex K', configuration spaces and deleted
//! products as explicit product Z2-complexes, exact rational linear
//! realizations, and a family of independently verifiable certificates
//! (interval representations, planar drawings, collapse sequences,
//! asteroidal maps, symmetric cycles, Kuratowski subdivisions).
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so the whole API is safe to call concurrently. All
//! geometric verdicts use exact rational arithmetic; no floating point
//! enters any decision.

mod bits;
mod error;
mod guards;

pub mod collapse;
pub mod complex;
pub mod config_space;
pub mod fixtures;
pub mod geometry;
pub mod rep;

pub use error::{Error, Result};
pub use guards::Guards;

pub use complex::{
    betti_z2, iota_point, is_d_leray, subdivision_chain, ChainFace, CliqueCheck, Dual, Face,
    GeometricPoint, LerayCheck, SimplicialComplex, VertexLabel,
};
