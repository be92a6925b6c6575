//! Virtually cyclic geometric dimension of the fundamental group of a
//! closed, oriented, connected 3-manifold, computed from its prime
//! decomposition and, for non-geometric primes, its JSJ graph.
//!
//! The entry point is [`classify::gdvc_manifold`]. Descriptions are read
//! with [`format::parse_description`].

pub mod cite;
pub mod classify;
pub mod error;
pub mod format;
pub mod geometry;
pub mod gog;
pub mod jsj;
pub mod model;
pub mod orbifold;

pub use classify::{cross_check, decisive_clause, gdvc_corollary_geometric, gdvc_manifold, gdvc_prime, PrimeProfile};
pub use error::{Error, Result};
pub use model::{DimResult, Geometry, ManifoldDescription, PrimeSummand};
