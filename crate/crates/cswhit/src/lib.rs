//! Exact combinatorics behind the geometric theory of spherical Whittaker
//! functions: root data, minimal cocharacters, weight and tensor
//! multiplicities, Littelmann-style paths, graded cohomology ledgers, and
//! the spherical Hecke action with its Casselman-Shalika consistency check.
//!
//! Everything is computed over the integers (rationals only in transient
//! solves), with `BTreeMap`-backed containers so that every enumeration,
//! report, and serialization is byte-for-byte deterministic.

pub mod error;
pub mod fixtures;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod mvgeom;
pub mod oracle;
pub mod paths;
pub mod repcombinat;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
pub use rootdata::{Coweight, RootDatum, Weight};
