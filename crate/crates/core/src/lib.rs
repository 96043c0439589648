//! Finite simplicial complexes with an emphasis on normal pseudomanifolds.
//!
//! The crate is `no_std` (with `alloc`). It covers:
//!
//! * the immutable [`Complex`] data model with links, stars, antistars, joins,
//!   cones, one-point suspensions, skeleta and edge graphs;
//! * decision procedures for weak/normal pseudomanifolds, boundaries, strong
//!   connectivity, crossing graphs and orientability of surfaces ([`verify`]);
//! * surgery: starring/collapsing, elementary handle addition and deletion,
//!   connected sums, generalised bistellar moves and the decomposition of
//!   orientable surfaces ([`moves`]);
//! * generation and recognition of stacked spheres and balls ([`stacked`]);
//! * an exact, exhaustive checker for Gromov's combinatorial q-rigidity
//!   ([`rigidity`]);
//! * lower-bound face-vector analytics ([`bounds`]);
//! * a small catalog of reference complexes ([`catalog`]).
//!
//! Vertices carry string tokens. Internally they are dense indices ordered by
//! the canonical token order (numeric when every token is a decimal integer,
//! lexicographic otherwise), so two complexes with the same facets compare
//! equal regardless of input order.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod bounds;
pub mod catalog;
mod complex;
mod error;
mod fvector;
mod graph;
pub mod iso;
pub mod moves;
mod ops;
pub mod rigidity;
pub mod stacked;
mod token;
pub mod verify;

pub use complex::{Complex, Face, VertexId};
pub use error::{Error, Result};
pub use fvector::{binomial, FaceVector};
pub use graph::{Distance, Graph};
pub use token::{canonical_token_cmp, is_decimal_token};
