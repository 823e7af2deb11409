//! Exact combinatorial models for cyclic bar constructions and traces.
//!
//! The crate is organised bottom-up:
//!
//! * [`injcat`] — finite sets `{1, .., n}` with injective maps, permutations,
//!   concatenation and the block shuffle.
//! * [`basedsets`] — finite pointed sets, smash products and column-sparse
//!   matrices over a pointed set.
//! * [`abelian`] — arbitrary-precision integer matrices, Smith normal form,
//!   finitely presented abelian groups and chain-complex homology.
//! * [`simplicial`] — lazily materialised simplicial and cyclic sets with a
//!   fixed truncation degree, plus their integral chain complexes.
//! * [`barcons`] — finite monoids and rings given by multiplication tables,
//!   their bar and cyclic bar constructions, unit groups and matrix rings.
//! * [`operad`] — simplices of the symmetric-group operad, the coend classes
//!   they generate over a family of entry sets, and the monoid structure on
//!   those classes.
//! * [`tracehh`] — the set-level matrix trace into operad classes and the
//!   independent linear trace on Hochschild chains.
//! * [`gammaspace`] — evaluation of a commutative monoid on pointed sets and
//!   pointed simplicial sets, sum diagrams and group completion.
//! * [`verify`] — deterministic seeded check suites shared by the test
//!   harness and the command line tool.
//!
//! Everything is computed exactly over the integers; there is no floating
//! point anywhere in the crate.

pub mod abelian;
pub mod barcons;
pub mod basedsets;
pub mod builtins;
pub mod gammaspace;
pub mod injcat;
pub mod operad;
pub mod simplicial;
pub mod tracehh;
pub mod verify;
