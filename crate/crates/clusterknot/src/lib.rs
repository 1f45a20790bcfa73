//! Exact computation of knot and link invariants from braid words.
//!
//! The library provides three independent routes to the Jones polynomial of
//! a braid closure, plus the two-variable HOMFLY polynomial, all over exact
//! rational arithmetic:
//!
//! * a skein-relation recursion on braid words ([`skein`]),
//! * a Kauffman bracket state sum ([`skein::bracket`]),
//! * a representation into an algebra of projections with a Markov trace
//!   ([`projection`]).
//!
//! Alongside the invariants sits a cluster-seed mutation engine ([`cluster`])
//! with exact coefficient semifields, a Laurent-phenomenon checker, and a
//! Bratteli diagram builder for the graph of seeds modulo equivalence. The
//! [`bridge`] module connects the two worlds: it verifies exchange-relation
//! identities shared by the skein recursion and seed mutation, and searches
//! for evaluations of cluster variables matching Jones polynomials on two
//! strands.
//!
//! All polynomial arithmetic lives in [`laurent`]: multivariate Laurent
//! polynomials with arbitrary-precision rational coefficients, and reduced
//! rational functions built from them.

pub mod braid;
pub mod bridge;
pub mod cluster;
pub mod laurent;
pub mod projection;
pub mod skein;
pub mod verify;

pub use braid::BraidWord;
pub use laurent::{LaurentPoly, RationalFn};
