//! Exact computation of the Grothendieck classes and Betti numbers of the
//! moduli spaces `M̄(0,n)` of stable n-pointed rational curves, together with
//! the polynomial families that control them.
//!
//! All arithmetic is exact: big rationals, dense polynomials and truncated
//! power series over any [`ring::Ring`]. The class of `M̄(0,n)` can be
//! obtained by five independent routes (see [`classes::Formula`]) that are
//! checked against one another, and the [`suite`] module bundles every
//! cross-check and fixture into a verification run.

pub mod classes;
pub mod cli;
pub mod combinat;
pub mod identities;
pub mod lambert;
pub mod poly;
pub mod ppoly;
pub mod report;
pub mod ring;
pub mod series;
pub mod suite;
