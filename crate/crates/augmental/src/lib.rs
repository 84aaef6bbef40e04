//! Simplicial complexes in the *augmental* setting: every non-void complex
//! contains the empty simplex (dimension −1), and there is a distinct Void
//! complex (dimension −∞) with no faces at all.  Chain complexes therefore
//! extend down to degree −1 and homology picks up an extra unit in low
//! degrees, which makes joins, links and costars behave uniformly.
//!
//! The crate provides:
//! - [`complex`]: the core [`Complex`](complex::Complex) type and its calculus
//!   (links, costars, closed stars, joins, ordered products, skeleta, ...);
//! - [`homology`]: integer / rational / prime-field homology of complexes and
//!   pairs, including local homology at a face;
//! - [`snf`]: Smith normal form over arbitrary-precision integers;
//! - [`graded`]: finitely generated graded modules (rank + invariant factors);
//! - [`manifold`]: pseudo / quasi / homology manifold classification,
//!   homological boundaries, orientability;
//! - [`stanley_reisner`]: face-ring invariants (Hilbert series,
//!   Cohen–Macaulay, Buchsbaum, Gorenstein, k-CM);
//! - [`kunneth`]: the join chain isomorphism, Künneth-style predictions for
//!   joins and products, and verifiers that re-check them from scratch;
//! - [`corpus`] and [`io`]: built-in example complexes and file formats;
//! - [`cli`]: the command-line front end used by the `augmental` binary.

pub mod calculus;
pub mod chain;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod graded;
pub mod homology;
pub mod io;
pub mod kunneth;
pub mod manifold;
pub mod sample;
pub mod snf;
pub mod stanley_reisner;

pub use complex::{Complex, ExtendedDim, Simplex};
pub use graded::GradedModule;
pub use homology::Coeff;
