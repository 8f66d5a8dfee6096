//! Exact computations with toric varieties and their Cox quotient
//! presentations.
//!
//! * [`intlin`]: integer matrices, Smith and Hermite normal forms, kernels,
//!   cokernels and lattice membership over `BigInt`.
//! * [`cones`], [`fans`]: rational polyhedral cones and fans, with
//!   nondegeneracy, completeness and a convex-support test.
//! * [`cox`]: the presentation `X = Z / H` of a toric variety, class groups
//!   and lifting subtori of the big torus.
//! * [`groups`]: diagonalizable subgroups of tori, quotient types of
//!   corank-one subgroups, monomial matrices.
//! * [`pipeline`]: placing a codimension-one torus action inside the big torus.
//! * [`json`], [`cli`]: file formats and the `toric-cox` command.
//!
//! ```
//! use toric_cox::{corpus, cox::cox_presentation};
//!
//! let p = cox_presentation(&corpus::projective_plane());
//! let cl = p.class_group().unwrap();
//! assert_eq!((cl.free_rank, cl.torsion.len()), (1, 0));
//! assert!(p.acts_freely());
//! ```

pub mod cli;
pub mod cones;
pub mod corpus;
pub mod cox;
pub mod fans;
pub mod groups;
pub mod intlin;
pub mod json;
pub mod pipeline;
