//! Exact mod-2 characteristic-class calculus and cohomology bookkeeping for
//! linear double disk bundles that are rational spheres.
//!
//! - [`charclass`]: polynomials in Stiefel–Whitney classes over the two-element field.
//! - [`steenrod`]: Steenrod squares via the Wu and Cartan formulas.
//! - [`quillen`]: Quillen's kernel ideal and the spin obstruction test.
//! - [`graded`]: graded abelian groups, Euler characteristics, split Gysin sequences.
//! - [`classifier`]: the sphere-recognition rule pipeline for even dimensions.
//! - [`glue`]: gluing two disk bundles over `S^k` along `KP^2 # -KP^2`.
//! - [`cli`]: the command-line front end.

pub mod charclass;
pub mod classifier;
pub mod cli;
pub mod gf2;
pub mod glue;
pub mod graded;
pub mod quillen;
pub mod steenrod;
