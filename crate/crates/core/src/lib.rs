//! Conjugacy classes of reducible cyclic subgroups of `GL(2,q)`.
//!
//! For `m | q-1` the number of conjugacy classes of cyclic subgroups of
//! order `m` that fix a line is `(rho(m) + delta(m)) / 2`. This crate computes
//! that count, checks it against several independent enumerations, and
//! produces one canonical diagonal representative per class.
//!
//! * [`numtheory`]: factorizations, `rho`, `delta`, involutions of `(Z/m)^*`.
//! * [`ff`]: the field `GF(p^k)` with a deterministic primitive element.
//! * [`gl2`]: 2x2 invertible matrices, orders, reducibility, cyclic subgroups.
//! * [`census`]: the diagonal model, Burnside counting and the matrix census.
//! * [`reps`]: Type I/II/III class representatives.
//! * [`cli`]: the `redcyc` command-line front end.

pub mod census;
pub mod cli;
mod error;
pub mod ff;
pub mod gl2;
pub mod numtheory;
pub mod reps;

pub use error::{Error, Result};
pub use ff::{FieldElement, FieldSpec};
pub use gl2::{Gl2, Mat2, SubgroupKey};
pub use numtheory::{CountReport, FactoredInt};
