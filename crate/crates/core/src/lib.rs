//! Exact computational algebra for rational Cherednik algebras of
//! `GL_2(F_p)` in characteristic `p`.
//!
//! The crate is organised around the objects it computes with:
//!
//! - [`scalars`]: prime fields, extension fields `F_{p^k}`, multivariate
//!   polynomials in the class parameters `c_lambda`, dense matrices, and
//!   generic-rank linear algebra over all of these.
//! - [`group`]: `GL_2(F_p)`, its reflections `alpha (x) alpha_vee`, and the
//!   conjugacy-class enumeration of reflections.
//! - [`polyring`]: graded bivariate polynomials with the group action,
//!   divided differences, and the Dickson invariants `Q0`, `Q1`.
//! - [`k0ring`]: the Grothendieck ring on the irreducible basis
//!   `S^i h (x) det^j`, tensor/symmetric-power reduction, graded characters,
//!   and a Brauer-character oracle.
//! - [`verma`]: graded pieces of Verma modules, Dunkl operator matrices,
//!   central class sums, block constants, and the explicit singular-vector
//!   families.
//! - [`contraform`]: the contravariant form's kernel filtration at generic
//!   parameters, irreducible characters, reduced characters at `t = 1`, and
//!   the Gram-matrix cross-check.
//!
//! Everything is exact: no floating point anywhere. Generic-parameter ranks
//! are computed either symbolically (fraction-free elimination) or by seeded
//! random evaluation in a large extension field, with certificates upgrading
//! random answers to exact ones whenever the kernel in question is spanned by
//! parameter-free vectors.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and all operations are pure functions, so everything here can
//! be used concurrently without synchronisation.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod contraform;
pub mod error;
pub mod group;
pub mod k0ring;
pub mod polyring;
pub mod rng;
pub mod scalars;
pub mod verma;

pub use error::AlgError;
