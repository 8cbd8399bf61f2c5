//! Exact combinatorics behind the linear periods of automorphic sheaves on
//! `GL_{2n}` along `GL_n x GL_n`.
//!
//! Every routine here works over the integers. The crate is organized by
//! subject:
//!
//! - [`coweights`]: coweight lattice classes, partitions and the closed-form
//!   dimension formulas (flag dimensions, automorphism dimensions, relative
//!   dimension bookkeeping).
//! - [`schur`]: symmetric polynomials in finitely many variables, Schur
//!   characters, the Pieri rule and the multiplicity-free decomposition of
//!   `Sym^d(Λ²V) ⊗ Sym^{d'-d}V`.
//! - [`stratcomb`]: involutions, pairings, condition (C) pairs and the signed
//!   induced representation of the symmetric group.
//! - [`flagmod`]: point counts of complete flags and automorphisms of finite
//!   torsion modules as polynomials in `q`.
//! - [`rsorbits`]: classifying sets for `GL_d x GL_{d'}` orbits on complete
//!   flags, checked against orbit enumeration over small finite fields.
//! - [`levi`]: block Levi subgroups of `GL_N`, the antistandard condition and
//!   the coweight inequality over the set `J(λ, ν)`.
//! - [`selftest`]: the verification sweeps exposed by the command line tool.

pub mod coweights;
mod error;
pub mod flagmod;
pub mod fq;
pub mod levi;
pub mod perm;
pub mod qpoly;
pub mod rsorbits;
pub mod schur;
pub mod selftest;
pub mod stratcomb;
pub mod sympoly;

pub use error::{Error, Result};
