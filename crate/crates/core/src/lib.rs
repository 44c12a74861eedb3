//! Exact-arithmetic construction of simply laced Lie algebras from a root
//! lattice together with a central extension of `Λ/2Λ` by `{±1}`.
//!
//! The crate is `no_std` (with `alloc`). Everything is exact: bit-packed
//! linear algebra over F₂, integer and rational matrices, and Gaussian
//! rationals for the Heisenberg representation.
//!
//! Module map:
//!
//! * [`f2`] quadratic refinements, Arf invariants, `ℤ/2`-cohomology dimensions
//! * [`lattice`] root enumeration, Weyl groups, the degree-2 del Pezzo lattice
//! * [`extension`] the extension `Ṽ` with `ṽ² = (−1)^{q(v)}`
//! * [`heisrep`] the representation `ρ` of `Ṽ` with `ρ(−1) = −id`
//! * [`liealg`] the Lie algebra `L`, the involution `θ`, the fixed algebra `g`, and `R`
//! * [`grouplift`] the `PGL₂ → SO₃` formulas and representation-level lift checks
//! * [`realtable`] the real 2-descent orbit table for `W(E₆)` involutions
//! * [`quartic`] plane quartic normal forms, contact orders, smoothness probes

#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(all(test, not(feature = "std")))]
#[macro_use]
extern crate std;

pub mod arith;
pub mod error;
pub mod extension;
pub mod f2;
pub mod grouplift;
pub mod heisrep;
pub mod lattice;
pub mod liealg;
pub mod quartic;
pub mod realtable;

pub use error::{Error, Result};
