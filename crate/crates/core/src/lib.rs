//! Exact computer algebra for the q-deformed fermionic quantum space.
//!
//! The crate normal-orders words in fermionic coordinates and derivatives,
//! represents them on the `2^n`-dimensional Grassmann module, builds the
//! deformed `gl(n)`/`igl(n)` generators and verifies their commutation
//! relations, and checks maps onto Castellani's deformed `igl(2)`.
//!
//! Everything is exact: coefficients are rationals or rational functions in
//! the deformation and map parameters. Algebraic objects are generic over a
//! [`Scalar`], so the same code runs symbolically ([`RingElem`]) or at
//! sampled rational points ([`Rational`]).

pub mod algebra;
pub mod castellani;
pub mod ring;
pub mod rep;
pub mod forge;
pub mod scalar;

pub use ring::{Rational, RingElem, Symbol};
pub use scalar::Scalar;
