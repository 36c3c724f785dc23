//! Exact computer-algebra engine for the 8-dimensional Kac-Paljutkin Hopf
//! algebra: its Yetter-Drinfeld modules, their braidings and Nichols
//! algebras, and the lifted Hopf algebras built on top of them.
//!
//! Everything is computed over Q(zeta_8) with arbitrary-precision rationals;
//! there is no floating point anywhere in the engine (the one exception is
//! the growth-rate estimator, which is explicitly an estimate).

pub mod cyclo;
pub mod hopf;
pub mod liftings;
pub mod nichols;
pub mod yd;

pub use cyclo::{Cyclo, CycloMatrix};
pub use hopf::{HopfAlgebra, HopfMorphism};

/// Version stamp carried in serialized output and cache entries.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
