//! Executable constructive affine schemes over concrete computable rings.
//!
//! The crate provides exact rings ([`Ring`]), their localizations away from
//! a single element ([`localization`]), the Zariski lattice of radicals of
//! finitely generated ideals ([`lattice`]), covers and compatible families
//! ([`sheaf`]) and the structure sheaf with its gluing algorithm
//! ([`structure`]). Every existential statement the algorithms depend on is
//! backed by a certificate that is re-checked by exact arithmetic.

pub mod audit;
pub mod cert;
pub mod error;
pub mod groebner;
pub mod lattice;
pub mod localization;
pub mod ring;
pub mod sample;
pub mod sheaf;
pub mod structure;
pub mod syntax;

pub use cert::{AnnPowerWitness, BezoutCert, RadicalCert};
pub use error::{Error, Result};
pub use ring::{ArithOp, ArithValue, Ring, RingDescriptor, RingElem, Tier};

pub use num_bigint::BigInt;
