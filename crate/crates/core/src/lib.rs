//! Arithmetic for certifying mildness of tame restricted-ramification Galois
//! groups over imaginary quadratic fields.
//!
//! The pipeline: exact arithmetic in `k = Q(sqrt(d))` ([`quadfield`]), the
//! class group via reduced binary quadratic forms ([`classgroup`]), mod-p
//! linking numbers from power-residue symbols ([`linking`]), the cup-product
//! trace matrix and determinant certificate ([`mildness`]), and a deterministic
//! resumable scan for qualifying place sets ([`search`]).

pub mod classgroup;
pub mod error;
pub mod linking;
pub mod mildness;
mod modp;
pub mod quadfield;
pub mod search;

pub use error::{Error, Result};
pub use quadfield::{FieldElement, IntegralIdeal, Place, PlaceKind, QuadField, ResidueElement};
