//! Combinatorics behind twisted character identities for Adams-Johnson
//! packets of real classical and unitary groups.
//!
//! The crate is organized bottom-up: [`symgroup`] (permutations, Bruhat
//! order, θ-lengths), [`clans`] (K-orbits for U(p,q)), [`params`] (Weil
//! group parameters for GL), [`glstd`] (standard modules and formal
//! characters) and [`packets`] (group data, transfer expansions and the
//! two-sided identity check).

pub mod clans;
pub mod glstd;
pub mod packets;
pub mod params;
pub mod rational;
pub mod symgroup;

mod error;

pub use error::{Error, Result};
pub use rational::Rational;
