//! Exact invariants of Brieskorn surface singularities `x^a + y^b + z^c = 0`.
//!
//! Everything is integer or exact-rational arithmetic: the integral closure
//! filtration of the maximal ideal, normal reduction numbers, geometric and
//! fundamental genus, the resolution dual graph, and the classification
//! predicates built from them. Each closed form is paired with an independent
//! brute-force route so the two can be checked against each other.

pub mod classify;
pub mod cli;
pub mod error;
pub mod filtration;
pub mod genus;
pub mod numtheory;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
pub use ring::BrieskornTriple;
