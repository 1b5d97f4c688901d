//! Exact, executable homeomorphisms between filters on ω and their squares.
//!
//! Points of the Cantor space `2^ω` are subsets of ω. This crate works with
//! the eventually periodic ones ([`EvPeriodicSet`]), on which every map below
//! is computed in closed form, and with lazily queried points ([`OraclePoint`])
//! for probing continuity.
//!
//! The main entry point is [`homeo::square_homeo`]: for a non-principal
//! filter `F` with a decision procedure it builds a homeomorphism
//! `2^ω × 2^ω → 2^ω` that maps `F × F` exactly onto `F`.
//!
//! ```
//! use filtersq::homeo::{square_homeo, Value};
//! use filtersq::zoo::dyadic_chain;
//! use filtersq::EvPeriodicSet;
//!
//! let f = dyadic_chain();
//! let h = square_homeo(&f).unwrap();
//! let pair = [Value::Set(EvPeriodicSet::evens()), Value::Set("|1000".parse().unwrap())];
//! let image = h.forward(&pair).unwrap();
//! assert!(f.decide(image[0].as_set().unwrap()));
//! assert_eq!(h.backward(&image).unwrap(), pair);
//! ```

pub mod cantor;
pub mod cli;
pub mod error;
pub mod homeo;
pub mod index_maps;
pub mod named;
pub mod verify;
pub mod zoo;

pub use cantor::{EvPeriodicSet, GroundSet, OraclePoint, TernaryStream};
pub use error::{Error, Result};
pub use homeo::Homeo;
