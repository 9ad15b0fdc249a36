//! Permutation polynomials over small finite fields.
//!
//! Everything is exact: elements are integer codes, polynomials are dense
//! coefficient vectors, and every closed-form criterion in [`criteria`] and
//! [`families`] is cross-checked against the brute-force definition.

pub mod audit;
pub mod bipoly;
pub mod cache;
pub mod criteria;
pub mod error;
pub mod families;
pub mod field;
pub mod linalg;
pub mod lucas;
pub mod normalize;
pub mod ortho;
pub mod poly;
pub mod search;
pub mod tables;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldRef, FieldSpec};
pub use poly::Poly;
