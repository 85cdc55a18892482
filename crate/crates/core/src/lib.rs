//! Exact arithmetic for cyclic codes of odd length over `Z4[u]/<u^k>`: factorization,
//! ideal enumeration, code construction, duality and the Gray image over Z4.

pub mod codes;
pub mod duality;
pub mod error;
pub mod graymap;
pub mod idealenum;
mod packed;
pub mod polyarith;
pub mod rings;
pub mod specparse;
pub mod z4span;

pub use error::{Error, Result};
pub use polyarith::{F2Poly, Z4Poly};
