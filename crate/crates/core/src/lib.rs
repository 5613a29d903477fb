//! Exact constructions of group gradings on real Cayley algebras, their
//! derivation and triality algebras, twisted Hurwitz compositions, and the
//! Type III gradings on the real forms so(7,1) and so(5,3) of D4.

pub mod cli;
pub mod composition;
pub mod d4;
pub mod gradings;
pub mod groups;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod sample;
pub mod scalars;
pub mod twisted;

mod error;

pub use error::{Error, Result};
