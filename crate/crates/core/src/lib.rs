//! Configuration bases for free Lie algebras and their dual graph bases.

pub mod basis;
pub mod coalg;
pub mod error;
pub mod lie;
pub mod pairing;
pub mod words;

pub use error::{Error, Result};
