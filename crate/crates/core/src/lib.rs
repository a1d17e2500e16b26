//! Exact computations with representations of finite EI categories.

pub mod algebra;
pub mod category;
pub mod error;
pub mod field;
pub mod grid;
pub mod group;
pub mod linalg;
pub mod module;
pub mod resolution;
pub mod verify;

pub use error::{Error, Result};
