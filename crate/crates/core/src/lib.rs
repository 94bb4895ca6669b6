pub mod code;
pub mod counting;
pub mod error;
pub mod field;
pub mod matrix;
pub mod normalform;
pub mod oracle;

pub use code::{LcdType, LinearCode};
pub use error::{Error, Result};
pub use field::{Element, Field};
pub use matrix::{Matrix, Rref};
