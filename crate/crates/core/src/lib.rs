pub mod bounds;
pub mod cli;
pub mod code;
pub mod error;
pub mod fmatrix;
pub mod gf;
pub mod pauli;
pub mod stabilizer;
pub mod statevec;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
