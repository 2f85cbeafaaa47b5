pub mod affine;
pub mod error;
pub mod params;
pub mod qseries;
pub mod rational;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
