//! Classification of nilpotent orbits of θ-groups of simple Lie algebras.

pub mod error;
pub mod grading;
pub mod linalg;
pub mod method1;
pub mod method2;
pub mod nullcone;
pub mod pisys;
pub mod chevalley;
pub mod cli;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
