//! Exact computation in a pointed Hopf algebra of type A₂×A₂, its small
//! quotients and their modules.

pub mod error;
pub mod hopf;
pub mod idempotents;
pub mod modules;
pub mod pbw;
pub mod qfield;

pub use error::{Error, Result};
