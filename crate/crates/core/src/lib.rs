//! Structure theory and numerics for homogeneous CR manifolds `K0/V0` of
//! compact groups and the Mostow fibrations of their complexifications.

pub mod catalog;
pub mod cr;
pub mod error;
pub mod exact;
pub mod lie;
pub mod numerics;
pub mod parabolic;
pub mod report;
pub mod spec_io;
pub mod verify;

pub use error::{CrError, Result};
