//! Exact arithmetic over the Gaussian rationals.

pub mod echelon;
pub mod matrix;
pub mod poly;
pub mod qi;
pub mod rat;
pub mod subspace;

pub use echelon::Echelon;
pub use matrix::ExactMatrix;
pub use poly::Poly;
pub use qi::{Field, Qi};
pub use rat::Rat;
pub use subspace::{RealSubspace, Subspace};
