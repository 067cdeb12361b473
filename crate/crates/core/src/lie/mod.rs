//! Ambient algebras, subalgebras and their radicals.

pub mod ambient;
pub mod subalgebra;

pub use ambient::{AmbientAlgebra, AmbientKind};
pub use subalgebra::{
    associative_closure, is_nilpotent_space, jordan_flags, make_subalgebra, normalizer, Closure, JordanFlags,
    Subalgebra,
};
