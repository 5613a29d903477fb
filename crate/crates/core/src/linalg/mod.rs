//! Exact dense linear algebra over the scalar tower and over Z.

mod inertia;
mod integer;
mod matrix;
mod subspace;

pub use inertia::{inertia_of, Inertia};
pub use integer::{
    hermite_normal_form, int_det, int_identity, int_mul, smith_normal_form, IntMatrix,
};
pub use matrix::{axpy, dot, is_zero_vec, scaled, unit_vector, vec_add, vec_sub, Matrix};
pub use subspace::{constrained_kernel, Subspace};
