//! Exact scalars: rationals, cyclotomic fields and numeric root reconstruction.

pub mod field;
pub mod numeric;
pub mod rational;

pub use field::{cyclotomic_polynomial, euler_phi, Cyclotomic, Field, FieldSpec, Scalar};
pub use numeric::{reconstruct_exact, roots_in_field, Ball, RootOptions};
pub use rational::Q;
