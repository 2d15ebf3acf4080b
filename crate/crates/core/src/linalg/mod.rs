pub mod algebra;
pub mod commalg;
pub mod matrix;
pub mod poly;
pub mod subspace;
pub mod svec;
pub mod tensor;

pub use algebra::Algebra;
pub use commalg::{split_commutative, SplitOptions};
pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::{Echelon, Quotient, Solver, Subspace};
pub use svec::SVec;
