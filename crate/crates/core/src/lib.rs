//! Exact computations with quasi-triangular weak Hopf algebras given by
//! structure constants: axiom verification, the braided group `B`, its
//! decomposition, and Yetter-Drinfeld modules.

pub mod braided;
pub mod builders;
pub mod comod;
pub mod error;
pub mod io;
pub mod linalg;
pub mod repcat;
pub mod report;
pub mod scalars;
pub mod smash;
pub mod wha;
pub mod yd;

pub use error::{Error, Result};
pub use linalg::{Matrix, SVec, Subspace};
pub use repcat::HModule;
pub use report::{Check, Report};
pub use scalars::{Field, FieldSpec, Scalar, Q};
pub use wha::{qt_verify, wha_verify, RMatrix, WeakHopfAlgebra};
