//! Exact computation with finitely generated subsemigroups and submonoids
//! of 2x2 matrices over a cyclotomic field.

pub mod mat2;
pub mod multiplicity;
pub mod rank1;
pub mod pm2;
pub mod projline;
pub mod sample;
pub mod subgroups;
pub mod scalar;

pub use mat2::Mat2;
pub use pm2::PM2Elem;
pub use projline::{PointSet, ProjPoint};
pub use scalar::{CycloScalar, Multiplicity, Rational};
