//! Exact symbolic toolkit for the braided Lie algebra sl(2)_q.
//!
//! Everything is computed over the rational function field Q(q) (see
//! [`qscalar`]); the parameters `h` and `c` of the quantum hyperboloid are
//! exact rationals (or, where needed, elements of Q(q)) fixed per
//! computation.

pub mod algebra;
pub mod braided;
pub mod error;
pub mod involution;
pub mod linalg;
pub mod qscalar;
pub mod spin_reps;
pub mod trace;
pub mod uq_modules;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use qscalar::{qint, CScalar, QScalar};
