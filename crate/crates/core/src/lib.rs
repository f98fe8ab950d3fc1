//! Exact enumeration of the positive solutions of `x(x+1) = 10y(y+1)` and of
//! the pairs satisfying the decimal concatenation identity
//!
//! ```text
//! (y+1)/(x+1) = (x∘(y+1)) / (y∘(x+1))
//! ```
//!
//! where `a∘b` is the integer whose decimal string is that of `a` followed by
//! that of `b`. Every computation is carried out on arbitrary-precision
//! integers; nothing here touches floating point.
//!
//! Layout:
//! - [`numeric`]: integer square root, decimal digit counts, exact rationals.
//! - [`quadring`]: arithmetic in `ℤ[√10]` and exact floors of `(p + q√10)/40`.
//! - [`solver`]: the solution sequence, by affine recurrence and in closed form.
//! - [`concat`]: decimal concatenation and the two forms of the identity check.
//! - [`classify`]: membership in the concatenating subset, monotonicity, gap runs.
//! - [`modscan`]: residue orbits modulo `m` and the power-of-ten exclusion.
//! - [`oracle`]: brute-force ground truth on machine integers.

pub mod classify;
pub mod concat;
mod error;
pub mod modscan;
pub mod numeric;
pub mod oracle;
pub mod quadring;
pub mod solver;

pub use classify::{classify_term, ClassifiedTerm};
pub use error::{Error, Result};
pub use modscan::ResidueOrbit;
pub use numeric::BigRational;
pub use quadring::{QuadInt, ScaledQuad};
pub use solver::{SolutionPair, Solutions};

pub use num_bigint::BigInt;
