//! Convolution algebras, invariant measures and tracial states of finite
//! groupoids.
//!
//! A finite groupoid carries a natural *-algebra structure on its
//! complex-valued functions (convolution along composable pairs). This crate
//! builds that algebra together with the objects attached to it:
//!
//! * invariant probability measures on the unit space and the polytope they
//!   form,
//! * tracial states, their associated measures, and the canonical trace of a
//!   measure,
//! * the fixed-point trace of an invariant measure, both as a closed form on
//!   the isotropy bundle and via bisection decompositions,
//! * a faithful matrix realization with its block (Wedderburn) decomposition,
//!   extreme tracial states, tracial ideals and the restriction exact
//!   sequence.
//!
//! Convolution, star, expectations and all structure constants are exact
//! (complex rationals); floating point enters only through operator norms and
//! eigendecompositions.

pub mod algebra;
pub mod error;
pub mod format;
pub mod groupoid;
pub mod linalg;
pub mod measure;
pub mod scalar;
pub mod trace;

pub use algebra::{AlgebraElement, BlockDecomposition, MatrixRealization};
pub use error::{Error, Result, TraceViolation};
pub use groupoid::{Bisection, GroupAction, Groupoid, GroupoidData};
pub use measure::Measure;
pub use scalar::{Rational, Scalar};
pub use trace::{ExtremeTrace, IsotropyState, Trace, TraceFiber};
