//! Exact computation with 2-generated axial algebras of Monster type and
//! their C2-axets.
//!
//! The crate is layered bottom-up:
//!
//! * [`fields`]: exact scalars over Q, F_p, a quadratic extension, and
//!   rational function fields,
//! * [`linalg`]: dense exact linear algebra over any such field,
//! * [`algebra`]: structure-constant algebras, axes, fusion laws, Miyamoto
//!   involutions and dihedral axis families,
//! * [`axet`]: C2-axets as finite combinatorics,
//! * [`catalog`]: the built-in algebras 2B, 3C(eta) and 6A(alpha, beta),
//! * [`io`]: the scalar expression grammar and JSON documents,
//! * [`replicate`]: reproducible reports for the computational claims.

pub mod algebra;
pub mod axet;
pub mod catalog;
pub mod fields;
pub mod io;
pub mod linalg;
pub mod replicate;

pub use fields::{arith, char_constraints, ArithOp, CharConstraints, Field, FieldError, FieldKind, Scalar};
