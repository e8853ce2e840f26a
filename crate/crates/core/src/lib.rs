//! Exact-arithmetic closed convex polyhedra.
//!
//! A polyhedron is a conjunction of non-strict linear constraints over an
//! ordered list of variables. Everything here works on that constraint
//! representation alone: there is no vertex/ray (frame) form anywhere.
//!
//! * [`model`]: constraints, systems, polyhedra and point membership.
//! * [`lp`]: exact simplex, entailment, set equality, redundancy removal.
//! * [`projection`]: variable elimination (Gaussian substitution plus
//!   Fourier-Motzkin).
//! * [`hull`]: closure of the convex hull of two polyhedra through the
//!   σ-scaled relaxation, and recession cones.
//! * [`oracle`]: brute-force checkers and instance generators for tests and
//!   benchmarks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod hull;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod projection;

pub use error::Error;
pub use hull::{convex_hull_closure, hull_many, recession_cone};
pub use lp::{entails, is_satisfiable, minimize_system, optimize, set_equal, Direction, LpOutcome};
pub use model::{
    normalize, ConstraintSystem, LinearConstraint, Normalized, Polyhedron, Rational, RationalPoint,
    RawConstraint, RawRelation, Relation, VarOrder,
};
pub use projection::project;

pub type Result<T, E = Error> = core::result::Result<T, E>;
