//! Cone-confined fuzzy Lévy subordinators.
//!
//! The library is organized bottom-up:
//!
//! * [`geometry`] — exact 2-D convex polygon algebra (Minkowski sums, support
//!   values, Hausdorff distance, halfspace intersection, polyhedral cones).
//! * [`fuzzy`] — fuzzy vectors as nested α-cut stacks with levelwise
//!   Minkowski arithmetic and the `d_∞` metric.
//! * [`embedding`] — the support-function embedding of fuzzy vectors into a
//!   discretized function space on `(0,1] × S¹`, its `L^p` metrics, the
//!   inverse map by halfspace intersection, and membership tests for the
//!   embedded cone.
//! * [`levy`] — α-stable pure-jump Lévy models concentrated on the embedded
//!   cone: subordination-condition validation, Pettis centering, series
//!   simulation, pullback to fuzzy states, and pathwise/statistical
//!   verification.
//! * [`rng`], [`sample`], [`stats`] — a portable counter-based random
//!   generator, random-input generators, and small statistics helpers used
//!   by the verification suites.

pub mod embedding;
pub mod fuzzy;
pub mod geometry;
pub mod levy;
pub mod rng;
pub mod sample;
pub mod stats;

pub use embedding::{
    embed, fuzzy_dp, in_embedded_cone, invert, lp_distance, lp_norm, validate_support, DualProbe,
    EmbeddedFunction, EmbeddingError, SphereGrid, ValidityReport,
};
pub use fuzzy::{AlphaGrid, FuzzyError, FuzzyVector};
pub use geometry::{
    convex_hull, halfspace_intersection, ConeSpec, ConvexPolygon, Direction, GeometryError,
    RegionResult, Vec2,
};
pub use levy::{
    char_functional, simulate, verify_path, Atom, Jump, LevyError, LevyModel, LevyTriplet,
    PathReport, Trajectory, TripletReport,
};
pub use rng::CounterRng;
