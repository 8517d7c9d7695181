//! Exact-arithmetic line geometry of classical elliptic 3-space.
//!
//! Every computation runs over the rationals with zero tolerance: points,
//! lines, forms, and maps are exact, and every reported verdict is a
//! theorem about the concrete instance, not a numerical estimate.
//!
//! The layers, bottom to top:
//!
//! * [`scalar`] and [`mat`] — rational scalars and dense exact linear
//!   algebra (row reduction, kernels, determinants, congruent
//!   diagonalization).
//! * [`projective`] — points and subspaces of projective spaces over the
//!   rationals, with span, meet, and incidence.
//! * [`polarity`] — symmetric bilinear forms on 3-space, conjugacy, and
//!   the certification that a form is anisotropic (an elliptic polarity).
//! * [`klein`] — the quadric model of line geometry: Plücker coordinates,
//!   the quadratic form and its polarity, the involution induced by an
//!   elliptic polarity of 3-space, its two invariant planes, and the
//!   projections onto them ([`klein::EllipticSpace`]).
//! * [`clifford`] — parallelism of lines through the invariant planes:
//!   orthogonal intersection, left/right parallelism, transversal
//!   counting, spreads, and reguli.
//! * [`linemaps`] — line transformations: reflections, matrix-induced
//!   maps, table perturbations for negative controls, the
//!   direct/opposite classification, induced plane maps, and the
//!   admissibility checks.
//! * [`gnomonic`] — the projected-conic model of a regulus and the full
//!   quadrangle configuration used for the plane-map injectivity
//!   argument.
//! * [`verify`] — the registry of named, seeded, deterministic
//!   verification scenarios with machine-readable reports.
//! * [`cli`] — the `cliffline` binary: queries and verification runs.

pub mod cli;
pub mod clifford;
pub mod error;
pub mod gnomonic;
pub mod klein;
pub mod linemaps;
pub mod mat;
pub mod polarity;
pub mod projective;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use clifford::{Regulus, Spread, TransversalCount};
pub use error::{Error, Result};
pub use klein::{EllipticSpace, Line, Side};
pub use linemaps::{Classification, LineMap, PlaneMap};
pub use mat::Mat;
pub use polarity::Polarity;
pub use projective::{Point, Subspace};
pub use sample::Sampler;
pub use scalar::Scalar;
pub use verify::{Report, Status};
