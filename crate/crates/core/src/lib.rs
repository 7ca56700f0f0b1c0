//! Exact dimensions of planar spline spaces `C^r_k(Δ)`.
//!
//! Given a triangulated disk with rational vertex coordinates, this crate
//! computes
//!
//! * the true dimension of the space of piecewise polynomials of degree
//!   `k` that are `C^r` across interior edges ([`spline::spline_dimension`]),
//! * Schumaker's lower bound `P_Δ(r,k)` ([`bound::schumaker_bound`]),
//! * the graded Euler characteristic `χ(k)` of the interior chain complex
//!   `⊕R → ⊕R/l_τ^(r+1) → ⊕R/J(v)` and the homological discrepancy
//!   `h¹(k) = dim − χ` ([`complex`]),
//! * local data at interior vertices: Hilbert functions and syzygy degrees
//!   of `J(v)` ([`local`]).
//!
//! Everything is exact. Ranks are computed either by fraction-free integer
//! elimination or modulo random word-size primes ([`rank::RankEngine`]).

pub mod analytics;
pub mod bound;
pub mod checks;
pub mod complex;
pub mod error;
pub mod graded;
pub mod local;
pub mod mesh;
pub mod poly;
pub mod rank;
pub mod report;
pub mod spline;

pub use error::{AlgebraError, MeshError};
pub use mesh::{bundled_mesh, parse_mesh, serialize_mesh, LinearForm, Point2, Rational, Triangulation};
pub use rank::{RankEngine, RankMethod};
pub use spline::{spline_dimension, SplineProblem};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
