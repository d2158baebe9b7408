//! Exact geometry of the parametrized Conway configuration of a triangle.
//!
//! Given a triangle by its rational side lengths `(a, b, c)` and a rational
//! triplet `(α, β, γ)`, six points are placed on the side lines:
//! `AA′ = −α(a/c)·AB`, `AA″ = −α(a/b)·AC`, `BB′ = −β(b/a)·BC`,
//! `BB″ = −β(b/c)·BA`, `CC′ = −γ(c/b)·CA`, `CC″ = −γ(c/a)·CB`.
//!
//! The crate decides, without floating point, the incidence facts attached to
//! this configuration:
//!
//! * for `(1, 1, 1)` the six points lie on a circle about the incenter with
//!   squared radius `p² + r²` (Conway's circle);
//! * the one-parameter family of triplets for which that stays true, plus one
//!   extra triplet per isosceles apex;
//! * for `(−1, −1, −1)` the lines `A′C″`, `B′A″`, `C′B″` meet at the Nagel
//!   point, three quadruples are concyclic, and the Nagel point has the same
//!   power `4r²` with respect to each of the three circles;
//! * the unique other triplet whose three lines still meet at the Nagel point,
//!   and the side conditions under which it does not exist.
//!
//! Everything runs over [`numerics::Rational`] in barycentric coordinates. An
//! independent Cartesian route over `ℚ(√D)` ([`numerics::QuadExt`]) and the
//! [`oracle`] module re-derive the same verdicts for cross-checking.

pub mod cli;
pub mod configuration;
pub mod error;
pub mod numerics;
pub mod oracle;
pub mod predicates;
pub mod render;
pub mod theorems;
pub mod triangle;

pub use configuration::{Configuration, HexagonMetrics, PointLabel, Triplet};
pub use error::{GeometryError, Result};
pub use numerics::{parse_rational, FloatPolicy, QuadExt, Rational};
pub use predicates::{BaryCircle, BaryLine, CartCircle, Concurrency, Equidistance};
pub use triangle::{Apex, BaryPoint, CartPoint, CartesianEmbedding, Shape, Triangle};
