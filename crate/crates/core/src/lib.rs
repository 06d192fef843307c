//! Weighted distance moments of connected graphs.
//!
//! The moment of a graph `G` under a vertex weight `ρ` is
//! `M_G^ρ = Σ_u Σ_v ρ(v)·dist(u, v)`. Unit weights give the total distance
//! (and so the mean distance), `ρ = ½` the Wiener index, and degree weights
//! the degree distance.
//!
//! The crate builds graft products (branches glued onto a host graph at
//! chosen vertices) together with the combined weight, and evaluates the
//! closed-form moment formulas for these products from the factors alone.
//! Every formula can be checked exactly against a direct BFS computation on
//! the constructed product; see [`verify`].
//!
//! All numeric code is generic over [`Scalar`]. [`Rational`] gives exact
//! results; `f64` is available for quick numerics. The aliases below fix the
//! scalar for the common cases.

pub mod closed_forms;
pub mod distance;
pub mod error;
pub mod graph;
pub mod isomoment;
pub mod isomorphism;
pub mod json;
pub mod moments;
pub mod products;
pub mod random;
pub mod rational;
pub mod scalar;
pub mod verify;
pub mod weights;

pub use distance::{bfs_distances, distance_matrix, is_connected, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use isomorphism::are_isomorphic;
pub use moments::{indices, indices_with, moment, moment_at, MomentReport};
pub use products::{graft, Attachment, Branch, GraftProduct, GraftSpec};
pub use rational::Rational;
pub use scalar::Scalar;
pub use weights::WeightFunction;

pub type ExactWeights = WeightFunction<Rational>;
pub type ExactBranch = Branch<Rational>;
pub type ExactSpec = GraftSpec<Rational>;
pub type ExactProduct = GraftProduct<Rational>;
pub type ExactReport = MomentReport<Rational>;

pub type FloatWeights = WeightFunction<f64>;
pub type FloatSpec = GraftSpec<f64>;
pub type FloatProduct = GraftProduct<f64>;
pub type FloatReport = MomentReport<f64>;
