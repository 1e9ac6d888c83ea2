//! Exact computations with injective hulls and Helly graphs.
//!
//! The crate computes tight spans of finite rational metric spaces, Helly
//! hulls of finite graphs, Helly subdivisions and round cliques, classifies
//! graph automorphisms, and builds Helly graphs from lattices, thickenings
//! and the braid group on three strands. All arithmetic is exact.
//!
//! Core algorithms are generic over an exact [`Scalar`]; the aliases below
//! fix the common instantiations.

pub mod automorphism;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod helly;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod metric;
pub mod oracle;
pub mod poset;
pub mod scalar;
pub mod setfamily;
pub mod subdivision;
pub mod tight_span;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use metric::{graph_distance_matrix, validate_metric, FiniteMetric};
pub use poset::Poset;
pub use scalar::{Field, Rational, Rational64, Scalar};

/// Metric with arbitrary precision rational distances.
pub type RationalMetric = FiniteMetric<Rational>;
/// Integer-valued metric, e.g. a graph metric.
pub type IntMetric = FiniteMetric<i64>;
/// Point of the injective hull of a rational metric space.
pub type RationalExtremal = tight_span::ExtremalFunction<Rational>;
/// Point of the injective hull with integer coordinates: a Helly hull vertex.
pub type IntegerExtremalFunction = Vec<i64>;

/// Enumeration limits. Hull and tight-span computations are exponential, so
/// every enumerating entry point refuses inputs above these sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Points of a metric space for tight-span enumeration.
    pub tight_span_points: usize,
    /// Vertices of a graph (or points of an integer metric) for hull enumeration.
    pub hull_vertices: usize,
    /// Vertices for the brute-force Helly check.
    pub brute_force_vertices: usize,
    /// Upper limit on `2·N!·|V|` for the N-th subdivision.
    pub subdivision_size: usize,
    /// Radius of Garside Cayley balls.
    pub garside_radius: usize,
    /// Radius of the window explored around an oracle basepoint.
    pub window_radius: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            tight_span_points: 10,
            hull_vertices: 12,
            brute_force_vertices: 8,
            subdivision_size: 64,
            garside_radius: 3,
            window_radius: 12,
        }
    }
}

impl Bounds {
    /// Every limit raised far enough for test corpora and fixtures.
    pub fn generous() -> Self {
        Bounds {
            tight_span_points: 12,
            hull_vertices: 64,
            brute_force_vertices: 12,
            subdivision_size: 512,
            garside_radius: 4,
            window_radius: 24,
        }
    }
}
