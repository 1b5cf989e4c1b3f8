//! Invariants of virtual knots and links given by signed Gauss codes.
//!
//! * [`diagram`]: based Gauss diagrams, codes, chord indices, Alexander
//!   numberings, warping degree and local moves.
//! * [`arrow`]: arrow diagrams, Conway combinations, pairings and the
//!   ascending/descending polynomials.
//! * [`coloring`] and [`matrix`]: coloring matrices, determinants and exact
//!   integer linear algebra.
//! * [`harness`]: exhaustive and sampled checks of the mod-8 determinant
//!   relation and its supporting identities.
//! * [`catalog`]: named knots with golden values.

pub mod arrow;
pub mod catalog;
pub mod coloring;
pub mod combinat;
pub mod diagram;
pub mod harness;
pub mod matrix;
pub mod poly;

pub use arrow::{ArrowDiagram, ConwaySet, Variant};
pub use coloring::{coloring_matrix, determinant, ColoringMatrix};
pub use diagram::{parse_gauss_code, BasedGaussDiagram, ChordId, End, Sign};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
