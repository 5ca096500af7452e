//! Generalized Fibonacci words, their word fractals, and the generalized
//! Fibonacci snowflake polyominoes.
//!
//! The crate is organized bottom-up:
//!
//! - [`word`]: the `i`-Fibonacci words, morphisms, standard sequences and
//!   exact characteristic words.
//! - [`path`]: Freeman-coded paths, the running-sum/difference operators and
//!   the closure and simplicity predicates.
//! - [`curve`]: the odd-even drawing rule and curve-level checks.
//! - [`snowflake`]: the `q_n^[i]` words, snowflake boundaries, polyomino
//!   rasterization and square BN-factorizations.
//! - [`metrics`]: generalized Pell numbers and the perimeter, area, bounding
//!   square and dimension formulas.
//! - [`tiling`]: translation lattices and finite window coverage.
//! - [`render`]: deterministic SVG output.
//! - [`conformance`]: the property suite behind `fibward verify`.

pub mod arith;
pub mod conformance;
pub mod curve;
pub mod error;
pub mod metrics;
pub mod path;
pub mod render;
pub mod snowflake;
pub mod tiling;
pub mod word;

pub use curve::{odd_even_draw, Curve, Heading, SymmetryClass};
pub use error::{Error, Result};
pub use metrics::EndpointVector;
pub use path::{LatticePath, PathWord, Point};
pub use snowflake::{BnFactorization, Polyomino, QWord};
pub use tiling::{CoverageReport, TilingCertificate, Window};
pub use word::{BinaryWord, DirectiveSequence, Morphism};
