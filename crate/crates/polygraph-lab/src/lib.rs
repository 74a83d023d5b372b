//! Construction and spectral analysis of (a,b)-regular graphs.
//!
//! An (a,b)-regular graph is an a-regular graph in which the link of every
//! vertex (the subgraph induced on its neighbor set) is b-regular. The crate
//! builds the main families with this property: polygraphs `G_S` over a
//! high-girth base graph, torus triangulations, tensor products, and the
//! distance-two construction from biregular bipartite graphs. On top of the
//! constructions it provides the spectral toolkit used to study them:
//! non-backtracking walk matrices, formula-driven polygraph spectra, lower
//! bounds for the second eigenvalue, and high-dimensional-expansion
//! diagnostics (triangle census, edge-adjacency walk gap, coboundary and
//! discrepancy witnesses).

pub mod bounds;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod hdx;
pub mod io;
pub mod link;
pub mod nbw;
pub mod polygraph;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{BipartiteBiregularGraph, RegularGraph};
pub use polygraph::{DistanceMultiset, Polygraph};
