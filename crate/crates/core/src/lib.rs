//! Graph geometrization toolkit: dimension-raising cell complexes built from
//! graphs, exact forbidden-minor search, homology-based sphere certificates,
//! exact coloring, and a higher-dimensional discharging engine with exact
//! rational weight accounting.

pub mod chroma;
pub mod complex;
pub mod discharge;
pub mod error;
pub mod exact;
pub mod graph;
pub mod minor;
pub mod topo;

pub use error::{Error, ErrorKind, Result};
pub use complex::{CellComplex, CellId};
pub use graph::{Edge, Graph, Vertex};
