//! Exact matroid and oriented-matroid algorithms centred on bicircular
//! matroids, double circuits, and flow lattices.
//!
//! Subsets of a ground set are `u64` bitmasks; element `i` is bit `i`.

pub mod bicircular;
pub mod bits;
pub mod caps;
pub mod catalog;
pub mod doublecirc;
pub mod error;
pub mod graph;
pub mod intlattice;
pub mod matroid;
pub mod oriented;

pub use caps::Caps;
pub use doublecirc::DoubleCircuitReport;
pub use error::{Error, Result};
pub use graph::{GraphFormat, GraphReport, MultiGraph, NamedGraph, Path, SubdivisionStructure};
pub use intlattice::{IntegerLattice, MembershipCertificate, RationalMatrix};
pub use matroid::{ColineReport, Flat, Kind, LatticePathBounds, Matroid};
pub use oriented::{FlowVector, GspCertificate, OrientedMatroid, SignedSet};
