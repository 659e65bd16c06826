//! Graded and multigraded Betti numbers of path ideals of graphs.
//!
//! Two independent routes are provided:
//!
//! * an oracle that reads multigraded Betti numbers of `S/I_t(G)` off the
//!   reduced homology of subcomplexes of the Taylor simplex
//!   ([`betti::multigraded_betti`], [`betti::graded_betti_table`]);
//! * closed-form counting formulas for lines, cycles and stars
//!   ([`formula`]).
//!
//! The [`simplicial`] and [`homology`] modules carry the topological
//! machinery, [`graph`] and [`path_ideal`] the combinatorial inputs.

pub mod betti;
pub mod field;
pub mod formula;
pub mod graph;
pub mod homology;
pub mod path_ideal;
pub mod simplicial;

pub use betti::{BettiTable, MultigradedRecord};
pub use field::PrimeFieldMatrix;
pub use formula::{Coverage, Family, FormulaParams};
pub use graph::{Graph, VertexSet};
pub use homology::HomologyProfile;
pub use path_ideal::MonomialIdeal;
pub use simplicial::{Face, SimplicialComplex};

/// Default characteristic of the coefficient field.
pub const DEFAULT_PRIME: u32 = 32003;

/// Upper bound on the number of faces the homology engine will expand.
pub const FACE_CAP: usize = 1 << 16;
