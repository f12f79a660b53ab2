//! Exact combinatorics of multigraph orientations.
//!
//! * [`multigraph`]: multigraphs, minors with stable edge identities, spanning
//!   forests and their activities.
//! * [`orientation`]: orientations and directed-graph predicates.
//! * [`tutte`]: Tutte polynomials by deletion–contraction and by activities.
//! * [`equivalence`]: cut, Eulerian and Eulerian-cut equivalence classes and
//!   the Tutte evaluations that count them.
//! * [`bijection`]: reduced orientations and the staged map from Eulerian
//!   classes of totally cyclic orientations to spanning trees with no
//!   internally active edge, with its inverse.

pub mod bijection;
pub mod corpus;
mod dsu;
mod edge_set;
pub mod equivalence;
mod error;
pub mod format;
pub mod multigraph;
pub mod orientation;
pub mod tutte;

pub use bijection::{NormalContext, StageState};
pub use corpus::named;
pub use dsu::DisjointSets;
pub use edge_set::{EdgeId, EdgeSet, MAX_EDGES};
pub use error::{Error, Result};
pub use multigraph::{Activities, EdgeStatus, GraphView, Multigraph, SpanningForest};
pub use orientation::Orientation;
pub use tutte::TuttePolynomial;
