//! Exact computations on signed graphs, their coloring complexes and the
//! type B Eulerian-idempotent Hodge decomposition of top homology.

pub mod group_algebra;
pub mod hyperoctahedral;
pub mod ratmat;
pub mod signed_graph;
pub mod coloring_complex;
pub mod hodge;
pub mod corpus;
pub mod cli;
