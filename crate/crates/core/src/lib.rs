//! Exact maximum-weight clique search that first splits the graph by its
//! modular decomposition, plus generators and a benchmark harness for
//! comparing against plain branch and bound.

pub mod bench;
pub mod bitset;
pub mod dimacs;
pub mod error;
pub mod generators;
pub mod graph;
pub mod md_solver;
pub mod mdtree;
pub mod wclique;

pub use dimacs::{load_dimacs, parse_dimacs, write_dimacs};
pub use error::{Error, Result};
pub use graph::{figure1, Graph, GraphBuilder, Solution, Status, VertexSet, Weight};
pub use md_solver::{fold_check, solve, solve_node, MdSolveReport, NodeSolution, SolveTimings};
pub use mdtree::{decompose, quotient, verify_tree, MdNode, MdTree, NodeKind, QuotientGraph};
pub use wclique::{brute_force_clique, max_weight_clique, SolverConfig, VertexOrdering};
