//! Maximum-weight clique by folding over the modular decomposition tree.
//!
//! A clique meets at most one child of a parallel node, takes the best clique
//! of every child of a series node, and at a prime node picks a clique of the
//! quotient whose vertices are weighted by the children's optima. Only prime
//! nodes need branch and bound, on a graph with one vertex per child.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, Solution, Status, VertexSet, Weight};
use crate::mdtree::{decompose, quotient, KindCounts, MdTree, NodeId, NodeKind};
use crate::wclique::{max_weight_clique, SolverConfig};

/// Best clique inside the span of one tree node, in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSolution {
    pub node: NodeId,
    pub weight: Weight,
    pub vertices: VertexSet,
    pub status: Status,
}

impl From<NodeSolution> for Solution {
    fn from(s: NodeSolution) -> Self {
        Solution { vertices: s.vertices, weight: s.weight, status: s.status }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveTimings {
    /// Building the decomposition tree.
    pub md: Duration,
    /// The recursive fold, including quotient construction at prime nodes.
    pub solve: Duration,
}

impl SolveTimings {
    pub fn total(&self) -> Duration {
        self.md + self.solve
    }
}

#[derive(Debug, Clone)]
pub struct MdSolveReport {
    pub solution: Solution,
    pub timings: SolveTimings,
    /// Branch-and-bound invocations, one per prime node.
    pub prime_solves: usize,
    pub tree: MdTree,
}

impl MdSolveReport {
    pub fn kind_counts(&self) -> KindCounts {
        self.tree.kind_counts()
    }
}

pub fn solve_node(g: &Graph, tree: &MdTree, node: NodeId, cfg: &SolverConfig) -> NodeSolution {
    fold(g, tree, node, cfg).0
}

/// Folds the subtree at `node`; also returns the number of prime-node solves.
pub fn fold(g: &Graph, tree: &MdTree, node: NodeId, cfg: &SolverConfig) -> (NodeSolution, usize) {
    let mut solved: Vec<Option<NodeSolution>> = vec![None; tree.len()];
    let mut prime_solves = 0;
    for id in tree.postorder(node) {
        let n = tree.node(id);
        let mut children: Vec<NodeSolution> =
            n.children.iter().map(|&c| solved[c].take().expect("children are folded first")).collect();
        let status = children.iter().fold(Status::Optimal, |s, c| s.combine(c.status));
        let result = match n.kind {
            NodeKind::Leaf => {
                let v = n.vertex.expect("leaf vertex");
                NodeSolution { node: id, weight: g.weight(v), vertices: VertexSet::singleton(v), status }
            }
            NodeKind::Parallel => {
                // First maximum in canonical child order.
                let best = children
                    .iter()
                    .enumerate()
                    .fold(0, |best, (i, c)| if c.weight > children[best].weight { i } else { best });
                let pick = children.swap_remove(best);
                NodeSolution { node: id, status, ..pick }
            }
            NodeKind::Series => NodeSolution {
                node: id,
                weight: children.iter().map(|c| c.weight).sum(),
                vertices: children.iter().flat_map(|c| c.vertices.iter().copied()).collect(),
                status,
            },
            NodeKind::Prime => {
                let weights: Vec<Weight> = children.iter().map(|c| c.weight).collect();
                let q = quotient(g, tree, id, &weights).expect("prime node has children");
                prime_solves += 1;
                let sol = max_weight_clique(&q.graph, cfg);
                NodeSolution {
                    node: id,
                    weight: sol.weight,
                    vertices: sol.vertices.iter().flat_map(|&i| children[i].vertices.iter().copied()).collect(),
                    status: status.combine(sol.status),
                }
            }
        };
        solved[id] = Some(result);
    }
    (solved[node].take().expect("root folded"), prime_solves)
}

/// Decomposes `g` and folds the whole tree, timing both phases.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> Result<MdSolveReport> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("cannot solve an empty graph".into()));
    }
    let start = Instant::now();
    let tree = decompose(g)?;
    let md = start.elapsed();
    let start = Instant::now();
    let (root, prime_solves) = fold(g, &tree, tree.root(), cfg);
    let solve = start.elapsed();
    Ok(MdSolveReport { solution: root.into(), timings: SolveTimings { md, solve }, prime_solves, tree })
}

/// True iff folding `tree` and the flat solver agree on the optimum weight.
pub fn fold_check(g: &Graph, tree: &MdTree) -> bool {
    let cfg = SolverConfig::default();
    let (folded, _) = fold(g, tree, tree.root(), &cfg);
    folded.weight == max_weight_clique(g, &cfg).weight
}
