//! Exact maximum-weight clique search.
//!
//! Vertices are put in a fixed order `v_0 .. v_{n-1}` and the suffixes
//! `S_i = {v_i, .., v_{n-1}}` are solved from the shortest one up. `bounds[i]`
//! records the best clique weight inside `S_i`; a branch whose candidates all
//! lie in `S_j` cannot gain more than `bounds[j]`, which together with the
//! plain candidate-weight sum drives the pruning. Solving `S_i` stops early
//! once a clique of weight `bounds[i + 1] + w(v_i)` is found, since nothing
//! heavier exists.

use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Solution, Status, VertexSet, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrdering {
    /// Greedy colour classes, each grown from the highest remaining degree;
    /// the first class is searched first.
    #[default]
    GreedyColoring,
    /// Descending degree, ties by id.
    DegreeDesc,
    /// Descending weight, ties by id.
    WeightDesc,
    Natural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolverConfig {
    /// `None` means unlimited.
    pub time_limit: Option<Duration>,
    pub ordering: VertexOrdering,
}

impl SolverConfig {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = if limit.is_zero() { None } else { Some(limit) };
        self
    }

    pub fn with_ordering(mut self, ordering: VertexOrdering) -> Self {
        self.ordering = ordering;
        self
    }
}

pub fn order_vertices(g: &Graph, strategy: VertexOrdering) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    match strategy {
        VertexOrdering::DegreeDesc => {
            let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
            order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        }
        VertexOrdering::WeightDesc => order.sort_by(|&a, &b| g.weight(b).cmp(&g.weight(a)).then(a.cmp(&b))),
        VertexOrdering::GreedyColoring => order = greedy_coloring_order(g),
        VertexOrdering::Natural => {}
    }
    order
}

/// Builds independent sets one at a time, each time taking the uncoloured
/// vertex of largest residual degree (last id on ties) that has no neighbour in
/// the current class. Residual degrees only count uncoloured neighbours. The
/// result lists the classes back to front, so the first class ends up at the
/// tail of the order and is solved first.
fn greedy_coloring_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<Option<usize>> = (0..n).map(|v| Some(g.degree(v))).collect();
    let mut picked = Vec::with_capacity(n);
    while picked.len() < n {
        let mut blocked = BitSet::new(n);
        loop {
            let next = (0..n)
                .filter(|&v| !blocked.contains(v))
                .filter_map(|v| degree[v].map(|d| (d, v)))
                .max();
            let Some((_, v)) = next else { break };
            picked.push(v);
            degree[v] = None;
            blocked.insert(v);
            for u in g.neighbors(v).iter() {
                blocked.insert(u);
                if let Some(d) = degree[u].as_mut() {
                    *d -= 1;
                }
            }
        }
    }
    picked.reverse();
    picked
}

/// Full outcome of a branch-and-bound run.
#[derive(Debug, Clone)]
pub struct CliqueSearch {
    pub solution: Solution,
    /// Processing order, `order[i]` is the vertex at position `i`.
    pub order: Vec<usize>,
    /// `bounds[i]`: best clique weight within the suffix starting at position `i`.
    /// Entries not reached before a timeout stay 0.
    pub bounds: Vec<Weight>,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

pub fn max_weight_clique(g: &Graph, cfg: &SolverConfig) -> Solution {
    search(g, cfg).solution
}

pub fn search(g: &Graph, cfg: &SolverConfig) -> CliqueSearch {
    let started = Instant::now();
    let order = order_vertices(g, cfg.ordering);
    let n = g.n();
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_iter_with_capacity(n, g.neighbors(v).iter().map(|u| position[u])))
        .collect();
    let weights: Vec<Weight> = order.iter().map(|&v| g.weight(v)).collect();

    let mut state = SearchState {
        unit: weights.iter().all(|&w| w == 1),
        adj,
        weights,
        bounds: vec![0; n],
        best_weight: 0,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        deadline: cfg.time_limit.map(|d| started + d),
        timed_out: false,
        target: 0,
    };

    let mut suffix = BitSet::new(n);
    for i in (0..n).rev() {
        let candidates = state.adj[i].intersection(&suffix);
        let candidate_weight = state.weight_of(&candidates);
        state.target = state.weights[i] + if i + 1 < n { state.bounds[i + 1] } else { 0 };
        state.current.push(i);
        state.expand(candidates, candidate_weight, state.weights[i]);
        state.current.pop();
        if state.timed_out {
            break;
        }
        state.bounds[i] = state.best_weight;
        suffix.insert(i);
    }

    let vertices: VertexSet = state.best.iter().map(|&p| order[p]).collect();
    let status = if state.timed_out { Status::TimedOut } else { Status::Optimal };
    CliqueSearch {
        solution: Solution { vertices, weight: state.best_weight, status },
        order,
        bounds: state.bounds,
        nodes: state.nodes,
    }
}

const DEADLINE_CHECK_MASK: u64 = (1 << 12) - 1;

struct SearchState {
    unit: bool,
    adj: Vec<BitSet>,
    weights: Vec<Weight>,
    bounds: Vec<Weight>,
    best_weight: Weight,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
    /// Largest weight attainable in the suffix being solved.
    target: Weight,
}

impl SearchState {
    fn weight_of(&self, set: &BitSet) -> Weight {
        if self.unit {
            set.len() as Weight
        } else {
            set.iter().map(|p| self.weights[p]).sum()
        }
    }

    /// Returns true when the current suffix is finished (target reached or timeout).
    fn expand(&mut self, mut candidates: BitSet, mut candidate_weight: Weight, weight: Weight) -> bool {
        self.nodes += 1;
        if self.nodes & DEADLINE_CHECK_MASK == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        if weight > self.best_weight {
            self.best_weight = weight;
            self.best.clone_from(&self.current);
            if weight >= self.target {
                return true;
            }
        }
        if self.timed_out {
            return true;
        }
        while let Some(j) = candidates.first() {
            if weight + candidate_weight <= self.best_weight || weight + self.bounds[j] <= self.best_weight {
                return false;
            }
            candidates.remove(j);
            candidate_weight -= self.weights[j];
            let next = candidates.intersection(&self.adj[j]);
            let next_weight = self.weight_of(&next);
            self.current.push(j);
            let stop = self.expand(next, next_weight, weight + self.weights[j]);
            self.current.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

pub const DEFAULT_BRUTE_FORCE_CLIQUE_LIMIT: usize = 22;

pub fn brute_force_clique(g: &Graph) -> Result<Solution> {
    brute_force_clique_with_limit(g, DEFAULT_BRUTE_FORCE_CLIQUE_LIMIT)
}

/// Enumerates every clique. Among the heaviest, the lexicographically
/// smallest sorted vertex list wins.
pub fn brute_force_clique_with_limit(g: &Graph, limit: usize) -> Result<Solution> {
    if g.n() > limit {
        return Err(Error::LimitExceeded { n: g.n(), limit });
    }
    fn extend(g: &Graph, current: &mut Vec<usize>, weight: Weight, best: &mut (Weight, Vec<usize>)) {
        if weight > best.0 || (weight == best.0 && *current < best.1) {
            *best = (weight, current.clone());
        }
        let start = current.last().map_or(0, |&v| v + 1);
        for v in start..g.n() {
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                extend(g, current, weight + g.weight(v), best);
                current.pop();
            }
        }
    }
    let mut best = (0, Vec::new());
    extend(g, &mut Vec::new(), 0, &mut best);
    Ok(Solution { vertices: best.1.into(), weight: best.0, status: Status::Optimal })
}
