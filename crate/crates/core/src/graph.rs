//! Simple undirected vertex-weighted graphs and elementary clique predicates.
//!
//! A [`Graph`] is immutable once built; all construction goes through
//! [`GraphBuilder`] (or the DIMACS parser, which uses it). Adjacency rows are
//! stored as [`BitSet`]s so pairwise tests and neighborhood intersections run
//! a machine word at a time.

use std::fmt;
use std::ops::Deref;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub type Weight = u64;

#[derive(Clone)]
pub struct Graph {
    adj: Vec<BitSet>,
    weights: Vec<Weight>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges, unit weights.
    pub fn edgeless(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("in range");
            }
        }
        b.build()
    }

    /// Unit-weight graph from an edge list over `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn weight(&self, v: usize) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn total_weight(&self) -> Weight {
        self.weights.iter().sum()
    }

    /// Display label of `v`; the 1-based DIMACS id when no labels were set.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse::<usize>().ok().filter(|&i| i >= 1 && i <= self.n()).map(|i| i - 1),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn all_vertices(&self) -> BitSet {
        BitSet::full(self.n())
    }

    /// Copy of this graph with different vertex weights.
    pub fn with_weights(&self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.n() {
            return Err(Error::WeightCountMismatch { expected: self.n(), got: weights.len() });
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight { vertex: v });
        }
        Ok(Graph { weights, ..self.clone() })
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        Ok(Graph { labels: Some(labels), ..self.clone() })
    }

    fn check_range(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v >= self.n()) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    /// True iff every distinct pair in `s` is adjacent.
    pub fn is_clique(&self, s: &[usize]) -> Result<bool> {
        self.check_range(s)?;
        Ok(s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| u == v || self.has_edge(u, v))))
    }

    pub fn set_weight(&self, s: &[usize]) -> Result<Weight> {
        self.check_range(s)?;
        Ok(s.iter().map(|&v| self.weights[v]).sum())
    }

    /// Subgraph induced by `s`, plus `old_ids[new] = old`. New ids follow the
    /// ascending order of `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.check_range(s)?;
        let mut old_ids = s.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut b = GraphBuilder::new(old_ids.len());
        for (i, &u) in old_ids.iter().enumerate() {
            b.set_weight(i, self.weights[u])?;
            for (j, &v) in old_ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        if let Some(labels) = &self.labels {
            b.set_labels(old_ids.iter().map(|&v| labels[v].clone()).collect())?;
        }
        Ok((b.build(), old_ids))
    }
}

// Labels compare by their displayed value, so explicit "1".."n" labels equal
// the unlabelled default.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
            && self.weights == other.weights
            && (self.labels == other.labels || (0..self.n()).all(|v| self.label(v) == other.label(v)))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("weights", &self.weights)
            .finish()
    }
}

/// Mutable staging area for a [`Graph`]. Duplicate edges are ignored.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<BitSet>,
    weights: Vec<Weight>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![BitSet::new(n); n], weights: vec![1; n], labels: None }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.n();
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(self)
    }

    pub fn set_weight(&mut self, v: usize, w: Weight) -> Result<&mut Self> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        if w == 0 {
            return Err(Error::NonPositiveWeight { vertex: v });
        }
        self.weights[v] = w;
        Ok(self)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<&mut Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn set_label(&mut self, v: usize, label: String) -> Result<&mut Self> {
        let n = self.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let labels = self.labels.get_or_insert_with(|| (1..=n).map(|i| i.to_string()).collect());
        labels[v] = label;
        Ok(self)
    }

    pub fn build(self) -> Graph {
        let edge_count = self.adj.iter().map(BitSet::len).sum::<usize>() / 2;
        Graph { adj: self.adj, weights: self.weights, labels: self.labels, edge_count }
    }
}

/// Sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).copied().collect()
    }

    pub fn to_bitset(&self, capacity: usize) -> BitSet {
        BitSet::from_iter_with_capacity(capacity, self.iter().copied())
    }
}

impl Deref for VertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl From<&BitSet> for VertexSet {
    fn from(s: &BitSet) -> Self {
        VertexSet(s.iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Optimal,
    TimedOut,
}

impl Status {
    pub fn combine(self, other: Status) -> Status {
        if self == Status::TimedOut || other == Status::TimedOut {
            Status::TimedOut
        } else {
            Status::Optimal
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Optimal => "Optimal",
            Status::TimedOut => "TimedOut",
        })
    }
}

/// A clique with its weight. `Optimal` means the weight is the maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub vertices: VertexSet,
    pub weight: Weight,
    pub status: Status,
}

impl Solution {
    pub fn empty() -> Self {
        Solution { vertices: VertexSet::new(), weight: 0, status: Status::Optimal }
    }

    /// Re-checks that the witness is a clique of `g` with the reported weight.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        Ok(g.is_clique(&self.vertices)? && g.set_weight(&self.vertices)? == self.weight)
    }
}

/// The seven-vertex example graph on `a..g`: `{a,b,c}` is a clique joined to
/// `d`, `{e,f}` an independent pair adjacent to both `d` and `g`.
pub fn figure1() -> Graph {
    const EDGES: [(usize, usize); 10] =
        [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)];
    let mut b = GraphBuilder::new(7);
    for (u, v) in EDGES {
        b.add_edge(u, v).expect("static edge list");
    }
    b.set_labels(["a", "b", "c", "d", "e", "f", "g"].map(String::from).to_vec()).expect("seven labels");
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(g: &Graph, labels: &str) -> Vec<usize> {
        labels.chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn figure1_cliques() {
        let g = figure1();
        assert_eq!(g.m(), 10);
        assert!(g.is_clique(&ids(&g, "abcd")).unwrap());
        assert!(!g.is_clique(&ids(&g, "ef")).unwrap());
        assert!(g.is_clique(&[]).unwrap());
        assert!(g.is_clique(&[4]).unwrap());
    }

    #[test]
    fn set_weights() {
        let g = figure1();
        assert_eq!(g.set_weight(&ids(&g, "abcd")).unwrap(), 4);
        assert_eq!(g.set_weight(&[]).unwrap(), 0);
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap().with_weights(vec![3, 1, 1, 1]).unwrap();
        assert_eq!(path.set_weight(&[0, 1]).unwrap(), 4);
    }

    #[test]
    fn out_of_range_is_rejected() {
        let g = figure1();
        assert_eq!(g.is_clique(&[0, 7]), Err(Error::VertexOutOfRange { vertex: 7, n: 7 }));
        assert!(g.set_weight(&[9]).is_err());
        assert!(g.induced_subgraph(&[1, 10]).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let g = figure1();
        let (abc, map) = g.induced_subgraph(&ids(&g, "abc")).unwrap();
        assert_eq!(abc, Graph::complete(3).with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap());
        assert_eq!(map, vec![0, 1, 2]);
        let (ef, map) = g.induced_subgraph(&ids(&g, "fe")).unwrap();
        assert_eq!(ef.m(), 0);
        assert_eq!(ef.n(), 2);
        assert_eq!(map, vec![4, 5]);
        let (whole, _) = g.induced_subgraph(&(0..7).collect::<Vec<_>>()).unwrap();
        assert_eq!(whole, g);
    }

    #[test]
    fn builder_rejects_bad_input() {
        let mut b = GraphBuilder::new(3);
        assert_eq!(b.add_edge(1, 1).unwrap_err(), Error::SelfLoop { vertex: 1 });
        assert!(b.add_edge(0, 3).is_err());
        assert_eq!(b.set_weight(2, 0).unwrap_err(), Error::NonPositiveWeight { vertex: 2 });
        b.add_edge(0, 1).unwrap().add_edge(1, 0).unwrap();
        assert_eq!(b.build().m(), 1);
    }

    #[test]
    fn vertex_set_is_sorted_and_deduplicated() {
        let s = VertexSet::from(vec![3, 1, 3, 0]);
        assert_eq!(&*s, &[0, 1, 3]);
        assert_eq!(&*s.union(&VertexSet::from([2, 3])), &[0, 1, 2, 3]);
    }
}
