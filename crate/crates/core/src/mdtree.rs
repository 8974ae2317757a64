//! Modular decomposition trees.
//!
//! [`decompose`] builds the tree top-down. For a vertex set `S`:
//!
//! * `G[S]` disconnected: a parallel node over the connected components;
//! * complement of `G[S]` disconnected: a series node over the co-components;
//! * otherwise the maximal proper modules of `G[S]` partition `S` and become
//!   the children of a prime node.
//!
//! In the prime case the maximal module `M` containing the smallest vertex `v`
//! is found as `{v}` plus every `w` whose smallest enclosing module with `v` is
//! proper. The remaining vertices are split into modules by partition
//! refinement, which never separates two vertices of a common module.
//!
//! Trees live in an arena ([`MdTree`]) and children are kept sorted by the
//! smallest vertex in their span.

use std::collections::HashSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet, Weight};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

impl NodeKind {
    fn keyword(self) -> &'static str {
        match self {
            NodeKind::Leaf => "Leaf",
            NodeKind::Parallel => "Parallel",
            NodeKind::Series => "Series",
            NodeKind::Prime => "Prime",
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdNode {
    pub kind: NodeKind,
    /// Original vertex, for leaves only.
    pub vertex: Option<usize>,
    pub children: Vec<NodeId>,
    /// All leaf vertices below this node.
    pub span: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdTree {
    nodes: Vec<MdNode>,
    root: NodeId,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KindCounts {
    pub leaf: usize,
    pub parallel: usize,
    pub series: usize,
    pub prime: usize,
}

impl fmt::Display for KindCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "prime: {}, series: {}, parallel: {}, leaf: {}", self.prime, self.series, self.parallel, self.leaf)
    }
}

impl MdTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &MdNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[MdNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes of the subtree at `id`, children before parents.
    pub fn postorder(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![(id, false)];
        while let Some((n, expanded)) = stack.pop() {
            if expanded {
                out.push(n);
            } else {
                stack.push((n, true));
                stack.extend(self.nodes[n].children.iter().rev().map(|&c| (c, false)));
            }
        }
        out
    }

    pub fn kind_counts(&self) -> KindCounts {
        let mut counts = KindCounts::default();
        for id in self.postorder(self.root) {
            match self.nodes[id].kind {
                NodeKind::Leaf => counts.leaf += 1,
                NodeKind::Parallel => counts.parallel += 1,
                NodeKind::Series => counts.series += 1,
                NodeKind::Prime => counts.prime += 1,
            }
        }
        counts
    }

    /// Edges on the longest root-to-leaf path; 0 for a bare leaf.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.nodes.len()];
        for id in self.postorder(self.root) {
            depth[id] = self.nodes[id].children.iter().map(|&c| depth[c] + 1).max().unwrap_or(0);
        }
        depth[self.root]
    }

    /// Every node span, i.e. the strong modules when the tree is the MD tree.
    pub fn spans(&self) -> Vec<VertexSet> {
        self.postorder(self.root).into_iter().map(|id| self.nodes[id].span.clone()).collect()
    }

    /// Sorts every child list by the smallest vertex of the child's span.
    pub fn canonicalize(&mut self) {
        for id in 0..self.nodes.len() {
            let mut children = std::mem::take(&mut self.nodes[id].children);
            children.sort_by_key(|&c| self.nodes[c].span.first().copied());
            self.nodes[id].children = children;
        }
    }

    /// Bracketed form such as `Prime[Series[a,b,c],d,Parallel[e,f],g]`.
    pub fn to_bracket(&self, g: &Graph) -> String {
        let mut out = String::new();
        self.write_bracket(g, self.root, &mut out);
        out
    }

    fn write_bracket(&self, g: &Graph, id: NodeId, out: &mut String) {
        let node = &self.nodes[id];
        match node.vertex {
            Some(v) => out.push_str(&g.label(v)),
            None => {
                out.push_str(node.kind.keyword());
                out.push('[');
                for (i, &c) in node.children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    self.write_bracket(g, c, out);
                }
                out.push(']');
            }
        }
    }

    /// Parses the bracketed form, resolving leaves through the labels of `g`.
    /// The result is not checked against `g`; see [`verify_tree`].
    pub fn parse(g: &Graph, text: &str) -> Result<MdTree> {
        let tokens = tokenize(text);
        let mut parser = TreeParser { g, tokens: &tokens, pos: 0, nodes: Vec::new() };
        let root = parser.node()?;
        if parser.pos != tokens.len() {
            return Err(Error::TreeSyntax(format!("trailing input at token {}", parser.pos)));
        }
        Ok(MdTree { nodes: parser.nodes, root })
    }
}

fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    for ch in text.chars() {
        if matches!(ch, '[' | ']' | ',') || ch.is_whitespace() {
            if !word.is_empty() {
                tokens.push(std::mem::take(&mut word));
            }
            if !ch.is_whitespace() {
                tokens.push(ch.to_string());
            }
        } else {
            word.push(ch);
        }
    }
    if !word.is_empty() {
        tokens.push(word);
    }
    tokens
}

struct TreeParser<'a> {
    g: &'a Graph,
    tokens: &'a [String],
    pos: usize,
    nodes: Vec<MdNode>,
}

impl TreeParser<'_> {
    fn next(&mut self) -> Option<&str> {
        let t = self.tokens.get(self.pos).map(String::as_str);
        self.pos += 1;
        t
    }

    fn node(&mut self) -> Result<NodeId> {
        let word = self.next().ok_or_else(|| Error::TreeSyntax("unexpected end of input".into()))?.to_string();
        let kind = match word.as_str() {
            "Parallel" => Some(NodeKind::Parallel),
            "Series" => Some(NodeKind::Series),
            "Prime" => Some(NodeKind::Prime),
            _ => None,
        };
        let is_internal = kind.is_some() && self.tokens.get(self.pos).map(String::as_str) == Some("[");
        if !is_internal {
            let v = self
                .g
                .vertex_by_label(&word)
                .ok_or_else(|| Error::TreeSyntax(format!("unknown vertex label `{word}`")))?;
            self.nodes.push(MdNode { kind: NodeKind::Leaf, vertex: Some(v), children: vec![], span: VertexSet::singleton(v) });
            return Ok(self.nodes.len() - 1);
        }
        self.pos += 1;
        let mut children = Vec::new();
        loop {
            children.push(self.node()?);
            match self.next() {
                Some(",") => continue,
                Some("]") => break,
                other => return Err(Error::TreeSyntax(format!("expected `,` or `]`, found {other:?}"))),
            }
        }
        let span = children.iter().flat_map(|&c| self.nodes[c].span.iter().copied()).collect();
        self.nodes.push(MdNode { kind: kind.unwrap(), vertex: None, children, span });
        Ok(self.nodes.len() - 1)
    }
}

/// True iff every vertex outside `s` sees all of `s` or none of it.
pub fn is_module(g: &Graph, s: &[usize]) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&vertex) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex, n: g.n() });
    }
    let set = BitSet::from_iter_with_capacity(g.n(), s.iter().copied());
    let size = set.len();
    Ok((0..g.n()).filter(|&x| !set.contains(x)).all(|x| {
        let seen = g.neighbors(x).intersection_len(&set);
        seen == 0 || seen == size
    }))
}

/// Smallest module of `G[within]` containing `seeds` (nonempty, inside `within`).
fn module_closure(g: &Graph, within: &BitSet, seeds: &[usize]) -> BitSet {
    let anchor = seeds[0];
    let target = within.len();
    let mut closure = BitSet::new(g.n());
    closure.insert(anchor);
    let mut size = 1;
    let mut queue: Vec<usize> = Vec::new();
    for &s in &seeds[1..] {
        if !closure.contains(s) {
            closure.insert(s);
            size += 1;
            queue.push(s);
        }
    }
    // An outside vertex splits the set iff it tells some member apart from the anchor.
    while let Some(y) = queue.pop() {
        if size == target {
            break;
        }
        let mut splitters = g.neighbors(y).symmetric_difference_within(g.neighbors(anchor), within);
        splitters.difference_with(&closure);
        for z in splitters.iter() {
            closure.insert(z);
            size += 1;
            queue.push(z);
        }
    }
    closure
}

/// Coarsest refinement of `part` whose blocks are modules of `G[within]`.
fn refine_into_modules(g: &Graph, within: &BitSet, part: BitSet) -> Vec<BitSet> {
    let mut done = Vec::new();
    let mut work = vec![part];
    while let Some(block) = work.pop() {
        let first = block.first().expect("blocks are nonempty");
        let outside = within.difference(&block);
        let splitter = block
            .iter()
            .skip(1)
            .find_map(|y| g.neighbors(y).symmetric_difference_within(g.neighbors(first), &outside).first());
        match splitter {
            None => done.push(block),
            Some(z) => {
                let inside = block.intersection(g.neighbors(z));
                let rest = block.difference(g.neighbors(z));
                work.push(inside);
                work.push(rest);
            }
        }
    }
    done
}

/// Connected components of `G[within]`, or of its complement.
fn components(g: &Graph, within: &BitSet, complement: bool) -> Vec<BitSet> {
    let mut remaining = within.clone();
    let mut out = Vec::new();
    while let Some(start) = remaining.first() {
        let mut comp = BitSet::new(g.n());
        remaining.remove(start);
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let next = if complement {
                remaining.difference(g.neighbors(u))
            } else {
                remaining.intersection(g.neighbors(u))
            };
            for x in next.iter() {
                remaining.remove(x);
                comp.insert(x);
                stack.push(x);
            }
        }
        out.push(comp);
    }
    out
}

/// Maximal proper modules of `G[within]` when it and its complement are connected.
fn maximal_modules(g: &Graph, within: &BitSet) -> Vec<BitSet> {
    let v = within.first().expect("nonempty");
    let mut with_v = BitSet::new(g.n());
    with_v.insert(v);
    let mut excluded = BitSet::new(g.n());
    for w in within.iter().filter(|&w| w != v) {
        if with_v.contains(w) || excluded.contains(w) {
            continue;
        }
        let closure = module_closure(g, within, &[v, w]);
        if closure == *within {
            excluded.insert(w);
        } else {
            with_v.union_with(&closure);
        }
    }
    let mut parts = vec![with_v.clone()];
    let rest = within.difference(&with_v);
    if !rest.is_empty() {
        parts.extend(refine_into_modules(g, within, rest));
    }
    parts
}

/// Modular decomposition tree of `g`, children in canonical order.
pub fn decompose(g: &Graph) -> Result<MdTree> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("cannot decompose an empty graph".into()));
    }
    let mut nodes: Vec<MdNode> = Vec::new();
    let mut stack: Vec<(BitSet, Option<NodeId>)> = vec![(g.all_vertices(), None)];
    while let Some((set, parent)) = stack.pop() {
        let id = nodes.len();
        let span = VertexSet::from(&set);
        if span.len() == 1 {
            nodes.push(MdNode { kind: NodeKind::Leaf, vertex: Some(span[0]), children: vec![], span });
        } else {
            let (kind, mut parts) = {
                let comps = components(g, &set, false);
                if comps.len() > 1 {
                    (NodeKind::Parallel, comps)
                } else {
                    let co = components(g, &set, true);
                    if co.len() > 1 {
                        (NodeKind::Series, co)
                    } else {
                        (NodeKind::Prime, maximal_modules(g, &set))
                    }
                }
            };
            parts.sort_by_key(|p| p.first());
            nodes.push(MdNode { kind, vertex: None, children: Vec::with_capacity(parts.len()), span });
            stack.extend(parts.into_iter().rev().map(|p| (p, Some(id))));
        }
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
    }
    Ok(MdTree { nodes, root: 0 })
}

/// Weighted graph on the children of an internal node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub graph: Graph,
    /// `children[i]` is the tree node represented by quotient vertex `i`.
    pub children: Vec<NodeId>,
}

/// Quotient of `node` with one vertex per child. Adjacency is decided by the
/// smallest vertex of each child span, which is exact when children are modules.
pub fn quotient(g: &Graph, tree: &MdTree, node: NodeId, child_weights: &[Weight]) -> Result<QuotientGraph> {
    let n = tree.node(node);
    if n.children.is_empty() {
        return Err(Error::LeafQuotient);
    }
    if child_weights.len() != n.children.len() {
        return Err(Error::WeightCountMismatch { expected: n.children.len(), got: child_weights.len() });
    }
    let reps: Vec<usize> = n.children.iter().map(|&c| tree.node(c).span[0]).collect();
    let mut b = GraphBuilder::new(reps.len());
    for (i, &u) in reps.iter().enumerate() {
        b.set_weight(i, child_weights[i])?;
        for (j, &v) in reps.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(QuotientGraph { graph: b.build(), children: n.children.clone() })
}

/// A broken tree invariant, located by the child-index path from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: Vec<usize>,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.path {
            write!(f, "/{i}")?;
        }
        write!(f, ": {}", self.rule)
    }
}

fn is_prime_graph(g: &Graph) -> bool {
    let all = g.all_vertices();
    // No nontrivial module contains vertex 0 ...
    if (1..g.n()).any(|w| module_closure(g, &all, &[0, w]) != all) {
        return false;
    }
    // ... and none avoids it.
    let mut rest = all.clone();
    rest.remove(0);
    refine_into_modules(g, &all, rest).iter().all(|b| b.len() == 1)
}

/// Checks every structural invariant of `tree` against `g`. An empty result
/// means the tree is the modular decomposition tree of `g`.
pub fn verify_tree(g: &Graph, tree: &MdTree) -> Vec<Violation> {
    let mut report = Vec::new();
    let n = g.n();
    let mut leaf_seen = vec![0usize; n];
    let mut stack: Vec<(NodeId, Vec<usize>)> = vec![(tree.root(), vec![])];
    let mut visited = 0usize;
    while let Some((id, path)) = stack.pop() {
        visited += 1;
        if visited > tree.len() {
            report.push(Violation { path, rule: "tree has a cycle or shared node".into() });
            break;
        }
        let node = tree.node(id);
        let mut fail = |rule: String| report.push(Violation { path: path.clone(), rule });
        if let Some(&v) = node.span.iter().find(|&&v| v >= n) {
            fail(format!("span contains vertex {v} outside the graph"));
            continue;
        }
        if node.kind == NodeKind::Leaf {
            match node.vertex {
                Some(v) if v < n => {
                    leaf_seen[v] += 1;
                    if *node.span != [v] {
                        fail("leaf span is not its own vertex".into());
                    }
                }
                _ => fail("leaf without a valid vertex".into()),
            }
            if !node.children.is_empty() {
                fail("leaf has children".into());
            }
            continue;
        }
        if node.vertex.is_some() {
            fail("internal node carries a vertex".into());
        }
        if node.children.len() < 2 {
            fail(format!("internal node has {} children", node.children.len()));
        }
        let child_spans: Vec<BitSet> = node.children.iter().map(|&c| tree.node(c).span.to_bitset(n)).collect();
        let span = node.span.to_bitset(n);
        let mut union = BitSet::new(n);
        let mut disjoint = true;
        for cs in &child_spans {
            disjoint &= union.is_disjoint(cs);
            union.union_with(cs);
        }
        if !disjoint || union != span {
            fail("child spans do not partition the span".into());
        }
        if !node.span.is_empty() && !is_module(g, &node.span).unwrap_or(false) {
            fail("span is not a module".into());
        }
        for (i, &c) in node.children.iter().enumerate() {
            let ck = tree.node(c).kind;
            if ck == node.kind && matches!(ck, NodeKind::Parallel | NodeKind::Series) {
                fail(format!("child {i} repeats the {ck} kind of its parent"));
            }
        }
        let cross = |i: usize, x: usize| -> usize { g.neighbors(x).intersection_len(&span.difference(&child_spans[i])) };
        match node.kind {
            NodeKind::Parallel => {
                if (0..child_spans.len()).any(|i| child_spans[i].iter().any(|x| cross(i, x) > 0)) {
                    fail("parallel node has an edge between children".into());
                }
            }
            NodeKind::Series => {
                let missing = (0..child_spans.len()).any(|i| {
                    let others = span.difference(&child_spans[i]).len();
                    child_spans[i].iter().any(|x| cross(i, x) != others)
                });
                if missing {
                    fail("series node misses an edge between children".into());
                }
            }
            NodeKind::Prime => {
                if node.children.len() < 4 {
                    fail("prime node has fewer than 4 children".into());
                } else if child_spans.iter().all(|s| !s.is_empty()) {
                    let q = quotient(g, tree, id, &vec![1; node.children.len()]).expect("internal node").graph;
                    let k = q.n();
                    if q.m() == 0 || q.m() == k * (k - 1) / 2 {
                        fail("prime quotient is edgeless or complete".into());
                    } else if !is_prime_graph(&q) {
                        fail("prime quotient has a nontrivial module".into());
                    }
                }
            }
            NodeKind::Leaf => unreachable!(),
        }
        for (i, &c) in node.children.iter().enumerate().rev() {
            let mut child_path = path.clone();
            child_path.push(i);
            stack.push((c, child_path));
        }
    }
    for (v, &count) in leaf_seen.iter().enumerate() {
        if count != 1 {
            report.push(Violation { path: vec![], rule: format!("vertex {v} appears as a leaf {count} times") });
        }
    }
    if *tree.node(tree.root()).span != (0..n).collect::<Vec<_>>()[..] {
        report.push(Violation { path: vec![], rule: "root span is not the vertex set".into() });
    }
    report
}

pub const DEFAULT_BRUTE_FORCE_MODULE_LIMIT: usize = 15;

pub fn enumerate_modules_bruteforce(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_modules_bruteforce_with_limit(g, DEFAULT_BRUTE_FORCE_MODULE_LIMIT)
}

/// Every nonempty module of `g`, ordered by size and then lexicographically.
pub fn enumerate_modules_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::LimitExceeded { n, limit: limit.min(30) });
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u)).collect();
    let mut modules: Vec<VertexSet> = (1u32..1 << n)
        .filter(|&mask| {
            (0..n).filter(|&x| mask >> x & 1 == 0).all(|x| {
                let seen = nbr[x] & mask;
                seen == 0 || seen == mask
            })
        })
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    modules.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(modules)
}

/// Members of `modules` that overlap no other member.
pub fn strong_modules(modules: &[VertexSet]) -> Vec<VertexSet> {
    let sets: Vec<HashSet<usize>> = modules.iter().map(|m| m.iter().copied().collect()).collect();
    let overlaps = |a: &HashSet<usize>, b: &HashSet<usize>| !a.is_disjoint(b) && !a.is_subset(b) && !b.is_subset(a);
    modules
        .iter()
        .zip(&sets)
        .filter(|(_, a)| !sets.iter().any(|b| overlaps(a, b)))
        .map(|(m, _)| m.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::figure1;

    fn set(g: &Graph, labels: &str) -> Vec<usize> {
        labels.chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn figure1_modules() {
        let g = figure1();
        assert!(is_module(&g, &set(&g, "abc")).unwrap());
        assert!(is_module(&g, &set(&g, "ef")).unwrap());
        assert!(!is_module(&g, &set(&g, "ad")).unwrap());
        assert_eq!(is_module(&g, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn figure1_tree() {
        let g = figure1();
        let t = decompose(&g).unwrap();
        assert_eq!(t.to_bracket(&g), "Prime[Series[a,b,c],d,Parallel[e,f],g]");
        assert!(verify_tree(&g, &t).is_empty());
        assert_eq!(t.kind_counts(), KindCounts { leaf: 7, parallel: 1, series: 1, prime: 1 });
        assert_eq!(t.depth(), 2);
    }

    #[test]
    fn single_vertex_is_a_leaf() {
        let g = Graph::edgeless(1);
        let t = decompose(&g).unwrap();
        assert_eq!(t.node(t.root()).kind, NodeKind::Leaf);
        assert_eq!(t.to_bracket(&g), "1");
        assert!(verify_tree(&g, &t).is_empty());
        assert!(decompose(&Graph::edgeless(0)).is_err());
    }

    #[test]
    fn complete_and_edgeless() {
        let k5 = Graph::complete(5);
        assert_eq!(decompose(&k5).unwrap().to_bracket(&k5), "Series[1,2,3,4,5]");
        let e4 = Graph::edgeless(4);
        assert_eq!(decompose(&e4).unwrap().to_bracket(&e4), "Parallel[1,2,3,4]");
    }

    #[test]
    fn verify_rejects_wrong_trees() {
        let g = figure1();
        let bad = MdTree::parse(&g, "Series[a,b,c,d,e,f,g]").unwrap();
        assert!(!verify_tree(&g, &bad).is_empty());
        let nested = MdTree::parse(&g, "Prime[Series[a,Series[b,c]],d,Parallel[e,f],g]").unwrap();
        let report = verify_tree(&g, &nested);
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].path, vec![0]);
        let missing = MdTree::parse(&g, "Prime[Series[a,b,c],d,Parallel[e,f]]").unwrap();
        assert!(verify_tree(&g, &missing).iter().any(|v| v.rule.contains("vertex 6")));
        let e3 = Graph::edgeless(3);
        assert!(verify_tree(&e3, &MdTree::parse(&e3, "Parallel[1,2,3]").unwrap()).is_empty());
    }

    #[test]
    fn parse_round_trips_and_rejects_garbage() {
        let g = figure1();
        let text = "Prime[Series[a,b,c],d,Parallel[e,f],g]";
        assert_eq!(MdTree::parse(&g, text).unwrap().to_bracket(&g), text);
        assert!(MdTree::parse(&g, "Prime[a,b").is_err());
        assert!(MdTree::parse(&g, "Series[a,z]").is_err());
        assert!(MdTree::parse(&g, "a b").is_err());
    }

    #[test]
    fn quotients() {
        let g = figure1();
        let t = decompose(&g).unwrap();
        let q = quotient(&g, &t, t.root(), &[3, 1, 1, 1]).unwrap();
        assert_eq!(q.graph.weights(), &[3, 1, 1, 1]);
        assert_eq!(q.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let series = t.node(t.root()).children[0];
        assert_eq!(quotient(&g, &t, series, &[1, 1, 1]).unwrap().graph, Graph::complete(3));
        let parallel = t.node(t.root()).children[2];
        assert_eq!(quotient(&g, &t, parallel, &[1, 1]).unwrap().graph.m(), 0);
        assert_eq!(
            quotient(&g, &t, t.root(), &[1, 1]).unwrap_err(),
            Error::WeightCountMismatch { expected: 4, got: 2 }
        );
        let leaf = t.node(series).children[0];
        assert_eq!(quotient(&g, &t, leaf, &[]).unwrap_err(), Error::LeafQuotient);
    }

    #[test]
    fn brute_force_modules() {
        let tri = Graph::complete(3);
        assert_eq!(enumerate_modules_bruteforce(&tri).unwrap().len(), 7);

        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let expected: Vec<VertexSet> =
            vec![[0].into(), [1].into(), [2].into(), [0, 2].into(), [0, 1, 2].into()];
        assert_eq!(enumerate_modules_bruteforce(&path).unwrap(), expected);

        let g = figure1();
        let mods = enumerate_modules_bruteforce(&g).unwrap();
        for m in [set(&g, "abc"), set(&g, "ef"), (0..7).collect()] {
            assert!(mods.contains(&VertexSet::from(m)));
        }
        // Every module of figure1: 7 singletons, ab, ac, bc, ef, abc, and V.
        assert_eq!(mods.len(), 13);
        assert!(enumerate_modules_bruteforce(&Graph::edgeless(16)).is_err());
    }

    #[test]
    fn strong_module_filter() {
        let g = figure1();
        let strong = strong_modules(&enumerate_modules_bruteforce(&g).unwrap());
        let mut spans = decompose(&g).unwrap().spans();
        spans.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(strong, spans);
    }
}
