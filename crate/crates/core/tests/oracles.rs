//! Cross-checks against exhaustive oracles.

use mdclique::generators::{coprime_graph, gnp, random_cograph, with_random_weights};
use mdclique::mdtree::{enumerate_modules_bruteforce, is_module, strong_modules};
use mdclique::md_solver::fold;
use mdclique::wclique::{search, VertexOrdering};
use mdclique::*;

fn sorted_spans(t: &MdTree) -> Vec<VertexSet> {
    let mut spans = t.spans();
    spans.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    spans
}

fn random_instances(count: u64, max_n: usize) -> impl Iterator<Item = (u64, Graph)> {
    (0..count).map(move |i| {
        let n = 1 + (i as usize * 7) % max_n;
        let p = 0.1 * (1 + i % 9) as f64;
        let g = gnp(n, p, 1000 + i).unwrap();
        let g = if i % 2 == 0 { g } else { with_random_weights(&g, 10, 5000 + i).unwrap() };
        (i, g)
    })
}

#[test]
fn branch_and_bound_matches_brute_force_on_g16() {
    for seed in 0..50 {
        let g = with_random_weights(&gnp(16, 0.5, seed).unwrap(), 10, seed + 99).unwrap();
        let oracle = brute_force_clique(&g).unwrap();
        for ordering in [VertexOrdering::GreedyColoring, VertexOrdering::DegreeDesc, VertexOrdering::Natural] {
            let s = max_weight_clique(&g, &SolverConfig::default().with_ordering(ordering));
            assert_eq!(s.weight, oracle.weight, "seed {seed} {ordering:?}");
            assert!(s.verify(&g).unwrap());
            assert_eq!(s.status, Status::Optimal);
        }
    }
}

#[test]
fn suffix_bounds_are_monotone_and_exact() {
    for (i, g) in random_instances(40, 14) {
        let run = search(&g, &SolverConfig::default());
        assert!(run.bounds.windows(2).all(|w| w[0] >= w[1]), "instance {i}");
        if g.n() == 0 {
            continue;
        }
        assert_eq!(run.bounds[0], run.solution.weight);
        assert_eq!(*run.bounds.last().unwrap(), g.weight(*run.order.last().unwrap()));
        // Each bound is the optimum of its suffix.
        for k in [0, g.n() / 2, g.n() - 1] {
            let (sub, _) = g.induced_subgraph(&run.order[k..]).unwrap();
            assert_eq!(run.bounds[k], brute_force_clique(&sub).unwrap().weight, "instance {i} suffix {k}");
        }
    }
}

#[test]
fn solver_is_deterministic_and_counts_cardinality_on_unit_weights() {
    for (_, g) in random_instances(30, 18) {
        let a = max_weight_clique(&g, &SolverConfig::default());
        let b = max_weight_clique(&g, &SolverConfig::default());
        assert_eq!(a, b);
        if g.weights().iter().all(|&w| w == 1) {
            assert_eq!(a.weight as usize, a.vertices.len());
        }
    }
}

#[test]
fn tree_spans_are_the_strong_modules() {
    for seed in 0..150u64 {
        let n = 1 + seed as usize % 10;
        let g = gnp(n, 0.15 + 0.1 * (seed % 8) as f64, seed).unwrap();
        let t = decompose(&g).unwrap();
        assert!(verify_tree(&g, &t).is_empty(), "seed {seed}");
        let strong = strong_modules(&enumerate_modules_bruteforce(&g).unwrap());
        assert_eq!(sorted_spans(&t), strong, "seed {seed}: {}", t.to_bracket(&g));
    }
}

#[test]
fn prime_quotients_have_only_trivial_modules() {
    let mut primes_seen = 0;
    for seed in 0..120u64 {
        let g = gnp(4 + seed as usize % 12, 0.5, seed).unwrap();
        let t = decompose(&g).unwrap();
        for id in t.postorder(t.root()) {
            let node = t.node(id);
            if node.children.is_empty() {
                continue;
            }
            let q = quotient(&g, &t, id, &vec![1; node.children.len()]).unwrap().graph;
            let k = q.n();
            match node.kind {
                NodeKind::Parallel => assert_eq!(q.m(), 0),
                NodeKind::Series => assert_eq!(q.m(), k * (k - 1) / 2),
                NodeKind::Prime => {
                    primes_seen += 1;
                    let mods = enumerate_modules_bruteforce(&q).unwrap();
                    assert!(mods.iter().all(|m| m.len() == 1 || m.len() == k));
                }
                NodeKind::Leaf => unreachable!(),
            }
            assert!(is_module(&g, &node.span).unwrap());
        }
    }
    assert!(primes_seen > 20);
}

#[test]
fn complete_and_edgeless_shapes() {
    for n in 2..12 {
        let k = Graph::complete(n);
        let t = decompose(&k).unwrap();
        assert_eq!(t.node(t.root()).kind, NodeKind::Series);
        assert_eq!(t.node(t.root()).children.len(), n);
        let e = Graph::edgeless(n);
        let t = decompose(&e).unwrap();
        assert_eq!(t.node(t.root()).kind, NodeKind::Parallel);
        assert_eq!(t.node(t.root()).children.len(), n);
    }
}

#[test]
fn decomposition_commutes_with_relabelling() {
    use rand::seq::SliceRandom;
    let mut rng = mdclique::generators::rng_from_seed(17);
    for seed in 0..40u64 {
        let g = gnp(6 + seed as usize % 20, 0.3 + 0.01 * seed as f64, seed).unwrap();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(g.n(), &edges).unwrap();
        let tg = decompose(&g).unwrap();
        let th = decompose(&h).unwrap();
        let mut mapped: Vec<(NodeKind, VertexSet)> = tg
            .nodes()
            .iter()
            .map(|node| (node.kind, node.span.iter().map(|&v| perm[v]).collect()))
            .collect();
        let mut direct: Vec<(NodeKind, VertexSet)> = th.nodes().iter().map(|node| (node.kind, node.span.clone())).collect();
        mapped.sort_by(|a, b| a.1.cmp(&b.1));
        direct.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(mapped, direct, "seed {seed}");
    }
}

#[test]
fn every_node_solution_is_optimal_for_its_span() {
    for (i, g) in random_instances(80, 18) {
        if g.n() == 0 {
            continue;
        }
        let t = decompose(&g).unwrap();
        let cfg = SolverConfig::default();
        for id in t.postorder(t.root()) {
            let node = t.node(id);
            let (sol, _) = fold(&g, &t, id, &cfg);
            let (sub, _) = g.induced_subgraph(&node.span).unwrap();
            assert_eq!(sol.weight, brute_force_clique(&sub).unwrap().weight, "instance {i} node {id}");
            assert!(sol.vertices.iter().all(|v| node.span.contains(v)));
            assert!(g.is_clique(&sol.vertices).unwrap());
            assert_eq!(g.set_weight(&sol.vertices).unwrap(), sol.weight);
            if node.kind == NodeKind::Parallel {
                let inside_one = node.children.iter().any(|&c| sol.vertices.iter().all(|v| t.node(c).span.contains(v)));
                assert!(inside_one, "parallel solution mixes children");
            }
        }
    }
}

#[test]
fn cographs_need_no_branch_and_bound() {
    for seed in 0..60u64 {
        let g = random_cograph(1 + seed as usize * 3, seed).unwrap();
        let r = solve(&g, &SolverConfig::default()).unwrap();
        assert_eq!(r.tree.kind_counts().prime, 0);
        assert_eq!(r.prime_solves, 0);
        assert!(verify_tree(&g, &r.tree).is_empty());
    }
}

#[test]
fn fold_check_on_cographs_and_random_graphs() {
    assert!(fold_check(&figure1(), &decompose(&figure1()).unwrap()));
    for seed in 0..100u64 {
        let g = random_cograph(1 + (seed as usize * 37) % 200, seed).unwrap();
        assert!(fold_check(&g, &decompose(&g).unwrap()), "cograph seed {seed}");
    }
    for (i, g) in random_instances(200, 18) {
        if g.n() == 0 {
            continue;
        }
        let t = decompose(&g).unwrap();
        assert!(fold_check(&g, &t), "instance {i}");
        assert_eq!(solve(&g, &SolverConfig::default()).unwrap().solution.weight, brute_force_clique(&g).unwrap().weight);
    }
}

#[test]
fn coprime_eight_tree_and_clique() {
    let g = coprime_graph(8).unwrap();
    let t = decompose(&g).unwrap();
    // 1, 5 and 7 are coprime to every other label up to 8.
    assert_eq!(t.to_bracket(&g), "Series[1,Parallel[Series[Parallel[2,4,8],3],6],5,7]");
    assert!(verify_tree(&g, &t).is_empty());
    assert_eq!(sorted_spans(&t), strong_modules(&enumerate_modules_bruteforce(&g).unwrap()));
    let brute = brute_force_clique(&g).unwrap();
    assert_eq!(brute.weight, 5);
    assert_eq!(solve(&g, &SolverConfig::default()).unwrap().solution.weight, 5);
    assert!(g.is_clique(&[0, 1, 2, 4, 6]).unwrap());
}

#[test]
fn coprime_ten_has_a_prime_node() {
    let g = coprime_graph(10).unwrap();
    let t = decompose(&g).unwrap();
    assert_eq!(t.to_bracket(&g), "Series[1,Prime[Parallel[2,4,8],Parallel[3,9],5,6,10],7]");
    assert_eq!(sorted_spans(&t), strong_modules(&enumerate_modules_bruteforce(&g).unwrap()));
}
