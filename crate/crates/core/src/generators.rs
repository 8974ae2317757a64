//! Benchmark graph families: coprime graphs, random cographs and G(n, p).
//!
//! Randomized generators draw from ChaCha8 seeded with [`Seed`], so a seed
//! fixes the output graph for the lifetime of the crate.

use num_integer::gcd;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Weight};

pub type Seed = u64;

pub fn rng_from_seed(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertices labelled `1..=n`, adjacent iff their labels are coprime.
pub fn coprime_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("coprime graph needs n >= 1".into()));
    }
    let mut b = GraphBuilder::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if gcd(i, j) == 1 {
                b.add_edge(i - 1, j - 1)?;
            }
        }
    }
    b.set_labels((1..=n).map(|i| i.to_string()).collect())?;
    Ok(b.build())
}

/// Splits `n` by repeatedly drawing a part uniformly from `1..=remaining`,
/// then reverses the list. For `n >= 2` a single-part draw is discarded and
/// redrawn, so the result always has at least two parts.
pub fn random_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Vec<usize>> {
    if n < 1 {
        return Err(Error::InvalidParameter("partition needs n >= 1".into()));
    }
    loop {
        let mut parts = Vec::new();
        let mut remaining = n;
        while remaining > 0 {
            let p = rng.gen_range(1..=remaining);
            parts.push(p);
            remaining -= p;
        }
        if n == 1 || parts.len() >= 2 {
            parts.reverse();
            return Ok(parts);
        }
    }
}

/// Random cograph: split into parts, flip a coin for disjoint union (0) or
/// join (1), and recurse into the parts left to right.
pub fn random_cograph(n: usize, seed: Seed) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("cograph needs n >= 1".into()));
    }
    fn build(n: usize, offset: usize, rng: &mut ChaCha8Rng, b: &mut GraphBuilder) -> Result<()> {
        if n == 1 {
            return Ok(());
        }
        let parts = random_partition(n, rng)?;
        let join = rng.gen_range(0..=1) == 1;
        let mut ranges = Vec::with_capacity(parts.len());
        let mut start = offset;
        for &p in &parts {
            build(p, start, rng, b)?;
            ranges.push(start..start + p);
            start += p;
        }
        if join {
            for (i, a) in ranges.iter().enumerate() {
                for rest in &ranges[i + 1..] {
                    for u in a.clone() {
                        for v in rest.clone() {
                            b.add_edge(u, v)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
    let mut rng = rng_from_seed(seed);
    let mut b = GraphBuilder::new(n);
    build(n, 0, &mut rng, &mut b)?;
    Ok(b.build())
}

/// Erdős–Rényi graph: each pair is an edge independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng_from_seed(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Copy of `g` with weights drawn uniformly from `1..=max_weight`.
pub fn with_random_weights(g: &Graph, max_weight: Weight, seed: Seed) -> Result<Graph> {
    if max_weight < 1 {
        return Err(Error::InvalidParameter("max weight must be at least 1".into()));
    }
    let mut rng = rng_from_seed(seed);
    g.with_weights((0..g.n()).map(|_| rng.gen_range(1..=max_weight)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprime_eight() {
        let g = coprime_graph(8).unwrap();
        assert!((1..8).all(|v| g.has_edge(0, v)));
        assert!(!g.has_edge(5, 7));
        assert!(g.has_edge(1, 4));
        assert_eq!(g.label(6), "7");
        assert!(coprime_graph(0).is_err());
    }

    #[test]
    fn partitions() {
        let mut rng = rng_from_seed(0);
        assert_eq!(random_partition(1, &mut rng).unwrap(), vec![1]);
        for _ in 0..100 {
            let parts = random_partition(10, &mut rng).unwrap();
            assert_eq!(parts.iter().sum::<usize>(), 10);
            assert!(parts.len() >= 2 && parts.iter().all(|&p| p >= 1));
        }
        assert!(random_partition(0, &mut rng).is_err());
    }

    #[test]
    fn partition_golden() {
        // ChaCha8 seeded with 42, rand 0.8 uniform sampling.
        let mut rng = rng_from_seed(42);
        assert_eq!(random_partition(10, &mut rng).unwrap(), GOLDEN_PARTITION_10_SEED_42);
    }

    const GOLDEN_PARTITION_10_SEED_42: [usize; 3] = [1, 4, 5];

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(6, 0.0, 1).unwrap().m(), 0);
        assert_eq!(gnp(6, 1.0, 1).unwrap().m(), 15);
        assert!(gnp(6, 1.5, 1).is_err());
        assert_eq!(gnp(18, 0.5, 7).unwrap(), gnp(18, 0.5, 7).unwrap());
    }

    #[test]
    fn cograph_determinism() {
        assert_eq!(random_cograph(1, 3).unwrap(), Graph::edgeless(1));
        assert_eq!(random_cograph(60, 3).unwrap(), random_cograph(60, 3).unwrap());
        assert!(random_cograph(0, 3).is_err());
    }
}
