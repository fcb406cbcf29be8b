//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::tw::TreeDecomposition;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(n, p, &mut rng(seed))
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

/// Random connected graph: a random spanning tree plus `G(n, p)` extra edges.
pub fn connected_gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent, order[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

/// Random partial 2-tree together with a width-<=2 tree decomposition.
///
/// A 2-tree is grown by attaching each new vertex to both ends of an existing
/// edge; each edge is then kept with probability 3/4, except that the
/// attachment edges of a vertex are never both dropped so the graph remains
/// connected.
pub fn partial_2_tree(n: usize, seed: u64) -> (Graph, TreeDecomposition) {
    let mut rng = rng(seed);
    if n == 0 {
        return (Graph::empty(0), TreeDecomposition::new(vec![vec![]], vec![]));
    }
    if n == 1 {
        return (Graph::empty(1), TreeDecomposition::new(vec![vec![0]], vec![]));
    }
    // Edges of the underlying 2-tree, each with the bag that contains it.
    let mut tree_edges: Vec<((usize, usize), usize)> = vec![((0, 1), 0)];
    let mut bags: Vec<Vec<usize>> = vec![vec![0, 1]];
    let mut td_edges = Vec::new();
    let mut kept = vec![(0usize, 1usize)];
    for v in 2..n {
        let &((a, b), home) = tree_edges.choose(&mut rng).expect("nonempty");
        let bag_id = bags.len();
        let mut bag = vec![a, b, v];
        bag.sort_unstable();
        bags.push(bag);
        td_edges.push((home, bag_id));
        tree_edges.push(((a, v), bag_id));
        tree_edges.push(((b, v), bag_id));
        let keep_a = rng.gen_bool(0.75);
        let keep_b = rng.gen_bool(0.75);
        if keep_a || !keep_b {
            kept.push((a, v));
        }
        if keep_b {
            kept.push((b, v));
        }
    }
    let g = Graph::from_edges(n, kept).expect("generated pairs are valid");
    (g, TreeDecomposition::new(bags, td_edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(gnp(12, 0.5, 7), gnp(12, 0.5, 7));
        assert_eq!(partial_2_tree(50, 3).0, partial_2_tree(50, 3).0);
    }

    #[test]
    fn partial_2_tree_is_connected_with_valid_decomposition() {
        for seed in 0..20 {
            let n = 1 + seed as usize * 7;
            let (g, td) = partial_2_tree(n, seed);
            assert!(g.is_connected());
            td.validate(&g).unwrap();
            assert!(td.width() <= 2);
        }
    }

    #[test]
    fn connected_gnp_is_connected() {
        let mut r = rng(1);
        for n in 0..15 {
            assert!(connected_gnp_with(n, 0.1, &mut r).is_connected());
        }
    }
}
