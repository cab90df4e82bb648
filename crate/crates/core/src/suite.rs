//! Small test graphs: every connected graph up to isomorphism on a few
//! vertices, and seeded random graphs and trees.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            go(cur, k + 1, out);
            cur.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class,
/// each the canonical (lowest edge-mask) labelling. Practical for `n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    // For each permutation, where each pair index goes.
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = images.iter().all(|img| {
            let mut m = 0u64;
            for (i, &j) in img.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m |= 1 << j;
                }
            }
            m >= mask
        });
        if !canonical {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("pairs are simple");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All connected graphs on `2..=max_n` vertices up to isomorphism.
pub fn exhaustive_suite(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(connected_graphs).collect()
}

/// `count` graphs with `2..=max_n` vertices and `1..=max_m` edges, edges
/// drawn uniformly without replacement. Not necessarily connected.
pub fn random_graphs(count: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let m = rng.gen_range(1..=max_m.min(pairs.len()));
            pairs.shuffle(&mut rng);
            pairs.truncate(m);
            Graph::new(n, pairs).expect("distinct pairs")
        })
        .collect()
}

/// Uniform labelled tree on `n >= 2` vertices from a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n == 2 {
        return Graph::new(2, [(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("a Prüfer sequence decodes to a tree")
}

pub fn random_trees(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            random_tree(n, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(exhaustive_suite(5).len(), 30);
    }

    #[test]
    fn random_graphs_respect_limits() {
        let gs = random_graphs(100, 8, 10, 1);
        assert_eq!(gs.len(), 100);
        assert!(gs
            .iter()
            .all(|g| g.vertex_count() <= 8 && (1..=10).contains(&g.edge_count())));
        assert_eq!(gs, random_graphs(100, 8, 10, 1));
    }

    #[test]
    fn trees_are_trees() {
        for t in random_trees(50, 12, 3) {
            assert!(t.is_tree());
        }
    }
}
