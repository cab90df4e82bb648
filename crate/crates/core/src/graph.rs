//! Simple undirected graphs, line graphs and degree statistics.
//!
//! Vertices are `0..n` internally. File formats and user-facing output use
//! 1-indexed ids; conversion happens at the I/O boundary only.

use std::fmt;

use crate::error::{Error, Result};
use crate::Rational;

/// Index of an edge under the canonical ordering (lexicographic on the
/// sorted endpoint pair). Edge ids double as the vertex ids of the line graph.
pub type EdgeId = usize;

/// Default cap on the vertex count accepted by [`minimal_dense_subgraph`].
pub const MINIMAL_SUBGRAPH_LIMIT: usize = 18;

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph from 0-indexed edges. Rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {}-{} has an endpoint outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", u + 1)));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Builds a graph from 1-indexed edges, as they appear in files.
    pub fn from_one_indexed(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u == 0 || v == 0) {
            return Err(Error::InvalidGraph(format!(
                "edge {u}-{v} has an endpoint outside 1..={n}"
            )));
        }
        Graph::new(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical [`EdgeId`] order, endpoints sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.adj[v]
            .iter()
            .map(|&w| self.edge_id(v, w).expect("adjacency mirrors edge list"))
            .collect();
        ids.sort_unstable();
        ids
    }

    /// Vertices with at least one incident edge.
    pub fn non_isolated(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Adjacency as bitmasks. Callers must ensure `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    /// Graph with isolated vertices removed; returns the kept original ids.
    pub fn without_isolated(&self) -> (Graph, Vec<usize>) {
        let keep = self.non_isolated();
        (self.induced(&keep), keep)
    }
}

/// Builds `L(g)`: one vertex per edge of `g` (numbered by [`EdgeId`]),
/// adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident_edges(v);
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint.
    Graph::new(g.edge_count(), edges).expect("line graph of a simple graph is simple")
}

/// Minimum, maximum and exact average degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub avg_degree: Rational,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    if g.vertex_count() == 0 {
        return Err(Error::UndefinedStatistics);
    }
    Ok(DegreeStats {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        avg_degree: avg_degree(g),
    })
}

/// `2|E| / |V|`; zero for the empty graph.
pub fn avg_degree(g: &Graph) -> Rational {
    if g.vertex_count() == 0 {
        return Rational::from_integer(0);
    }
    Rational::new(2 * g.edge_count() as i64, g.vertex_count() as i64)
}

/// Induced subgraph of maximum average degree, fewest vertices among
/// maximisers, lowest vertex mask among those. Such a subgraph is minimal:
/// deleting any nonempty proper vertex subset strictly lowers its average
/// degree.
///
/// Returns the subgraph and the original ids of its vertices.
pub fn minimal_dense_subgraph(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    minimal_dense_subgraph_limited(g, MINIMAL_SUBGRAPH_LIMIT)
}

pub fn minimal_dense_subgraph_limited(g: &Graph, limit: usize) -> Result<(Graph, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::UndefinedStatistics);
    }
    if n > limit || n > 30 {
        return Err(Error::LimitExceeded {
            what: "minimal dense subgraph search",
            size: n,
            limit: limit.min(30),
        });
    }
    let adj = g.adjacency_masks();
    // (edges, vertices, mask) of the incumbent; compare e/s by cross-multiplying.
    let mut best: (u64, u64, u64) = (0, 1, 1);
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as u64;
        let mut twice_edges = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            twice_edges += (adj[v as usize] & mask).count_ones() as u64;
        }
        let e = twice_edges / 2;
        let lhs = e * best.1;
        let rhs = best.0 * size;
        if lhs > rhs || (lhs == rhs && size < best.1) {
            best = (e, size, mask);
        }
    }
    let verts: Vec<usize> = (0..n).filter(|&v| best.2 >> v & 1 == 1).collect();
    Ok((g.induced(&verts), verts))
}

/// True when deleting any nonempty proper vertex subset strictly lowers the
/// average degree. Exhaustive; intended for small graphs.
pub fn is_minimal(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 24, "exhaustive minimality check is limited to 24 vertices");
    let d = avg_degree(g);
    let adj = g.adjacency_masks();
    let full = (1u64 << n) - 1;
    (1..full).all(|removed| {
        let kept = full & !removed;
        let size = kept.count_ones() as i64;
        let twice: i64 = (0..n)
            .filter(|&v| kept >> v & 1 == 1)
            .map(|v| (adj[v] & kept).count_ones() as i64)
            .sum();
        Rational::new(twice, size) < d
    })
}

/// Checks `d(H)/2 < (sum of degrees over S - |e(S)|) / |S|` for every
/// nonempty proper subset `S`. Holds whenever `h` is minimal.
pub fn subset_edge_density_holds(h: &Graph) -> bool {
    let n = h.vertex_count();
    assert!(n <= 24, "exhaustive subset check is limited to 24 vertices");
    let half_d = avg_degree(h) / 2;
    let adj = h.adjacency_masks();
    let full = (1u64 << n) - 1;
    (1..full).all(|s| {
        let size = s.count_ones() as i64;
        let mut deg_sum = 0i64;
        let mut twice_inner = 0i64;
        for v in (0..n).filter(|&v| s >> v & 1 == 1) {
            deg_sum += adj[v].count_ones() as i64;
            twice_inner += (adj[v] & s).count_ones() as i64;
        }
        half_d < Rational::new(deg_sum - twice_inner / 2, size)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_one_indexed(n, edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_one_indexed(2, &[(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_one_indexed(2, &[(1, 2), (2, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_one_indexed(2, &[(1, 3)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn edge_ids_are_lexicographic() {
        let g = g1(4, &[(3, 4), (2, 1), (1, 3)]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(3, 2), Some(2));
        assert_eq!(g.edge_id(1, 3), None);
    }

    #[test]
    fn line_graph_small_cases() {
        let p3 = g1(3, &[(1, 2), (2, 3)]);
        let l = line_graph(&p3);
        assert_eq!((l.vertex_count(), l.edges()), (2, &[(0, 1)][..]));

        let star = g1(4, &[(1, 2), (1, 3), (1, 4)]);
        let l = line_graph(&star);
        assert_eq!(l.edge_count(), 3);
        assert_eq!(l.min_degree(), 2);

        // K_{2,2} is the 4-cycle 1-3-2-4-1; its line graph is again a 4-cycle.
        let c4 = g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        let l = line_graph(&c4);
        assert_eq!(l.vertex_count(), 4);
        assert_eq!(l.edge_count(), 4);
        assert!((0..4).all(|v| l.degree(v) == 2));
        assert!(l.is_connected());
    }

    #[test]
    fn empty_line_graph() {
        let l = line_graph(&Graph::empty(3));
        assert_eq!(l.vertex_count(), 0);
    }

    #[test]
    fn degree_stats_examples() {
        let k4 = g1(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let s = degree_stats(&k4).unwrap();
        assert_eq!((s.min_degree, s.max_degree), (3, 3));
        assert_eq!(s.avg_degree, Rational::from_integer(3));

        let p52 = g1(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (2, 4), (3, 5)]);
        let s = degree_stats(&p52).unwrap();
        assert_eq!((s.min_degree, s.max_degree), (2, 4));
        assert_eq!(s.avg_degree, Rational::new(14, 5));

        let k32 = g1(5, &[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)]);
        let s = degree_stats(&k32).unwrap();
        assert_eq!((s.min_degree, s.max_degree), (2, 3));
        assert_eq!(s.avg_degree, Rational::new(12, 5));

        assert_eq!(degree_stats(&Graph::empty(0)), Err(Error::UndefinedStatistics));
    }

    #[test]
    fn minimal_subgraph_examples() {
        let k4_pendant = g1(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]);
        let (h, verts) = minimal_dense_subgraph(&k4_pendant).unwrap();
        assert_eq!(verts, vec![0, 1, 2, 3]);
        assert_eq!(h.edge_count(), 6);

        let k2 = g1(2, &[(1, 2)]);
        assert_eq!(minimal_dense_subgraph(&k2).unwrap().0, k2);

        // Connected regular graphs are minimal, hence returned whole.
        let c5 = g1(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        assert_eq!(minimal_dense_subgraph(&c5).unwrap().0, c5);
        assert!(is_minimal(&c5));
        assert!(subset_edge_density_holds(&c5));
    }

    #[test]
    fn minimal_subgraph_limit() {
        let big = Graph::empty(19);
        assert!(matches!(
            minimal_dense_subgraph(&big),
            Err(Error::LimitExceeded { limit: 18, .. })
        ));
    }
}
