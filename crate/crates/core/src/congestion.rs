//! Embeddings of a graph into the leaves of sub-cubic trees and into paths,
//! their vertex congestion, and exact minimisation.
//!
//! Minimum tree congestion equals `tw(L(G)) + 1`; minimum path vertex
//! congestion equals `pw(L(G)) + 1`. Isolated vertices carry no edges and
//! are left out of every embedding and ordering.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::Tree;

/// Default cap on non-isolated vertices for the tree branch and bound.
pub const TREE_CONGESTION_LIMIT: usize = 10;
/// Default cap on non-isolated vertices for the subset dynamic programs.
pub const PATH_DP_LIMIT: usize = 20;

/// An injective map from the non-isolated vertices of `G` into the leaves of
/// a tree of maximum degree 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafEmbedding {
    pub tree: Tree,
    /// `assignment[v]` is the leaf hosting `v`; `None` exactly for isolated vertices.
    pub assignment: Vec<Option<usize>>,
}

impl LeafEmbedding {
    pub fn check(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidEmbedding(msg));
        if !self.tree.is_tree() {
            return bad("host is not a tree".into());
        }
        if self.tree.max_degree() > 3 {
            return bad(format!("host tree has a node of degree {}", self.tree.max_degree()));
        }
        if self.assignment.len() != g.vertex_count() {
            return bad(format!(
                "assignment covers {} vertices, graph has {}",
                self.assignment.len(),
                g.vertex_count()
            ));
        }
        let mut used = vec![false; self.tree.node_count()];
        for (v, slot) in self.assignment.iter().enumerate() {
            match (slot, g.degree(v)) {
                (None, 0) => {}
                (Some(_), 0) => return bad(format!("isolated vertex {} is embedded", v + 1)),
                (None, _) => return bad(format!("vertex {} is not embedded", v + 1)),
                (Some(u), _) => {
                    let u = *u;
                    if u >= self.tree.node_count() {
                        return bad(format!("vertex {} maps to missing node {}", v + 1, u + 1));
                    }
                    if !self.tree.is_leaf(u) {
                        return bad(format!("vertex {} maps to non-leaf node {}", v + 1, u + 1));
                    }
                    if used[u] {
                        return bad(format!("two vertices share leaf {}", u + 1));
                    }
                    used[u] = true;
                }
            }
        }
        Ok(())
    }
}

/// A linear ordering of the non-isolated vertices; `order[i]` sits at
/// position `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrdering {
    pub order: Vec<usize>,
}

impl LinearOrdering {
    /// Position (0-based) of every vertex; `usize::MAX` for unplaced ones.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.vertex_count()];
        for &v in &self.order {
            if v >= g.vertex_count() {
                return Err(Error::InvalidOrdering(format!("vertex {} out of range", v + 1)));
            }
            if seen[v] {
                return Err(Error::InvalidOrdering(format!("vertex {} repeated", v + 1)));
            }
            if g.degree(v) == 0 {
                return Err(Error::InvalidOrdering(format!("isolated vertex {} placed", v + 1)));
            }
            seen[v] = true;
        }
        if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) > 0 && !seen[v]) {
            return Err(Error::InvalidOrdering(format!("vertex {} missing", v + 1)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongestionKind {
    /// Vertex congestion of a leaf embedding into a sub-cubic tree.
    TreeVertex,
    /// Vertex congestion of a path embedding, endpoints inclusive.
    PathVertex,
    /// Edge congestion of a path embedding: the cutwidth.
    PathEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Tree(LeafEmbedding),
    Ordering(LinearOrdering),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongestionCertificate {
    pub value: usize,
    pub kind: CongestionKind,
    pub witness: Witness,
}

impl CongestionCertificate {
    /// Evaluates the witness from scratch.
    pub fn reevaluate(&self, g: &Graph) -> Result<usize> {
        match (&self.witness, self.kind) {
            (Witness::Tree(e), CongestionKind::TreeVertex) => Ok(vertex_congestion(e, g)?.value),
            (Witness::Ordering(o), CongestionKind::PathVertex) => path_vertex_congestion(o, g),
            (Witness::Ordering(o), CongestionKind::PathEdge) => ordering_cutwidth(o, g),
            _ => Err(Error::Invariant("witness does not match certificate kind".into())),
        }
    }
}

/// Congestion value and the load at every tree node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongestionProfile {
    pub value: usize,
    pub per_node: Vec<usize>,
}

/// Maximum over tree nodes of the number of edge paths through the node;
/// a leaf hosting `x` carries `deg(x)` paths.
pub fn vertex_congestion(e: &LeafEmbedding, g: &Graph) -> Result<CongestionProfile> {
    e.check(g)?;
    let mut per_node = vec![0usize; e.tree.node_count()];
    let rooted = e.tree.rooted_at(0);
    for &(v, w) in g.edges() {
        let (a, b) = (e.assignment[v].unwrap(), e.assignment[w].unwrap());
        for u in rooted.path(a, b) {
            per_node[u] += 1;
        }
    }
    Ok(CongestionProfile {
        value: per_node.iter().copied().max().unwrap_or(0),
        per_node,
    })
}

/// `max_i |{vw : pos(v) <= i <= pos(w)}|` for the given ordering.
pub fn path_vertex_congestion(o: &LinearOrdering, g: &Graph) -> Result<usize> {
    o.check(g)?;
    let pos = o.positions(g.vertex_count());
    // Difference array over positions.
    let mut diff = vec![0i64; o.order.len() + 1];
    for &(v, w) in g.edges() {
        let (a, b) = (pos[v].min(pos[w]), pos[v].max(pos[w]));
        diff[a] += 1;
        diff[b + 1] -= 1;
    }
    let mut run = 0i64;
    let mut best = 0i64;
    for d in &diff[..o.order.len()] {
        run += d;
        best = best.max(run);
    }
    Ok(best as usize)
}

/// `max_i |{vw : pos(v) <= i < pos(w)}|` for the given ordering.
pub fn ordering_cutwidth(o: &LinearOrdering, g: &Graph) -> Result<usize> {
    o.check(g)?;
    let pos = o.positions(g.vertex_count());
    let mut diff = vec![0i64; o.order.len() + 1];
    for &(v, w) in g.edges() {
        let (a, b) = (pos[v].min(pos[w]), pos[v].max(pos[w]));
        diff[a] += 1;
        diff[b] -= 1;
    }
    let mut run = 0i64;
    let mut best = 0i64;
    for d in &diff[..o.order.len()] {
        run += d;
        best = best.max(run);
    }
    Ok(best as usize)
}

/// Non-isolated part of `g` with original ids, after checking it is nonempty
/// and within `limit`.
fn core_of(g: &Graph, limit: usize, what: &'static str) -> Result<(Graph, Vec<usize>)> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let (h, ids) = g.without_isolated();
    if h.vertex_count() > limit {
        return Err(Error::LimitExceeded {
            what,
            size: h.vertex_count(),
            limit,
        });
    }
    Ok((h, ids))
}

/// Subset DP over orderings: `cost(S, u)` is the load at the position of `u`
/// when `S` is the prefix ending in `u`. Returns the optimum and the ordering
/// (local ids) found by backtracking with lowest-index tie-breaking.
fn ordering_dp(h: &Graph, cost: impl Fn(u32, usize, u32) -> u32) -> (u32, Vec<usize>) {
    let n = h.vertex_count();
    let adj: Vec<u32> = h.adjacency_masks().into_iter().map(|m| m as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut cross = vec![0u32; size];
    for s in 1..size as u32 {
        let u = s.trailing_zeros() as usize;
        let prev = s & (s - 1);
        let inner = (adj[u] & prev).count_ones();
        cross[s as usize] = cross[prev as usize] + adj[u].count_ones() - 2 * inner;
    }
    let mut best = vec![u32::MAX; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let mut rest = s;
        let mut m = u32::MAX;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = best[(s & !(1 << u)) as usize];
            let here = cost(cross[s as usize], u, (adj[u] & s).count_ones()).max(prev);
            m = m.min(here);
        }
        best[s as usize] = m;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let u = (0..n)
            .filter(|&u| s >> u & 1 == 1)
            .find(|&u| {
                let prev = best[(s & !(1 << u)) as usize];
                cost(cross[s as usize], u, (adj[u] & s).count_ones()).max(prev) == target
            })
            .expect("optimum is attained by some last vertex");
        order.push(u);
        s &= !(1 << u);
    }
    order.reverse();
    (best[full as usize], order)
}

/// Minimum path vertex congestion over orderings of the non-isolated
/// vertices; equals `pw(L(G)) + 1`.
pub fn min_path_congestion(g: &Graph) -> Result<CongestionCertificate> {
    min_path_congestion_limited(g, PATH_DP_LIMIT)
}

pub fn min_path_congestion_limited(g: &Graph, limit: usize) -> Result<CongestionCertificate> {
    let (h, ids) = core_of(g, limit.min(30), "path congestion")?;
    let (value, local) = if h.vertex_count() == 2 {
        (1, vec![0, 1])
    } else {
        ordering_dp(&h, |cross, _, inner| cross + inner)
    };
    Ok(CongestionCertificate {
        value: value as usize,
        kind: CongestionKind::PathVertex,
        witness: Witness::Ordering(LinearOrdering {
            order: local.into_iter().map(|u| ids[u]).collect(),
        }),
    })
}

/// Exact cutwidth over orderings of the non-isolated vertices. An edgeless
/// graph has cutwidth 0 with the empty ordering.
pub fn cutwidth(g: &Graph) -> Result<CongestionCertificate> {
    cutwidth_limited(g, PATH_DP_LIMIT)
}

pub fn cutwidth_limited(g: &Graph, limit: usize) -> Result<CongestionCertificate> {
    if g.edge_count() == 0 {
        return Ok(CongestionCertificate {
            value: 0,
            kind: CongestionKind::PathEdge,
            witness: Witness::Ordering(LinearOrdering { order: Vec::new() }),
        });
    }
    let (h, ids) = core_of(g, limit.min(30), "cutwidth")?;
    let (value, local) = ordering_dp(&h, |cross, _, _| cross);
    Ok(CongestionCertificate {
        value: value as usize,
        kind: CongestionKind::PathEdge,
        witness: Witness::Ordering(LinearOrdering {
            order: local.into_iter().map(|u| ids[u]).collect(),
        }),
    })
}

/// Leaf-labelled cubic tree under construction. Vertices are local indices
/// in insertion order; `leaf[i]` is the node hosting the i-th inserted vertex.
#[derive(Clone)]
struct PartialEmbedding {
    adj: Vec<Vec<(usize, usize)>>,
    edge_ends: Vec<(usize, usize)>,
    edge_load: Vec<u32>,
    node_load: Vec<u32>,
    leaf: Vec<usize>,
    max: u32,
}

impl PartialEmbedding {
    /// Star on the first three vertices, or a single edge for two.
    fn seed(count: usize) -> Self {
        let mut p = PartialEmbedding {
            adj: Vec::new(),
            edge_ends: Vec::new(),
            edge_load: Vec::new(),
            node_load: Vec::new(),
            leaf: Vec::new(),
            max: 0,
        };
        if count == 2 {
            p.add_node();
            p.add_node();
            p.add_edge(0, 1);
            p.leaf = vec![0, 1];
        } else {
            let center = p.add_node();
            for _ in 0..3 {
                let l = p.add_node();
                p.add_edge(center, l);
                p.leaf.push(l);
            }
        }
        p
    }

    fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.node_load.push(0);
        self.adj.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize) -> usize {
        let id = self.edge_ends.len();
        self.edge_ends.push((a, b));
        self.edge_load.push(0);
        self.adj[a].push((b, id));
        self.adj[b].push((a, id));
        id
    }

    /// Subdivides edge `e` and hangs a new leaf for the next vertex.
    fn insert_on(&mut self, e: usize) {
        let (a, b) = self.edge_ends[e];
        let load = self.edge_load[e];
        let m = self.add_node();
        self.node_load[m] = load;
        // e becomes (a, m); a fresh edge carries (m, b).
        self.edge_ends[e] = (a, m);
        let eb = self.edge_ends.len();
        self.edge_ends.push((m, b));
        self.edge_load.push(load);
        for slot in &mut self.adj[b] {
            if slot.1 == e {
                *slot = (m, eb);
            }
        }
        for slot in &mut self.adj[a] {
            if slot.1 == e {
                slot.0 = m;
            }
        }
        self.adj[m].push((a, e));
        self.adj[m].push((b, eb));
        let l = self.add_node();
        self.add_edge(m, l);
        self.leaf.push(l);
        self.max = self.max.max(load);
    }

    /// Routes an edge between the leaves of two inserted vertices.
    fn route(&mut self, x: usize, y: usize) {
        let (from, to) = (self.leaf[x], self.leaf[y]);
        let n = self.adj.len();
        let mut via = vec![(usize::MAX, usize::MAX); n];
        let mut stack = vec![from];
        via[from] = (from, usize::MAX);
        while let Some(u) = stack.pop() {
            if u == to {
                break;
            }
            for &(w, e) in &self.adj[u] {
                if via[w].0 == usize::MAX {
                    via[w] = (u, e);
                    stack.push(w);
                }
            }
        }
        let mut cur = to;
        loop {
            self.node_load[cur] += 1;
            self.max = self.max.max(self.node_load[cur]);
            if cur == from {
                break;
            }
            let (prev, e) = via[cur];
            self.edge_load[e] += 1;
            cur = prev;
        }
    }

    fn edge_count(&self) -> usize {
        self.edge_ends.len()
    }
}

struct TreeSearch<'a> {
    /// Local adjacency restricted to earlier-inserted vertices.
    earlier: &'a [Vec<usize>],
    /// `tail_max_degree[k]` = max degree among vertices inserted at step >= k.
    tail_max_degree: &'a [u32],
    best: u32,
    best_tree: Option<PartialEmbedding>,
    floor: u32,
    nodes_visited: u64,
}

impl TreeSearch<'_> {
    fn extend(&mut self, p: PartialEmbedding, k: usize) {
        self.nodes_visited += 1;
        if self.best <= self.floor {
            return;
        }
        if k == self.earlier.len() {
            if p.max < self.best {
                self.best = p.max;
                self.best_tree = Some(p);
            }
            return;
        }
        for e in 0..p.edge_count() {
            let mut child = p.clone();
            child.insert_on(e);
            for &y in &self.earlier[k] {
                child.route(k, y);
            }
            if child.max.max(self.tail_max_degree[k]) < self.best {
                self.extend(child, k + 1);
            }
            if self.best <= self.floor {
                return;
            }
        }
    }
}

/// Exact minimum vertex congestion over leaf embeddings into sub-cubic
/// trees; equals `tw(L(G)) + 1`.
pub fn min_tree_congestion(g: &Graph) -> Result<CongestionCertificate> {
    min_tree_congestion_limited(g, TREE_CONGESTION_LIMIT)
}

/// Branch and bound over leaf-labelled cubic trees built by inserting
/// vertices in descending-degree order, each insertion subdividing an edge.
/// Loads never drop as vertices are added, so a partial embedding whose load
/// already reaches the incumbent is cut. The incumbent starts at the optimal
/// path congestion (a caterpillar realises it).
pub fn min_tree_congestion_limited(g: &Graph, limit: usize) -> Result<CongestionCertificate> {
    let (h, ids) = core_of(g, limit, "tree congestion")?;
    let n = h.vertex_count();
    let path = min_path_congestion_limited(g, PATH_DP_LIMIT.max(limit))?;
    let floor = h.max_degree() as u32;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut e: Vec<usize> = h.neighbors(v).iter().map(|&w| rank[w]).filter(|&r| r < i).collect();
            e.sort_unstable();
            e
        })
        .collect();
    let mut tail_max_degree = vec![0u32; n + 1];
    for k in (0..n).rev() {
        tail_max_degree[k] = tail_max_degree[k + 1].max(h.degree(order[k]) as u32);
    }

    let seed_count = n.min(3);
    let mut seed = PartialEmbedding::seed(seed_count);
    for (k, ys) in earlier.iter().enumerate().take(seed_count) {
        for &y in ys {
            seed.route(k, y);
        }
    }
    let mut search = TreeSearch {
        earlier: &earlier,
        tail_max_degree: &tail_max_degree,
        best: path.value as u32,
        best_tree: None,
        floor,
        nodes_visited: 0,
    };
    if seed.max.max(tail_max_degree[seed_count]) < search.best {
        search.extend(seed, seed_count);
    }

    let embedding = match search.best_tree {
        Some(p) => {
            let tree = Tree::new(p.adj.len(), &p.edge_ends);
            let mut assignment = vec![None; g.vertex_count()];
            for (k, &leaf) in p.leaf.iter().enumerate() {
                assignment[ids[order[k]]] = Some(leaf);
            }
            LeafEmbedding { tree, assignment }
        }
        None => match &path.witness {
            Witness::Ordering(o) => caterpillar(o, g),
            Witness::Tree(_) => unreachable!("path solver returns orderings"),
        },
    };
    Ok(CongestionCertificate {
        value: search.best as usize,
        kind: CongestionKind::TreeVertex,
        witness: Witness::Tree(embedding),
    })
}

/// Spine nodes `0..k` in ordering order, each with a pendant leaf for its
/// vertex. Its vertex congestion equals the ordering's path congestion.
pub fn caterpillar(o: &LinearOrdering, g: &Graph) -> LeafEmbedding {
    let k = o.order.len();
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut assignment = vec![None; g.vertex_count()];
    for (i, &v) in o.order.iter().enumerate() {
        edges.push((i, k + i));
        assignment[v] = Some(k + i);
    }
    LeafEmbedding {
        tree: Tree::new(2 * k, &edges),
        assignment,
    }
}

/// Both sides of `pw(L(G)) - floor(Δ/2) + 1 <= cw(G) <= pw(L(G))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolovachReport {
    pub lower: i64,
    pub cutwidth: usize,
    pub upper: usize,
    pub holds: bool,
}

pub fn golovach_check(g: &Graph) -> Result<GolovachReport> {
    let delta = g.max_degree();
    if delta < 2 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let pw_line = min_path_congestion(g)?.value - 1;
    let cw = cutwidth(g)?.value;
    let lower = pw_line as i64 - (delta / 2) as i64 + 1;
    Ok(GolovachReport {
        lower,
        cutwidth: cw,
        upper: pw_line,
        holds: lower <= cw as i64 && cw <= pw_line,
    })
}
