//! Exact treewidth and pathwidth by dynamic programming over vertex subsets.

use crate::decomposition::{PathDecomposition, Subject, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::Tree;

/// Default cap on vertex count for both solvers.
pub const EXACT_LIMIT: usize = 20;

/// An elimination ordering: `ordering[0]` is eliminated first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationCertificate {
    pub ordering: Vec<usize>,
    pub width: usize,
}

impl EliminationCertificate {
    /// Eliminates in order, turning later neighbours into cliques; returns the
    /// largest number of later neighbours seen.
    pub fn simulate(&self, g: &Graph) -> Result<usize> {
        Ok(fill_in(&self.ordering, g)?.1)
    }
}

#[derive(Debug, Clone)]
pub struct TreewidthResult {
    pub width: usize,
    pub certificate: EliminationCertificate,
    pub decomposition: TreeDecomposition,
}

#[derive(Debug, Clone)]
pub struct PathwidthResult {
    pub width: usize,
    pub ordering: Vec<usize>,
    pub decomposition: PathDecomposition,
}

fn check_limit(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.vertex_count() > limit.min(30) {
        return Err(Error::LimitExceeded {
            what,
            size: g.vertex_count(),
            limit: limit.min(30),
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    g.adjacency_masks().into_iter().map(|m| m as u32).collect()
}

/// Later-neighbour sets of the filled graph, and the elimination width.
fn fill_in(order: &[usize], g: &Graph) -> Result<(Vec<Vec<usize>>, usize)> {
    let n = g.vertex_count();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::InvalidOrdering(format!(
                "vertex {} repeated or out of range",
                v + 1
            )));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::InvalidOrdering("ordering must list every vertex".into()));
    }
    let mut nbrs: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut later = vec![Vec::new(); n];
    let mut width = 0;
    for &v in order {
        let up: Vec<usize> = nbrs[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        width = width.max(up.len());
        for (i, &a) in up.iter().enumerate() {
            for &b in &up[i + 1..] {
                nbrs[a].insert(b);
                nbrs[b].insert(a);
            }
        }
        later[v] = up;
    }
    Ok((later, width))
}

/// Tree decomposition with one bag `{v} ∪ later(v)` per vertex, each node
/// hanging off the node of its earliest later neighbour. Components are
/// chained together through their last-eliminated vertices.
fn decomposition_from_ordering(order: &[usize], g: &Graph) -> Result<TreeDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(TreeDecomposition::new(
            Subject::Graph,
            Tree::new(1, &[]),
            vec![Vec::new()],
        ));
    }
    let (later, _) = fill_in(order, g)?;
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for &v in order {
        match later[v].iter().min_by_key(|&&w| pos[w]) {
            Some(&w) => edges.push((pos[v], pos[w])),
            None => roots.push(pos[v]),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    let bags = order
        .iter()
        .map(|&v| {
            let mut b = later[v].clone();
            b.push(v);
            b
        })
        .collect();
    Ok(TreeDecomposition::new(Subject::Graph, Tree::new(n, &edges), bags))
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q_set(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut stack = vec![v];
    let mut q = 0u32;
    while let Some(u) = stack.pop() {
        q |= adj[u] & !s;
        let mut next = adj[u] & s & !seen;
        seen |= next;
        while next != 0 {
            stack.push(next.trailing_zeros() as usize);
            next &= next - 1;
        }
    }
    q & !(1u32 << v)
}

pub fn exact_treewidth(g: &Graph) -> Result<TreewidthResult> {
    exact_treewidth_limited(g, EXACT_LIMIT)
}

/// `TW(S) = min_{v∈S} max(TW(S−v), |Q(S−v, v)|)` where `S` is the set
/// eliminated first and `v` the last of them. An empty graph has width 0
/// and a single empty bag.
pub fn exact_treewidth_limited(g: &Graph, limit: usize) -> Result<TreewidthResult> {
    check_limit(g, limit, "treewidth")?;
    let n = g.vertex_count();
    let adj = masks(g);
    let size = 1usize << n;
    let mut tw = vec![u8::MAX; size];
    tw[0] = 0;
    for s in 1..size as u32 {
        let mut rest = s;
        let mut best = u8::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let here = tw[prev as usize].max(q_set(&adj, prev, v).count_ones() as u8);
            best = best.min(here);
        }
        tw[s as usize] = best;
    }
    let mut s = (size - 1) as u32;
    let mut rev = Vec::with_capacity(n);
    while s != 0 {
        let target = tw[s as usize];
        let v = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .find(|&v| {
                let prev = s & !(1 << v);
                tw[prev as usize].max(q_set(&adj, prev, v).count_ones() as u8) == target
            })
            .expect("optimum attained");
        rev.push(v);
        s &= !(1 << v);
    }
    rev.reverse();
    let width = tw[size - 1] as usize;
    let decomposition = decomposition_from_ordering(&rev, g)?;
    debug_assert_eq!(decomposition.width()?, width);
    Ok(TreewidthResult {
        width,
        certificate: EliminationCertificate { ordering: rev, width },
        decomposition,
    })
}

pub fn exact_pathwidth(g: &Graph) -> Result<PathwidthResult> {
    exact_pathwidth_limited(g, EXACT_LIMIT)
}

/// Vertex separation: `VS(S) = min_{v∈S} max(VS(S−v), |∂S|)` with `∂S` the
/// vertices of `S` that have a neighbour outside `S`.
pub fn exact_pathwidth_limited(g: &Graph, limit: usize) -> Result<PathwidthResult> {
    check_limit(g, limit, "pathwidth")?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(PathwidthResult {
            width: 0,
            ordering: Vec::new(),
            decomposition: PathDecomposition::new(Subject::Graph, vec![Vec::new()]),
        });
    }
    let adj = masks(g);
    let size = 1usize << n;
    let boundary = |s: u32| -> u8 {
        let mut rest = s;
        let mut c = 0;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[u] & !s != 0 {
                c += 1;
            }
        }
        c
    };
    let mut vs = vec![u8::MAX; size];
    vs[0] = 0;
    for s in 1..size as u32 {
        let b = boundary(s);
        let mut rest = s;
        let mut best = u8::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.min(vs[(s & !(1 << v)) as usize]);
        }
        vs[s as usize] = best.max(b);
    }
    let mut s = (size - 1) as u32;
    let mut rev = Vec::with_capacity(n);
    while s != 0 {
        let target = vs[s as usize];
        let v = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .find(|&v| vs[(s & !(1 << v)) as usize].max(boundary(s)) == target)
            .expect("optimum attained");
        rev.push(v);
        s &= !(1 << v);
    }
    rev.reverse();
    let mut bags = Vec::with_capacity(n);
    let mut prefix = 0u32;
    for &v in &rev {
        let mut bag: Vec<usize> = (0..n)
            .filter(|&u| prefix >> u & 1 == 1 && adj[u] & !prefix != 0)
            .collect();
        bag.push(v);
        bags.push(bag);
        prefix |= 1 << v;
    }
    let decomposition = PathDecomposition::new(Subject::Graph, bags);
    let width = decomposition.width()?;
    if width != vs[size - 1] as usize {
        return Err(Error::Invariant(format!(
            "path bags have width {width}, separation is {}",
            vs[size - 1]
        )));
    }
    Ok(PathwidthResult {
        width,
        ordering: rev,
        decomposition,
    })
}
