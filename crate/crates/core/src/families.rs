//! Graph families with known line-graph widths, and the orderings that
//! realise those widths.
//!
//! Vertex labels below are 1-indexed as in the literature; the generated
//! graphs use label − 1 internally.

use std::fmt;
use std::str::FromStr;

use crate::congestion::{path_vertex_congestion, LinearOrdering};
use crate::decomposition::{bags_from_base_nodes, PathDecomposition, Subject};
use crate::error::{Error, Result};
use crate::exact::exact_treewidth;
use crate::graph::{line_graph, Graph};
use crate::tree::Tree;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    /// Parts `1..=p` and `p+1..=p+q`.
    CompleteBipartite {
        p: usize,
        q: usize,
    },
    PathPower {
        n: usize,
        k: usize,
    },
    CyclePower {
        n: usize,
        k: usize,
    },
    /// Cycle power minus the matching `{i(n−k+i)}`, and for even `n` also
    /// minus `{(k+1)(k+2), (k+3)(k+4), …, (n−k−1)(n−k)}`.
    CyclePowerMatched {
        n: usize,
        k: usize,
    },
    /// `n × n` grid, row-major labels `1..=n²`, with `k − deg(v)` pendant
    /// cliques of order `k + 1` on each grid vertex `v`.
    GridCliques {
        n: usize,
        k: usize,
    },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::PathPower { .. } => "path-power",
            FamilySpec::CyclePower { .. } => "cycle-power",
            FamilySpec::CyclePowerMatched { .. } => "cycle-power-matched",
            FamilySpec::GridCliques { .. } => "grid-cliques",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Complete { n } => vec![n],
            FamilySpec::CompleteBipartite { p, q } => vec![p, q],
            FamilySpec::PathPower { n, k }
            | FamilySpec::CyclePower { n, k }
            | FamilySpec::CyclePowerMatched { n, k }
            | FamilySpec::GridCliques { n, k } => vec![n, k],
        }
    }

    /// Builds a spec from a family name and its numeric parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self> {
        let want = |count: usize| {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} takes {count} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "complete" => {
                want(1)?;
                FamilySpec::Complete { n: params[0] }
            }
            "complete-bipartite" => {
                want(2)?;
                FamilySpec::CompleteBipartite {
                    p: params[0],
                    q: params[1],
                }
            }
            "path-power" => {
                want(2)?;
                FamilySpec::PathPower {
                    n: params[0],
                    k: params[1],
                }
            }
            "cycle-power" => {
                want(2)?;
                FamilySpec::CyclePower {
                    n: params[0],
                    k: params[1],
                }
            }
            "cycle-power-matched" => {
                want(2)?;
                FamilySpec::CyclePowerMatched {
                    n: params[0],
                    k: params[1],
                }
            }
            "grid-cliques" => {
                want(2)?;
                FamilySpec::GridCliques {
                    n: params[0],
                    k: params[1],
                }
            }
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<()> {
        let fail = |m: String| Err(Error::InvalidParameter(m));
        match *self {
            FamilySpec::Complete { n } if n < 1 => fail("complete needs n >= 1".into()),
            FamilySpec::CompleteBipartite { p, q } if !(p >= q && q >= 1) => {
                fail(format!("complete-bipartite needs p >= q >= 1 (got p={p}, q={q})"))
            }
            FamilySpec::PathPower { n, k }
            | FamilySpec::CyclePower { n, k }
            | FamilySpec::CyclePowerMatched { n, k }
                if !(k >= 1 && n > 2 * k) =>
            {
                fail(format!("{} needs n > 2k >= 2 (got n={n}, k={k})", self.name()))
            }
            FamilySpec::GridCliques { n, .. } if n < 3 => fail(format!("grid-cliques needs n >= 3 (got n={n})")),
            FamilySpec::GridCliques { k, .. } if k < 4 => fail(format!("grid-cliques needs k >= 4 (got k={k})")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `"<name> <param> ..."`.
    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let name = words
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty family".into()))?;
        let params = words
            .map(|w| {
                w.parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter {w:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        FamilySpec::from_parts(name, &params)
    }
}

fn cycle_power_edges(n: usize, k: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..n {
        for d in 1..=k {
            e.push((i, (i + d) % n));
        }
    }
    e
}

/// Edges removed from the cycle power, 1-indexed.
pub fn matched_removals(n: usize, k: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=k).map(|i| (i, n - k + i)).collect();
    if n.is_multiple_of(2) {
        out.extend((k + 1..n - k).step_by(2).map(|a| (a, a + 1)));
    }
    out
}

/// Grid-cliques layout: for each grid vertex, the ranges of its pendant
/// cliques (attachment vertex first).
struct GridLayout {
    n: usize,
    cliques: Vec<Vec<std::ops::Range<usize>>>,
    total: usize,
}

fn grid_layout(n: usize, k: usize) -> GridLayout {
    let mut next = n * n;
    let mut cliques = Vec::with_capacity(n * n);
    for v in 0..n * n {
        let (r, c) = (v / n, v % n);
        let deg = [r > 0, r + 1 < n, c > 0, c + 1 < n].iter().filter(|&&b| b).count();
        let mut mine = Vec::new();
        for _ in 0..k - deg {
            mine.push(next..next + k + 1);
            next += k + 1;
        }
        cliques.push(mine);
    }
    GridLayout {
        n,
        cliques,
        total: next,
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.check()?;
    match *spec {
        FamilySpec::Complete { n } => {
            let e = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::new(n, e)
        }
        FamilySpec::CompleteBipartite { p, q } => {
            let e = (0..p).flat_map(|a| (p..p + q).map(move |b| (a, b)));
            Graph::new(p + q, e)
        }
        FamilySpec::PathPower { n, k } => {
            let e = (0..n).flat_map(|a| (a + 1..n.min(a + k + 1)).map(move |b| (a, b)));
            Graph::new(n, e)
        }
        FamilySpec::CyclePower { n, k } => Graph::new(n, cycle_power_edges(n, k)),
        FamilySpec::CyclePowerMatched { n, k } => {
            let gone: Vec<(usize, usize)> = matched_removals(n, k)
                .into_iter()
                .map(|(a, b)| (a.min(b) - 1, a.max(b) - 1))
                .collect();
            let e = cycle_power_edges(n, k)
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .filter(|e| !gone.contains(e));
            Graph::new(n, e)
        }
        FamilySpec::GridCliques { n, k } => {
            let layout = grid_layout(n, k);
            let mut e = Vec::new();
            for v in 0..n * n {
                let (r, c) = (v / n, v % n);
                if c + 1 < n {
                    e.push((v, v + 1));
                }
                if r + 1 < n {
                    e.push((v, v + n));
                }
                for clique in &layout.cliques[v] {
                    e.push((v, clique.start));
                    for a in clique.clone() {
                        for b in a + 1..clique.end {
                            e.push((a, b));
                        }
                    }
                }
            }
            Graph::new(layout.total, e)
        }
    }
}

/// The ordering that realises a family's width, its line path
/// decomposition, and the closed form the width is compared against.
#[derive(Debug, Clone)]
pub struct SharpEmbedding {
    pub ordering: LinearOrdering,
    pub decomposition: PathDecomposition,
    pub width: usize,
    /// Expected width; an upper bound rather than an equality for
    /// grid-cliques.
    pub closed_form: i64,
    pub exact_closed_form: bool,
}

/// Width the sharp ordering is expected to reach.
pub fn sharp_closed_form(spec: &FamilySpec) -> Result<(i64, bool)> {
    match *spec {
        FamilySpec::PathPower { k, .. } => {
            let k = k as i64;
            Ok(((k * k + 3 * k) / 2 - 1, true))
        }
        FamilySpec::CyclePower { k, .. } => {
            let k = k as i64;
            Ok((k * k + 2 * k - 1, true))
        }
        FamilySpec::CyclePowerMatched { n, k } => {
            let k = k as i64;
            Ok((k * k + k - if n % 2 == 0 { 2 } else { 1 }, true))
        }
        FamilySpec::GridCliques { n, k } => {
            let (n, k) = (n as i64, k as i64);
            Ok((4 * n + 4 + (k - 2) * (k * (k + 1) / 2 + 1) - 1, false))
        }
        _ => Err(Error::UnsupportedFamily(format!(
            "{} has no sharp ordering",
            spec.name()
        ))),
    }
}

/// Identity ordering for the path and cycle families; for grid-cliques the
/// grid in row-major order, each grid vertex followed by its pendant
/// cliques, attachment vertex first.
pub fn sharp_ordering(spec: &FamilySpec) -> Result<LinearOrdering> {
    sharp_closed_form(spec)?;
    spec.check()?;
    Ok(match *spec {
        FamilySpec::PathPower { n, .. }
        | FamilySpec::CyclePower { n, .. }
        | FamilySpec::CyclePowerMatched { n, .. } => LinearOrdering {
            order: (0..n).collect(),
        },
        FamilySpec::GridCliques { n, k } => {
            let layout = grid_layout(n, k);
            let mut order = Vec::with_capacity(layout.total);
            for v in 0..layout.n * layout.n {
                order.push(v);
                for c in &layout.cliques[v] {
                    order.extend(c.clone());
                }
            }
            LinearOrdering { order }
        }
        _ => unreachable!("rejected by sharp_closed_form"),
    })
}

/// Path decomposition of `L(G)` with one node per position and each vertex
/// based at its own position.
pub fn ordering_decomposition(o: &LinearOrdering, g: &Graph) -> Result<PathDecomposition> {
    o.check(g)?;
    let pos = o.positions(g.vertex_count());
    let base: Vec<Option<usize>> = pos.iter().map(|&p| (p != usize::MAX).then_some(p)).collect();
    let bags = bags_from_base_nodes(&Tree::path(o.order.len()), &base, g);
    Ok(PathDecomposition::new(Subject::Line, bags))
}

/// The block-level decomposition for grid-cliques: one node per grid
/// vertex, shared by the vertex and all its pendant cliques.
pub fn grid_block_decomposition(n: usize, k: usize) -> Result<PathDecomposition> {
    let spec = FamilySpec::GridCliques { n, k };
    let g = generate(&spec)?;
    let layout = grid_layout(n, k);
    let mut base = vec![None; g.vertex_count()];
    for v in 0..n * n {
        base[v] = Some(v);
        for c in &layout.cliques[v] {
            for u in c.clone() {
                base[u] = Some(v);
            }
        }
    }
    let bags = bags_from_base_nodes(&Tree::path(n * n), &base, &g);
    Ok(PathDecomposition::new(Subject::Line, bags))
}

pub fn sharp_embedding(spec: &FamilySpec) -> Result<SharpEmbedding> {
    let (closed_form, exact_closed_form) = sharp_closed_form(spec)?;
    let g = generate(spec)?;
    let ordering = sharp_ordering(spec)?;
    let decomposition = ordering_decomposition(&ordering, &g)?;
    let width = decomposition.width()?;
    debug_assert_eq!(width + 1, path_vertex_congestion(&ordering, &g)?);
    Ok(SharpEmbedding {
        ordering,
        decomposition,
        width,
        closed_form,
        exact_closed_form,
    })
}

/// Recognises graphs that are, label for label, a member of a family.
pub fn identify(g: &Graph) -> Option<FamilySpec> {
    let n = g.vertex_count();
    let mut candidates = Vec::new();
    for k in 1..=n / 2 {
        if n > 2 * k {
            candidates.push(FamilySpec::PathPower { n, k });
            candidates.push(FamilySpec::CyclePower { n, k });
            candidates.push(FamilySpec::CyclePowerMatched { n, k });
        }
    }
    let mut side = 3;
    while side * side <= n {
        for k in 4..=n {
            let total = grid_layout(side, k).total;
            if total == n {
                candidates.push(FamilySpec::GridCliques { n: side, k });
            }
            if total > n {
                break;
            }
        }
        side += 1;
    }
    candidates.push(FamilySpec::Complete { n: n.max(1) });
    for q in 1..=n / 2 {
        candidates.push(FamilySpec::CompleteBipartite { p: n - q, q });
    }
    candidates.into_iter().find(|s| generate(s).is_ok_and(|h| h == *g))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCheck {
    /// `pq/2 − 1`.
    pub bound: Rational,
    pub exact: usize,
    pub holds: bool,
}

/// Compares `pq/2 − 1` with the exact treewidth of `L(K_{p,q})`.
pub fn bipartite_lower_check(p: usize, q: usize) -> Result<BipartiteCheck> {
    let g = generate(&FamilySpec::CompleteBipartite { p, q })?;
    let exact = exact_treewidth(&line_graph(&g))?.width;
    let bound = Rational::new((p * q) as i64, 2) - Rational::from_integer(1);
    Ok(BipartiteCheck {
        bound,
        exact,
        holds: bound <= Rational::from_integer(exact as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_stats;

    fn edges1(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect()
    }

    #[test]
    fn path_power_edges() {
        let g = generate(&FamilySpec::PathPower { n: 5, k: 2 }).unwrap();
        let mut want = vec![(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (2, 4), (3, 5)];
        want.sort_unstable();
        assert_eq!(edges1(&g), want);
    }

    #[test]
    fn matched_degrees() {
        for (n, k) in [(8, 2), (9, 2), (10, 3), (11, 3)] {
            let g = generate(&FamilySpec::CyclePowerMatched { n, k }).unwrap();
            assert_eq!(g.min_degree(), 2 * k - 1, "n={n} k={k}");
        }
        assert_eq!(matched_removals(8, 2), vec![(1, 7), (2, 8), (3, 4), (5, 6)]);
        assert_eq!(matched_removals(9, 2), vec![(1, 8), (2, 9)]);
    }

    #[test]
    fn grid_cliques_degrees() {
        let g = generate(&FamilySpec::GridCliques { n: 3, k: 4 }).unwrap();
        assert_eq!(g.vertex_count(), 9 + 12 * 5);
        for v in 0..9 {
            assert_eq!(g.degree(v), 4);
        }
        assert_eq!(g.degree(0), 4);
        // Corner 1 carries two cliques: vertices 10..14 and 15..19.
        assert_eq!(g.degree(9), 5);
        assert_eq!(g.degree(10), 4);
        assert_eq!(g.degree(14), 5);
        let s = degree_stats(&g).unwrap();
        assert_eq!((s.min_degree, s.max_degree), (4, 5));
    }

    #[test]
    fn parameter_errors() {
        assert!(FamilySpec::from_parts("path-power", &[4, 2]).is_err());
        assert!(FamilySpec::from_parts("grid-cliques", &[3, 3]).is_err());
        assert!(FamilySpec::from_parts("complete-bipartite", &[2, 3]).is_err());
        assert!(matches!(
            FamilySpec::from_parts("hypercube", &[3]),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(sharp_embedding(&FamilySpec::Complete { n: 4 }).is_err());
    }

    #[test]
    fn sharp_widths() {
        let w = |s: FamilySpec| sharp_embedding(&s).unwrap().width;
        assert_eq!(w(FamilySpec::PathPower { n: 9, k: 2 }), 4);
        assert_eq!(w(FamilySpec::CyclePower { n: 8, k: 2 }), 7);
        assert_eq!(w(FamilySpec::CyclePowerMatched { n: 8, k: 2 }), 4);
        assert_eq!(w(FamilySpec::CyclePowerMatched { n: 9, k: 2 }), 5);
    }

    #[test]
    fn sharp_decompositions_validate() {
        for s in [
            FamilySpec::PathPower { n: 7, k: 3 },
            FamilySpec::CyclePower { n: 12, k: 3 },
            FamilySpec::CyclePowerMatched { n: 10, k: 3 },
            FamilySpec::GridCliques { n: 3, k: 4 },
        ] {
            let g = generate(&s).unwrap();
            let e = sharp_embedding(&s).unwrap();
            assert!(e.decomposition.validate(&g).unwrap().ok(), "{s}");
        }
    }

    #[test]
    fn grid_refinement_is_no_wider_than_blocks() {
        for (n, k) in [(3, 4), (4, 4), (3, 5)] {
            let g = generate(&FamilySpec::GridCliques { n, k }).unwrap();
            let blocks = grid_block_decomposition(n, k).unwrap();
            assert!(blocks.validate(&g).unwrap().ok());
            let fine = sharp_embedding(&FamilySpec::GridCliques { n, k }).unwrap();
            assert!(fine.width <= blocks.width().unwrap());
        }
    }

    #[test]
    fn identify_round_trip() {
        for s in [
            FamilySpec::PathPower { n: 9, k: 2 },
            FamilySpec::CyclePower { n: 8, k: 2 },
            FamilySpec::CyclePowerMatched { n: 8, k: 2 },
            FamilySpec::GridCliques { n: 3, k: 4 },
            FamilySpec::CompleteBipartite { p: 3, q: 2 },
        ] {
            assert_eq!(identify(&generate(&s).unwrap()), Some(s));
        }
        assert_eq!(
            "cycle-power 8 2".parse::<FamilySpec>().unwrap(),
            FamilySpec::CyclePower { n: 8, k: 2 }
        );
    }

    #[test]
    fn bipartite_small() {
        let c = bipartite_lower_check(2, 2).unwrap();
        assert_eq!((c.bound, c.exact, c.holds), (Rational::from_integer(1), 2, true));
        let c = bipartite_lower_check(3, 3).unwrap();
        assert_eq!(c.bound, Rational::new(7, 2));
        assert!(c.holds && c.exact >= 4);
    }
}
