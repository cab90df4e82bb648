//! Closed-form lower and upper bounds on `tw(L(G))` and `pw(L(G))`, the
//! constructions behind the upper bounds, and a report that lines them up
//! against exact values.

use std::fmt;

use num::{Integer, ToPrimitive};

use crate::congestion::{cutwidth_limited, min_path_congestion, min_tree_congestion_limited};
use crate::decomposition::{
    bags_from_base_nodes, expand_to_line, BaseNodeAssignment, PathDecomposition, Subject, TreeDecomposition,
};
use crate::error::{Error, Result};
use crate::exact::{exact_pathwidth, exact_treewidth, EXACT_LIMIT};
use crate::graph::{avg_degree, line_graph, minimal_dense_subgraph, Graph, MINIMAL_SUBGRAPH_LIMIT};
use crate::tree::Tree;
use crate::Rational;

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Smallest integer strictly above `x`.
fn strictly_above(x: Rational) -> i64 {
    x.floor().to_integer() + 1
}

/// The average-degree lower bound `d²/8 + 3d/4 − 2 < tw(L(G))`, evaluated on
/// the densest (minimal) induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvgDegreeBound {
    /// Average degree the bound was evaluated at; at least `d(G)`.
    pub d: Rational,
    /// The strict lower bound `B`.
    pub raw: Rational,
    /// `floor(B) + 1`, clamped at 0.
    pub integer: i64,
    /// Whether `d` came from an exhaustive densest-subgraph search (true) or
    /// from `d(G)` itself because the graph was too large.
    pub searched: bool,
}

pub fn avg_degree_formula(d: Rational) -> Rational {
    d * d / r(8) + frac(3, 4) * d - r(2)
}

pub fn avg_degree_lower_bound(g: &Graph) -> Result<AvgDegreeBound> {
    if g.vertex_count() == 0 {
        return Err(Error::UndefinedStatistics);
    }
    // The densest subgraph lives inside one component, so a per-component
    // search is exact whenever every component is small enough.
    let mut best: Option<(Rational, bool)> = None;
    for comp in g.components() {
        let h = g.induced(&comp);
        let (d, searched) = if h.vertex_count() <= MINIMAL_SUBGRAPH_LIMIT {
            (avg_degree(&minimal_dense_subgraph(&h)?.0), true)
        } else {
            (avg_degree(&h), false)
        };
        if best.is_none_or(|(b, _)| d > b) {
            best = Some((d, searched));
        }
    }
    let (d, searched) = best.expect("nonempty graph has a component");
    let raw = avg_degree_formula(d);
    Ok(AvgDegreeBound {
        d,
        raw,
        integer: strictly_above(raw).max(0),
        searched,
    })
}

/// `δ²/4 + δ − 1` for even `δ`, `δ²/4 + δ − 5/4` for odd `δ`, 0 below 2.
pub fn min_degree_formula(delta: usize) -> i64 {
    let d = delta as i64;
    if d < 2 {
        0
    } else if d.is_even() {
        d * d / 4 + d - 1
    } else {
        (d * d - 1) / 4 + d - 1
    }
}

/// The minimum-degree bound, maximised over components.
pub fn min_degree_lower_bound(g: &Graph) -> Result<i64> {
    if g.vertex_count() == 0 {
        return Err(Error::UndefinedStatistics);
    }
    Ok(g.components()
        .iter()
        .map(|c| min_degree_formula(g.induced(c).min_degree()))
        .max()
        .unwrap_or(0))
}

/// `⅔kΔ + ⅓(k−1)² + ⅓Δ − 1` with `k = tw(G) + 1`.
pub fn improved_tree_formula(tw_g: usize, delta: usize) -> Rational {
    let (k, d) = (tw_g as i64 + 1, delta as i64);
    frac(2, 3) * r(k * d) + frac(1, 3) * r((k - 1) * (k - 1)) + frac(1, 3) * r(d) - r(1)
}

/// `½kΔ + ½(k−1)² + ½Δ − 1` with `k = pw(G) + 1`.
pub fn improved_path_formula(pw_g: usize, delta: usize) -> Rational {
    let (k, d) = (pw_g as i64 + 1, delta as i64);
    frac(1, 2) * r(k * d) + frac(1, 2) * r((k - 1) * (k - 1)) + frac(1, 2) * r(d) - r(1)
}

/// `(w + 1)Δ − 1`, the plain expansion bound for either width.
pub fn expansion_formula(width_g: usize, delta: usize) -> i64 {
    (width_g as i64 + 1) * delta as i64 - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Target {
    TwLine,
    PwLine,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::TwLine => "tw(L)",
            Target::PwLine => "pw(L)",
        })
    }
}

/// One bound. `value` is the exact closed form; `effective` is the integer
/// it implies for the target (rounded inward, strict bounds bumped by one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub target: Target,
    pub value: Rational,
    pub effective: i64,
}

impl BoundEntry {
    fn lower(name: &'static str, target: Target, value: Rational) -> Self {
        BoundEntry {
            name,
            kind: BoundKind::Lower,
            target,
            value,
            effective: value.ceil().to_integer().max(0),
        }
    }

    fn upper(name: &'static str, target: Target, value: Rational) -> Self {
        BoundEntry {
            name,
            kind: BoundKind::Upper,
            target,
            value,
            effective: value.floor().to_integer().max(0),
        }
    }

    /// Lower bounds on `tw(L)` also bound `pw(L)`; upper bounds on `pw(L)`
    /// also bound `tw(L)`.
    pub fn applies_to(&self, t: Target) -> bool {
        self.target == t
            || matches!(
                (self.kind, self.target, t),
                (BoundKind::Lower, Target::TwLine, Target::PwLine) | (BoundKind::Upper, Target::PwLine, Target::TwLine)
            )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundsReport {
    pub entries: Vec<BoundEntry>,
    pub exact_tw: Option<usize>,
    pub exact_pw: Option<usize>,
    /// Free-form lines that are reported but never checked.
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    fn exact(&self, t: Target) -> Option<usize> {
        match t {
            Target::TwLine => self.exact_tw,
            Target::PwLine => self.exact_pw,
        }
    }

    /// Every lower bound is at most every upper bound of the same target, and
    /// both bracket the exact value when present.
    pub fn check(&self) -> std::result::Result<(), String> {
        for t in [Target::TwLine, Target::PwLine] {
            let lows = self
                .entries
                .iter()
                .filter(|e| e.kind == BoundKind::Lower && e.applies_to(t));
            let highs: Vec<_> = self
                .entries
                .iter()
                .filter(|e| e.kind == BoundKind::Upper && e.applies_to(t))
                .collect();
            for lo in lows {
                for hi in &highs {
                    if lo.effective > hi.effective {
                        return Err(format!(
                            "{} lower {} exceeds {} upper {} on {t}",
                            lo.name, lo.effective, hi.name, hi.effective
                        ));
                    }
                }
                if let Some(x) = self.exact(t) {
                    if lo.effective > x as i64 {
                        return Err(format!("{} lower {} exceeds exact {t} = {x}", lo.name, lo.effective));
                    }
                }
            }
            if let Some(x) = self.exact(t) {
                if let Some(hi) = highs.iter().find(|hi| hi.effective < x as i64) {
                    return Err(format!("{} upper {} is below exact {t} = {x}", hi.name, hi.effective));
                }
            }
        }
        Ok(())
    }
}

fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "bound {} {} {} {}", e.name, e.kind, e.target, e.effective)?;
        }
        for e in &self.entries {
            if !e.value.is_integer() || e.value.to_integer() != e.effective {
                writeln!(f, "c {} closed form {}", e.name, fmt_rational(&e.value))?;
            }
        }
        for n in &self.notes {
            writeln!(f, "c {n}")?;
        }
        if let Some(x) = self.exact_tw {
            writeln!(f, "exact tw(L) {x}")?;
        }
        if let Some(x) = self.exact_pw {
            writeln!(f, "exact pw(L) {x}")?;
        }
        Ok(())
    }
}

/// The five bounds that need only `tw(G)`, `pw(G)` and `Δ(G)`.
pub fn elementary_bounds(g: &Graph, tw_g: usize, pw_g: usize) -> Vec<BoundEntry> {
    let delta = g.max_degree() as i64;
    vec![
        BoundEntry::lower("half-tw", Target::TwLine, frac(tw_g as i64 + 1, 2) - r(1)),
        BoundEntry::lower("clique", Target::TwLine, r(delta - 1)),
        BoundEntry::lower("line-to-graph", Target::TwLine, r(tw_g as i64 - 1)),
        BoundEntry::upper("expand-tw", Target::TwLine, r(expansion_formula(tw_g, delta as usize))),
        BoundEntry::upper("expand-pw", Target::PwLine, r(expansion_formula(pw_g, delta as usize))),
    ]
}

/// Splits every node of degree above 3 into a chain of copies with the same
/// bag. Width and validity are unchanged.
pub fn split_to_subcubic(d: &TreeDecomposition) -> TreeDecomposition {
    let mut adj: Vec<Vec<usize>> = (0..d.tree.node_count()).map(|u| d.tree.neighbors(u).to_vec()).collect();
    let mut bags = d.bags.clone();
    let mut u = 0;
    while u < adj.len() {
        if adj[u].len() > 3 {
            let moved = adj[u].split_off(2);
            let copy = adj.len();
            adj.push(Vec::new());
            bags.push(bags[u].clone());
            for w in moved {
                for slot in adj[w].iter_mut().filter(|s| **s == u) {
                    *slot = copy;
                }
                adj[copy].push(w);
            }
            adj[u].push(copy);
            adj[copy].push(u);
        }
        u += 1;
    }
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        .collect();
    TreeDecomposition::new(d.subject, Tree::new(bags.len(), &edges), bags)
}

/// The tree edge chosen for one large vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSelection {
    pub vertex: usize,
    /// Endpoints of the chosen edge of the split input tree.
    pub edge: (usize, usize),
    pub alpha: usize,
    pub beta: usize,
    /// The guaranteed cap on `max(alpha, beta)`.
    pub cap: Rational,
}

#[derive(Debug, Clone)]
pub struct ImprovedConstruction {
    /// Decomposition of `L(G)`; an id-ordered path in path mode.
    pub decomposition: TreeDecomposition,
    pub base: BaseNodeAssignment,
    pub width: usize,
    /// Input width plus one.
    pub k: usize,
    pub path_mode: bool,
    /// Set when `Δ(G) < k − 1`; the output is then the plain expansion.
    pub fallback: bool,
    pub selections: Vec<EdgeSelection>,
    /// Closed-form bound the width is guaranteed to respect.
    pub closed_form: Rational,
}

/// Improved upper bound construction from a tree decomposition of `G`.
pub fn improved_upper_construction(g: &Graph, d: &TreeDecomposition) -> Result<ImprovedConstruction> {
    improved(g, d, false)
}

/// Path variant: the input path stays a path and the tighter cap applies.
pub fn improved_upper_construction_path(g: &Graph, d: &PathDecomposition) -> Result<ImprovedConstruction> {
    improved(g, &d.to_tree(), true)
}

fn improved(g: &Graph, d: &TreeDecomposition, path_mode: bool) -> Result<ImprovedConstruction> {
    if d.subject != Subject::Graph {
        return Err(Error::InvalidDecomposition("expected a decomposition of G".into()));
    }
    let report = d.validate(g)?;
    if !report.ok() {
        return Err(Error::InvalidDecomposition(report.to_string()));
    }
    let width = d.width()?;
    let k = width + 1;
    let delta = g.max_degree();
    let closed_form = if path_mode {
        improved_path_formula(width, delta)
    } else {
        improved_tree_formula(width, delta)
    };
    if delta < width {
        let out = expand_to_line(d, g)?;
        return Ok(ImprovedConstruction {
            width: out.width()?,
            decomposition: out,
            base: BaseNodeAssignment {
                base: vec![None; g.vertex_count()],
            },
            k,
            path_mode,
            fallback: true,
            selections: Vec::new(),
            closed_form: r(expansion_formula(width, delta)),
        });
    }
    let d = if path_mode { d.clone() } else { split_to_subcubic(d) };
    let tree = &d.tree;
    let nodes = tree.node_count();
    let holds: Vec<Vec<bool>> = {
        let mut h = vec![vec![false; nodes]; g.vertex_count()];
        for (u, bag) in d.bags.iter().enumerate() {
            for &v in bag {
                h[v][u] = true;
            }
        }
        h
    };

    let mut base: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut selections = Vec::new();
    // Selected tree-edge index per large vertex.
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            continue;
        }
        let in_tv = &holds[v];
        if g.degree(v) < k {
            base[v] = (0..nodes).find(|&u| in_tv[u]);
            continue;
        }
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for (i, &(x, y)) in tree.edges().iter().enumerate() {
            if !(in_tv[x] && in_tv[y]) {
                continue;
            }
            // Nodes of T_v on x's side once (x, y) is removed.
            let mut side = vec![false; nodes];
            side[x] = true;
            let mut stack = vec![x];
            while let Some(u) = stack.pop() {
                for &w in tree.neighbors(u) {
                    if in_tv[w] && !side[w] && !(u == x && w == y) {
                        side[w] = true;
                        stack.push(w);
                    }
                }
            }
            let (mut alpha, mut beta) = (0, 0);
            for &w in g.neighbors(v) {
                let occ = (0..nodes).filter(|&u| in_tv[u] && holds[w][u]);
                let (mut a, mut b) = (false, false);
                for u in occ {
                    if side[u] {
                        a = true;
                    } else {
                        b = true;
                    }
                }
                alpha += a as usize;
                beta += b as usize;
            }
            let m = alpha.max(beta);
            if best.is_none_or(|(bm, ..)| m < bm) {
                best = Some((m, i, alpha, beta));
            }
        }
        let (m, i, alpha, beta) =
            best.ok_or_else(|| Error::Invariant(format!("large vertex {} has a single-node subtree", v + 1)))?;
        let dv = g.degree(v) as i64;
        let cap = if path_mode {
            frac(dv + k as i64 - 1, 2)
        } else {
            frac(2 * dv + k as i64 - 1, 3)
        };
        if r(m as i64) > cap {
            return Err(Error::Invariant(format!(
                "no tree edge splits the neighbours of vertex {} within {}",
                v + 1,
                fmt_rational(&cap)
            )));
        }
        selections.push(EdgeSelection {
            vertex: v,
            edge: tree.edges()[i],
            alpha,
            beta,
            cap,
        });
        chosen.push((i, v));
    }

    // Subdivide: on each chosen edge, a chain ordered by vertex id starting
    // next to the child end (rooted at node 0).
    let (parent, _) = tree.rooted(0);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = nodes;
    for (i, &(x, y)) in tree.edges().iter().enumerate() {
        let mut on: Vec<usize> = chosen.iter().filter(|&&(j, _)| j == i).map(|&(_, v)| v).collect();
        if on.is_empty() {
            edges.push((x, y));
            continue;
        }
        on.sort_unstable();
        let (child, par) = if parent[y] == x { (y, x) } else { (x, y) };
        let mut prev = child;
        for v in on {
            base[v] = Some(next);
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, par));
    }
    let mut tree2 = Tree::new(next, &edges);
    if path_mode {
        let (renumbered, map) = renumber_path(&tree2);
        tree2 = renumbered;
        for b in base.iter_mut().flatten() {
            *b = map[*b];
        }
    }
    let bags = bags_from_base_nodes(&tree2, &base, g);
    let out = TreeDecomposition::new(Subject::Line, tree2, bags);
    let w = out.width()?;
    if r(w as i64) > closed_form {
        return Err(Error::Invariant(format!(
            "construction width {w} exceeds {}",
            fmt_rational(&closed_form)
        )));
    }
    Ok(ImprovedConstruction {
        decomposition: out,
        base: BaseNodeAssignment { base },
        width: w,
        k,
        path_mode,
        fallback: false,
        selections,
        closed_form,
    })
}

/// Relabels a path so ids follow path order, starting from its lowest-id end.
fn renumber_path(t: &Tree) -> (Tree, Vec<usize>) {
    let n = t.node_count();
    let start = (0..n).find(|&u| t.degree(u) <= 1).unwrap_or(0);
    let (_, order) = t.rooted(start);
    let mut map = vec![0; n];
    for (i, &u) in order.iter().enumerate() {
        map[u] = i;
    }
    (Tree::path(n), map)
}

/// Line decomposition of a tree over the tree itself, with each vertex its
/// own base node. Its width is `Δ − 1`.
pub fn tree_line_decomposition(t: &Graph) -> Result<TreeDecomposition> {
    if !t.is_tree() {
        return Err(Error::InvalidGraph("input is not a tree".into()));
    }
    if t.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let tree = Tree::new(t.vertex_count(), t.edges());
    let base: Vec<Option<usize>> = (0..t.vertex_count()).map(Some).collect();
    let bags = bags_from_base_nodes(&tree, &base, t);
    Ok(TreeDecomposition::new(Subject::Line, tree, bags))
}

/// Exact `tw(L(C))` for one component, by the cheapest available oracle.
fn exact_tw_line(c: &Graph) -> Result<usize> {
    if c.edge_count() <= EXACT_LIMIT {
        Ok(exact_treewidth(&line_graph(c))?.width)
    } else {
        Ok(min_tree_congestion_limited(c, crate::congestion::TREE_CONGESTION_LIMIT)?.value - 1)
    }
}

fn exact_pw_line(c: &Graph) -> Result<usize> {
    if c.edge_count() <= EXACT_LIMIT {
        Ok(exact_pathwidth(&line_graph(c))?.width)
    } else {
        Ok(min_path_congestion(c)?.value - 1)
    }
}

/// Every bound, computed per component and maximised, optionally with exact
/// values. Fails if a component exceeds the solver limits.
pub fn bounds_report(g: &Graph, compute_exact: bool) -> Result<BoundsReport> {
    if g.vertex_count() == 0 {
        return Err(Error::UndefinedStatistics);
    }
    let mut per: Vec<Vec<BoundEntry>> = Vec::new();
    let mut exact_tw = 0usize;
    let mut exact_pw = 0usize;
    let mut notes = Vec::new();
    for comp in g.components() {
        let c = g.induced(&comp);
        if c.edge_count() == 0 {
            continue;
        }
        let tw_g = exact_treewidth(&c)?.width;
        let pw_g = exact_pathwidth(&c)?.width;
        let delta = c.max_degree();
        let mut entries = Vec::new();
        let avg = avg_degree_lower_bound(&c)?;
        entries.push(BoundEntry {
            name: "avg-degree",
            kind: BoundKind::Lower,
            target: Target::TwLine,
            value: avg.raw,
            effective: avg.integer,
        });
        entries.push(BoundEntry::lower(
            "min-degree",
            Target::TwLine,
            r(min_degree_formula(c.min_degree())),
        ));
        entries.extend(elementary_bounds(&c, tw_g, pw_g));
        entries.push(BoundEntry::upper(
            "improved-tw",
            Target::TwLine,
            improved_tree_formula(tw_g, delta),
        ));
        entries.push(BoundEntry::upper(
            "improved-pw",
            Target::PwLine,
            improved_path_formula(pw_g, delta),
        ));

        let td = exact_treewidth(&c)?.decomposition;
        let tree_build = improved_upper_construction(&c, &td)?;
        entries.push(BoundEntry::upper(
            "improved-tw-built",
            Target::TwLine,
            r(tree_build.width as i64),
        ));
        let pd = exact_pathwidth(&c)?.decomposition;
        let path_build = improved_upper_construction_path(&c, &pd)?;
        entries.push(BoundEntry::upper(
            "improved-pw-built",
            Target::PwLine,
            r(path_build.width as i64),
        ));
        if tree_build.fallback || path_build.fallback {
            notes.push(format!(
                "component of vertex {}: max degree below width, improved construction fell back to expansion",
                comp[0] + 1
            ));
        }
        if delta >= 2 {
            let cw = cutwidth_limited(&c, crate::congestion::PATH_DP_LIMIT)?.value as i64;
            entries.push(BoundEntry::lower("golovach", Target::PwLine, r(cw)));
            entries.push(BoundEntry::upper(
                "golovach",
                Target::PwLine,
                r(cw + (delta / 2) as i64 - 1),
            ));
        }
        let conj = frac(tw_g as i64 + 1, 2) * r(delta as i64) - r(1);
        notes.push(format!(
            "component of vertex {}: conjectured tw(L) <= {} (not checked)",
            comp[0] + 1,
            fmt_rational(&conj)
        ));
        if compute_exact {
            exact_tw = exact_tw.max(exact_tw_line(&c)?);
            exact_pw = exact_pw.max(exact_pw_line(&c)?);
        }
        per.push(entries);
    }
    let entries = merge_components(per);
    let report = BoundsReport {
        entries,
        exact_tw: compute_exact.then_some(exact_tw),
        exact_pw: compute_exact.then_some(exact_pw),
        notes,
    };
    report.check().map_err(Error::Invariant)?;
    Ok(report)
}

/// Maxes each named bound over components; an edgeless graph keeps the
/// trivial zero entries.
fn merge_components(per: Vec<Vec<BoundEntry>>) -> Vec<BoundEntry> {
    let mut out: Vec<BoundEntry> = Vec::new();
    for entries in per {
        for e in entries {
            match out.iter_mut().find(|o| o.name == e.name && o.kind == e.kind) {
                Some(o) => {
                    if e.value > o.value {
                        o.value = e.value;
                    }
                    o.effective = o.effective.max(e.effective);
                }
                None => out.push(e),
            }
        }
    }
    if out.is_empty() {
        out.push(BoundEntry::lower("avg-degree", Target::TwLine, r(0)));
        out.push(BoundEntry::lower("min-degree", Target::TwLine, r(0)));
    }
    out
}

/// Rational as `f64`, for display.
pub fn approx(x: Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
