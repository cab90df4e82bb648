//! Tree and path decompositions, their validation, and the transformations
//! between decompositions of `G` and of `L(G)`.
//!
//! Bags hold 0-indexed elements: vertex ids for decompositions of `G`,
//! [`EdgeId`]s for decompositions of `L(G)`. Every bag is kept sorted.

use std::fmt;

use crate::congestion::LeafEmbedding;
use crate::error::{Error, Result};
use crate::graph::{line_graph, EdgeId, Graph};
use crate::tree::Tree;

/// Which graph a decomposition is of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subject {
    /// Bags hold vertices of `G`.
    Graph,
    /// Bags hold edges of `G`, i.e. vertices of `L(G)`.
    Line,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub subject: Subject,
    pub tree: Tree,
    pub bags: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub subject: Subject,
    pub bags: Vec<Vec<usize>>,
}

/// `base[v]` is the base node of vertex `v`; `None` for isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseNodeAssignment {
    pub base: Vec<Option<usize>>,
}

/// First violated decomposition condition, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotATree,
    Missing { element: usize },
    Disconnected { element: usize },
    Uncovered { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: Subject,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let noun = match self.subject {
            Subject::Graph => "vertex",
            Subject::Line => "edge-id",
        };
        match &self.violation {
            None => write!(f, "valid"),
            Some(Violation::NotATree) => write!(f, "invalid: underlying structure is not a tree"),
            Some(Violation::Missing { element }) => {
                write!(f, "invalid: {noun} {} appears in no bag", element + 1)
            }
            Some(Violation::Disconnected { element }) => {
                write!(f, "invalid: bags containing {noun} {} are not connected", element + 1)
            }
            Some(Violation::Uncovered { a, b }) => match self.subject {
                Subject::Graph => write!(f, "invalid: edge {}-{} uncovered", a + 1, b + 1),
                Subject::Line => write!(f, "invalid: incident edge-ids {} and {} share no bag", a + 1, b + 1),
            },
        }
    }
}

fn sorted_bags(bags: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    bags.into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b.dedup();
            b
        })
        .collect()
}

fn max_bag_width(bags: &[Vec<usize>]) -> Result<usize> {
    bags.iter()
        .map(Vec::len)
        .max()
        .map(|m| m.saturating_sub(1))
        .ok_or(Error::NoBags)
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated. Panics if `bags.len()` differs from
    /// the tree's node count.
    pub fn new(subject: Subject, tree: Tree, bags: Vec<Vec<usize>>) -> Self {
        assert_eq!(tree.node_count(), bags.len(), "one bag per tree node");
        TreeDecomposition {
            subject,
            tree,
            bags: sorted_bags(bags),
        }
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> Result<usize> {
        max_bag_width(&self.bags)
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Reinterprets the decomposition as a path when its tree is a path with
    /// ids in path order.
    pub fn as_path(&self) -> Option<PathDecomposition> {
        self.tree.is_id_ordered_path().then(|| PathDecomposition {
            subject: self.subject,
            bags: self.bags.clone(),
        })
    }

    pub fn validate(&self, g: &Graph) -> Result<ValidationReport> {
        validate(self, g)
    }
}

impl PathDecomposition {
    pub fn new(subject: Subject, bags: Vec<Vec<usize>>) -> Self {
        PathDecomposition {
            subject,
            bags: sorted_bags(bags),
        }
    }

    pub fn width(&self) -> Result<usize> {
        max_bag_width(&self.bags)
    }

    pub fn to_tree(&self) -> TreeDecomposition {
        TreeDecomposition {
            subject: self.subject,
            tree: Tree::path(self.bags.len()),
            bags: self.bags.clone(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<ValidationReport> {
        validate(&self.to_tree(), g)
    }
}

/// Checks the three decomposition conditions against `g` (or `L(g)` for
/// line decompositions). Out-of-range bag elements are an error rather than
/// a violation.
pub fn validate(d: &TreeDecomposition, g: &Graph) -> Result<ValidationReport> {
    let line;
    let target = match d.subject {
        Subject::Graph => g,
        Subject::Line => {
            line = line_graph(g);
            &line
        }
    };
    validate_against(d, target)
}

/// Validation against an explicit target graph whose vertices are the bag
/// elements.
pub fn validate_against(d: &TreeDecomposition, target: &Graph) -> Result<ValidationReport> {
    let n = target.vertex_count();
    for (node, bag) in d.bags.iter().enumerate() {
        if let Some(&e) = bag.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange {
                node: node + 1,
                element: e + 1,
                max: n,
            });
        }
    }
    let report = |violation| {
        Ok(ValidationReport {
            subject: d.subject,
            violation: Some(violation),
        })
    };
    if d.bags.len() != d.tree.node_count() || !d.tree.is_tree() {
        return report(Violation::NotATree);
    }
    let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, bag) in d.bags.iter().enumerate() {
        for &e in bag {
            nodes_of[e].push(node);
        }
    }
    if let Some(e) = (0..n).find(|&e| nodes_of[e].is_empty()) {
        return report(Violation::Missing { element: e });
    }
    // The nodes holding e induce a subtree iff they span |nodes| - 1 tree edges.
    let mut inner_edges = vec![0usize; n];
    for &(a, b) in d.tree.edges() {
        for e in intersection(&d.bags[a], &d.bags[b]) {
            inner_edges[e] += 1;
        }
    }
    if let Some(e) = (0..n).find(|&e| inner_edges[e] + 1 != nodes_of[e].len()) {
        return report(Violation::Disconnected { element: e });
    }
    for &(a, b) in target.edges() {
        if intersection(&nodes_of[a], &nodes_of[b]).next().is_none() {
            return report(Violation::Uncovered { a, b });
        }
    }
    Ok(ValidationReport {
        subject: d.subject,
        violation: None,
    })
}

/// Common elements of two sorted slices.
fn intersection<'a>(a: &'a [usize], b: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    let mut i = 0;
    let mut j = 0;
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    return Some(a[i - 1]);
                }
            }
        }
        None
    })
}

fn require_valid(d: &TreeDecomposition, g: &Graph, subject: Subject) -> Result<()> {
    if d.subject != subject {
        return Err(Error::InvalidDecomposition(format!(
            "expected a decomposition of {}, got one of {}",
            subject_name(subject),
            subject_name(d.subject)
        )));
    }
    let report = validate(d, g)?;
    if report.ok() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(report.to_string()))
    }
}

fn subject_name(s: Subject) -> &'static str {
    match s {
        Subject::Graph => "G",
        Subject::Line => "L(G)",
    }
}

/// Replaces every bag by the set of edges incident to a vertex in it. The
/// tree is unchanged, so path inputs stay paths.
pub fn expand_to_line(d: &TreeDecomposition, g: &Graph) -> Result<TreeDecomposition> {
    require_valid(d, g, Subject::Graph)?;
    let bags = d
        .bags
        .iter()
        .map(|bag| bag.iter().flat_map(|&v| g.incident_edges(v)).collect())
        .collect();
    Ok(TreeDecomposition::new(Subject::Line, d.tree.clone(), bags))
}

pub fn expand_path_to_line(p: &PathDecomposition, g: &Graph) -> Result<PathDecomposition> {
    let td = expand_to_line(&p.to_tree(), g)?;
    Ok(PathDecomposition {
        subject: Subject::Line,
        bags: td.bags,
    })
}

/// Bags of a line decomposition determined by base nodes: node `u` holds
/// edge `vw` iff `u` lies on the tree path between `base[v]` and `base[w]`.
pub fn bags_from_base_nodes(tree: &Tree, base: &[Option<usize>], g: &Graph) -> Vec<Vec<EdgeId>> {
    let mut bags = vec![Vec::new(); tree.node_count()];
    if tree.node_count() == 0 {
        return bags;
    }
    let rooted = tree.rooted_at(0);
    for (id, &(v, w)) in g.edges().iter().enumerate() {
        let (bv, bw) = (
            base[v].expect("non-isolated vertex has a base node"),
            base[w].expect("non-isolated vertex has a base node"),
        );
        for u in rooted.path(bv, bw) {
            bags[u].push(id);
        }
    }
    bags
}

/// A line decomposition in binary-tree normal form: base nodes are exactly
/// the leaves, one per non-isolated vertex, and each edge sits on exactly
/// the path between its endpoints' base nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub decomposition: TreeDecomposition,
    pub base: BaseNodeAssignment,
    /// Root of the binary tree; always node 0.
    pub root: usize,
    /// For every output node, the input node whose bag contains its bag.
    pub origin: Vec<usize>,
}

/// Turns any valid decomposition of `L(g)` into normal form without
/// increasing the width.
///
/// Base nodes are chosen as the lowest-id node whose bag holds every edge at
/// the vertex; bags are rebuilt from base-node paths (each a subset of the
/// original bag); base nodes are moved onto fresh leaves; leaves that host no
/// vertex are pruned; and the tree is rooted and made binary by splitting
/// wide nodes (children in id order) and contracting single-child nodes.
pub fn normalize_line_decomposition(d: &TreeDecomposition, g: &Graph) -> Result<NormalForm> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    require_valid(d, g, Subject::Line)?;
    let n = g.vertex_count();
    let original = d.node_count();

    let mut base_node = vec![None; n];
    for v in g.non_isolated() {
        let inc = g.incident_edges(v);
        let node = (0..original)
            .find(|&u| inc.iter().all(|e| d.bags[u].binary_search(e).is_ok()))
            .ok_or_else(|| Error::Invariant(format!("no bag holds every edge at vertex {}", v + 1)))?;
        base_node[v] = Some(node);
    }

    // Working tree: original nodes plus one fresh leaf per non-isolated vertex.
    let mut adj: Vec<Vec<usize>> = (0..original).map(|u| d.tree.neighbors(u).to_vec()).collect();
    let mut origin: Vec<usize> = (0..original).collect();
    let mut leaf_of = vec![None; n];
    for v in 0..n {
        if let Some(b) = base_node[v] {
            let leaf = adj.len();
            adj.push(vec![b]);
            adj[b].push(leaf);
            origin.push(b);
            leaf_of[v] = Some(leaf);
        }
    }
    let total = adj.len();
    let mut is_base = vec![false; total];
    for l in leaf_of.iter().flatten() {
        is_base[*l] = true;
    }

    // Prune leaves hosting no vertex.
    let mut alive = vec![true; total];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut stack: Vec<usize> = (0..total).filter(|&u| degree[u] <= 1 && !is_base[u]).collect();
    while let Some(u) = stack.pop() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for &w in &adj[u] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 && !is_base[w] {
                    stack.push(w);
                }
            }
        }
    }
    for (u, list) in adj.iter_mut().enumerate() {
        if alive[u] {
            list.retain(|&w| alive[w]);
        } else {
            list.clear();
        }
    }

    let base_leaves: Vec<usize> = leaf_of.iter().flatten().copied().collect();
    let root = if base_leaves.len() == 2 {
        base_leaves[0]
    } else {
        (0..total)
            .find(|&u| alive[u] && adj[u].len() >= 2)
            .expect("three or more leaves imply an internal node")
    };

    // Orient away from the root; children in id order.
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut parent = vec![usize::MAX; total];
    let mut queue = std::collections::VecDeque::from([root]);
    let mut seen = vec![false; total];
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        let mut kids: Vec<usize> = adj[u].iter().copied().filter(|&w| !seen[w]).collect();
        kids.sort_unstable();
        for &w in &kids {
            seen[w] = true;
            parent[w] = u;
            queue.push_back(w);
        }
        children[u] = kids;
    }

    // Split nodes with three or more children.
    let mut u = 0;
    while u < children.len() {
        if children[u].len() > 2 {
            let rest = children[u].split_off(1);
            let copy = children.len();
            children.push(rest);
            parent.push(u);
            origin.push(origin[u]);
            for &c in &children[copy] {
                parent[c] = copy;
            }
            children[u].push(copy);
        }
        u += 1;
    }

    // Contract single-child nodes; a single-child root hands over to its child.
    let mut root = root;
    if base_leaves.len() == 2 {
        // Degenerate case: the two base leaves joined directly.
        let (a, b) = (base_leaves[0], base_leaves[1]);
        children = vec![Vec::new(); children.len()];
        children[a] = vec![b];
        root = a;
    } else {
        loop {
            if children[root].len() == 1 {
                root = children[root][0];
                continue;
            }
            break;
        }
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for i in 0..children[u].len() {
                let mut c = children[u][i];
                while children[c].len() == 1 {
                    c = children[c][0];
                }
                children[u][i] = c;
                stack.push(c);
            }
        }
    }

    // Renumber in BFS order from the root.
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        order.extend(children[u].iter().copied());
    }
    let mut new_id = vec![usize::MAX; children.len()];
    for (k, &u) in order.iter().enumerate() {
        new_id[u] = k;
    }
    let mut edges = Vec::new();
    for &u in &order {
        for &c in &children[u] {
            edges.push((new_id[u], new_id[c]));
        }
    }
    let tree = Tree::new(order.len(), &edges);
    let base: Vec<Option<usize>> = leaf_of.iter().map(|l| l.map(|l| new_id[l])).collect();
    let bags = bags_from_base_nodes(&tree, &base, g);
    let origin = order.iter().map(|&u| origin[u]).collect();
    Ok(NormalForm {
        decomposition: TreeDecomposition::new(Subject::Line, tree, bags),
        base: BaseNodeAssignment { base },
        root: 0,
        origin,
    })
}

/// Checks the normal form: rooted binary tree (every non-leaf has exactly two
/// children; a two-node tree is accepted for single-edge graphs), base nodes
/// injective onto exactly the leaves, and every bag equal to its base-node
/// path contents. Returns a description of the first failure.
pub fn check_normal_form(nf: &NormalForm, g: &Graph) -> std::result::Result<(), String> {
    let d = &nf.decomposition;
    let tree = &d.tree;
    if !tree.is_tree() {
        return Err("underlying structure is not a tree".into());
    }
    let (parent, order) = tree.rooted(nf.root);
    let mut child_count = vec![0usize; tree.node_count()];
    for &u in &order[1..] {
        child_count[parent[u]] += 1;
    }
    let leaves: Vec<usize> = (0..tree.node_count()).filter(|&u| child_count[u] == 0).collect();
    let two_node = tree.node_count() == 2 && g.edge_count() == 1;
    if !two_node {
        if let Some(u) = (0..tree.node_count()).find(|&u| child_count[u] != 0 && child_count[u] != 2) {
            return Err(format!("node {} has {} children", u + 1, child_count[u]));
        }
    }
    let mut image: Vec<usize> = Vec::new();
    for v in 0..g.vertex_count() {
        match (nf.base.base[v], g.degree(v)) {
            (None, 0) => {}
            (Some(_), 0) => return Err(format!("isolated vertex {} has a base node", v + 1)),
            (None, _) => return Err(format!("vertex {} has no base node", v + 1)),
            (Some(b), _) => image.push(b),
        }
    }
    image.sort_unstable();
    if image.windows(2).any(|w| w[0] == w[1]) {
        return Err("base assignment is not injective".into());
    }
    let expected_leaves: Vec<usize> = if two_node { vec![0, 1] } else { leaves };
    if image != expected_leaves {
        return Err("base nodes are not exactly the leaves".into());
    }
    let expected = sorted_bags(bags_from_base_nodes(tree, &nf.base.base, g));
    if let Some(u) = (0..tree.node_count()).find(|&u| expected[u] != d.bags[u]) {
        return Err(format!("bag {} differs from its base-node path contents", u + 1));
    }
    Ok(())
}

/// Builds a decomposition of `g` of width at most `width(d) + 1` from a
/// decomposition `d` of `L(g)`.
///
/// After normalising, every edge `vw` (with `v < w`) places `v` on its path
/// except at `b(w)`, which gets `w`. Tree edges that separate both endpoints
/// of more than one graph edge are subdivided until each separates at most
/// one; then, rooted at node 0, the parent-side endpoint of each separated
/// edge is added to the child bag. Isolated vertices get singleton bags
/// hanging off node 0.
pub fn line_to_graph_decomposition(d: &TreeDecomposition, g: &Graph) -> Result<TreeDecomposition> {
    let nf = normalize_line_decomposition(d, g)?;
    let base = &nf.base.base;
    let tree = &nf.decomposition.tree;
    let rooted = tree.rooted_at(0);
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); tree.node_count()];
    for &(v, w) in g.edges() {
        let (bv, bw) = (base[v].unwrap(), base[w].unwrap());
        let path = rooted.path(bv, bw);
        for &u in &path[..path.len() - 1] {
            bags[u].push(v);
        }
        bags[bw].push(w);
    }
    bags = sorted_bags(bags);

    let contains = |bag: &Vec<usize>, x: usize| bag.binary_search(&x).is_ok();
    // (tree edge index, parent-side-in-edge-order endpoint, other endpoint)
    let separated = |bags: &Vec<Vec<usize>>, edges: &Vec<(usize, usize)>| {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for &(v, w) in g.edges() {
            if bags.iter().any(|b| contains(b, v) && contains(b, w)) {
                continue;
            }
            let found = edges.iter().enumerate().find_map(|(i, &(x, y))| {
                let (bx, by) = (&bags[x], &bags[y]);
                if contains(bx, v) && !contains(by, v) && contains(by, w) && !contains(bx, w) {
                    Some((i, v, w))
                } else if contains(bx, w) && !contains(by, w) && contains(by, v) && !contains(bx, v) {
                    Some((i, w, v))
                } else {
                    None
                }
            });
            out.push(found.ok_or_else(|| {
                Error::Invariant(format!(
                    "edge {}-{} is neither covered nor separated by a single tree edge",
                    v + 1,
                    w + 1
                ))
            })?);
        }
        Ok::<_, Error>(out)
    };

    loop {
        let sep = separated(&bags, &edges)?;
        let mut counts = vec![0usize; edges.len()];
        for &(i, _, _) in &sep {
            counts[i] += 1;
        }
        let Some(&(i, a, b)) = sep.iter().find(|&&(i, _, _)| counts[i] >= 2) else {
            break;
        };
        // `a` lies on the x side of edge (x, y), `b` on the y side.
        let (x, y) = edges[i];
        let mut fresh: Vec<usize> = bags[x].iter().copied().filter(|&t| t != a).collect();
        fresh.push(b);
        fresh.sort_unstable();
        let id = bags.len();
        bags.push(fresh);
        edges[i] = (x, id);
        edges.push((id, y));
    }

    let sep = separated(&bags, &edges)?;
    let tree = Tree::new(bags.len(), &edges);
    let (parent, _) = tree.rooted(0);
    for &(i, a, b) in &sep {
        let (x, y) = edges[i];
        if parent[y] == x {
            bags[y].push(a);
        } else {
            bags[x].push(b);
        }
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            let id = bags.len();
            bags.push(vec![v]);
            edges.push((0, id));
        }
    }
    let out = TreeDecomposition::new(Subject::Graph, Tree::new(bags.len(), &edges), bags);
    let report = validate(&out, g)?;
    if !report.ok() {
        return Err(Error::Invariant(format!("constructed decomposition is {report}")));
    }
    Ok(out)
}

/// The line decomposition equivalent to a leaf embedding: node `u` holds
/// edge `vw` iff `u` is on the tree path between the images of `v` and `w`.
pub fn decomposition_from_embedding(e: &LeafEmbedding, g: &Graph) -> Result<(TreeDecomposition, BaseNodeAssignment)> {
    e.check(g)?;
    let bags = bags_from_base_nodes(&e.tree, &e.assignment, g);
    Ok((
        TreeDecomposition::new(Subject::Line, e.tree.clone(), bags),
        BaseNodeAssignment {
            base: e.assignment.clone(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_one_indexed(n, edges).unwrap()
    }

    fn td(subject: Subject, edges: &[(usize, usize)], bags: Vec<Vec<usize>>) -> TreeDecomposition {
        TreeDecomposition::new(subject, Tree::new(bags.len(), edges), bags)
    }

    #[test]
    fn validate_examples() {
        let k3 = g1(3, &[(1, 2), (1, 3), (2, 3)]);
        let d = td(Subject::Graph, &[], vec![vec![0, 1, 2]]);
        assert!(d.validate(&k3).unwrap().ok());
        assert_eq!(d.width().unwrap(), 2);

        let k2 = g1(2, &[(1, 2)]);
        let d = td(Subject::Graph, &[(0, 1)], vec![vec![0], vec![1]]);
        let r = d.validate(&k2).unwrap();
        assert_eq!(r.violation, Some(Violation::Uncovered { a: 0, b: 1 }));
        assert_eq!(r.to_string(), "invalid: edge 1-2 uncovered");

        let g = g1(3, &[(1, 2), (1, 3)]);
        let d = td(Subject::Graph, &[(0, 1)], vec![vec![0, 1], vec![0, 2]]);
        assert!(d.validate(&g).unwrap().ok());
    }

    #[test]
    fn validate_detects_each_condition() {
        let p3 = g1(3, &[(1, 2), (2, 3)]);
        let missing = td(Subject::Graph, &[], vec![vec![0, 1]]);
        assert_eq!(
            missing.validate(&p3).unwrap().violation,
            Some(Violation::Missing { element: 2 })
        );
        let split = td(Subject::Graph, &[(0, 1), (1, 2)], vec![vec![0, 1], vec![2], vec![1, 2]]);
        assert_eq!(
            split.validate(&p3).unwrap().violation,
            Some(Violation::Disconnected { element: 1 })
        );
        let cyclic = td(
            Subject::Graph,
            &[(0, 1), (1, 2), (2, 0)],
            vec![vec![0, 1], vec![1, 2], vec![1]],
        );
        assert_eq!(cyclic.validate(&p3).unwrap().violation, Some(Violation::NotATree));
        let out_of_range = td(Subject::Graph, &[], vec![vec![0, 1, 2, 3]]);
        assert!(matches!(
            out_of_range.validate(&p3),
            Err(Error::ElementOutOfRange { element: 4, .. })
        ));
    }

    #[test]
    fn width_examples() {
        let d = PathDecomposition::new(Subject::Graph, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(d.width().unwrap(), 1);
        let empty = PathDecomposition::new(Subject::Graph, vec![]);
        assert_eq!(empty.width(), Err(Error::NoBags));
    }

    #[test]
    fn expand_examples() {
        let star = g1(4, &[(1, 2), (1, 3), (1, 4)]);
        let d = td(
            Subject::Graph,
            &[(0, 1), (0, 2)],
            vec![vec![0, 1], vec![0, 2], vec![0, 3]],
        );
        let l = expand_to_line(&d, &star).unwrap();
        assert!(l.validate(&star).unwrap().ok());
        assert_eq!(l.width().unwrap(), 2);

        let k3 = g1(3, &[(1, 2), (1, 3), (2, 3)]);
        let l = expand_to_line(&td(Subject::Graph, &[], vec![vec![0, 1, 2]]), &k3).unwrap();
        assert_eq!(l.bags, vec![vec![0, 1, 2]]);

        let p4 = g1(4, &[(1, 2), (2, 3), (3, 4)]);
        let pd = PathDecomposition::new(Subject::Graph, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let l = expand_path_to_line(&pd, &p4).unwrap();
        assert_eq!(l.bags, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
        assert!(l.validate(&p4).unwrap().ok());
    }

    #[test]
    fn expand_rejects_invalid_input() {
        let k2 = g1(2, &[(1, 2)]);
        let d = td(Subject::Graph, &[(0, 1)], vec![vec![0], vec![1]]);
        assert!(matches!(expand_to_line(&d, &k2), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn normalize_k3_single_bag() {
        let k3 = g1(3, &[(1, 2), (1, 3), (2, 3)]);
        let d = td(Subject::Line, &[], vec![vec![0, 1, 2]]);
        let nf = normalize_line_decomposition(&d, &k3).unwrap();
        check_normal_form(&nf, &k3).unwrap();
        assert_eq!(nf.decomposition.width().unwrap(), 2);
        assert!(nf.decomposition.validate(&k3).unwrap().ok());
    }

    #[test]
    fn normalize_single_edge_graph() {
        let p3 = g1(3, &[(1, 2), (2, 3)]);
        let d = td(Subject::Line, &[(0, 1)], vec![vec![0], vec![0, 1]]);
        let nf = normalize_line_decomposition(&d, &p3).unwrap();
        check_normal_form(&nf, &p3).unwrap();
        assert_eq!(nf.decomposition.width().unwrap(), 1);

        let k2 = g1(2, &[(1, 2)]);
        let d = td(Subject::Line, &[], vec![vec![0]]);
        let nf = normalize_line_decomposition(&d, &k2).unwrap();
        check_normal_form(&nf, &k2).unwrap();
        assert_eq!(nf.decomposition.node_count(), 2);
    }

    #[test]
    fn normalize_is_idempotent_on_width() {
        let k4 = g1(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let d = td(Subject::Line, &[], vec![(0..6).collect()]);
        let nf = normalize_line_decomposition(&d, &k4).unwrap();
        let again = normalize_line_decomposition(&nf.decomposition, &k4).unwrap();
        check_normal_form(&again, &k4).unwrap();
        assert_eq!(again.decomposition.width().unwrap(), nf.decomposition.width().unwrap());
    }

    #[test]
    fn normalize_rejects_edgeless() {
        let g = Graph::empty(2);
        let d = td(Subject::Line, &[], vec![vec![]]);
        assert_eq!(normalize_line_decomposition(&d, &g), Err(Error::Edgeless));
    }

    #[test]
    fn line_to_graph_examples() {
        let k3 = g1(3, &[(1, 2), (1, 3), (2, 3)]);
        let d = td(Subject::Line, &[], vec![vec![0, 1, 2]]);
        let out = line_to_graph_decomposition(&d, &k3).unwrap();
        assert!(out.validate(&k3).unwrap().ok());
        assert!(out.width().unwrap() <= 3);

        let star = g1(4, &[(1, 2), (1, 3), (1, 4)]);
        let out = line_to_graph_decomposition(&d, &star).unwrap();
        assert!(out.validate(&star).unwrap().ok());
        assert!(out.width().unwrap() <= 3);

        let p3 = g1(3, &[(1, 2), (2, 3)]);
        let d = td(Subject::Line, &[(0, 1)], vec![vec![0], vec![0, 1]]);
        let out = line_to_graph_decomposition(&d, &p3).unwrap();
        assert!(out.validate(&p3).unwrap().ok());
        assert!(out.width().unwrap() <= 2);
    }

    #[test]
    fn line_to_graph_keeps_isolated_vertices() {
        let g = g1(4, &[(1, 2), (2, 3)]);
        let d = td(Subject::Line, &[], vec![vec![0, 1]]);
        let out = line_to_graph_decomposition(&d, &g).unwrap();
        assert!(out.validate(&g).unwrap().ok());
    }
}
