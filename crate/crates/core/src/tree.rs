//! Plain undirected trees on nodes `0..n`, shared by decompositions and
//! embeddings.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Builds the graph; does not check that it is a tree (see [`Tree::is_tree`]).
    /// Panics on out-of-range endpoints.
    pub fn new(node_count: usize, edges: &[(usize, usize)]) -> Tree {
        let mut adj = vec![Vec::new(); node_count];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Tree {
            adj,
            edges: edges.to_vec(),
        }
    }

    pub fn path(node_count: usize) -> Tree {
        let edges: Vec<_> = (1..node_count).map(|i| (i - 1, i)).collect();
        Tree::new(node_count, &edges)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, u: usize) -> bool {
        self.adj[u].len() <= 1
    }

    /// Connected, acyclic, at least one node, no loops or repeated edges.
    pub fn is_tree(&self) -> bool {
        let n = self.node_count();
        if n == 0 || self.edges.len() + 1 != n {
            return false;
        }
        if self.edges.iter().any(|&(a, b)| a == b) {
            return false;
        }
        self.rooted(0).1.len() == n
    }

    /// BFS from `root`: parent array (`usize::MAX` for root and unreached
    /// nodes) and the visiting order.
    pub fn rooted(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.node_count();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (parent, order)
    }

    /// Nodes on the unique path from `a` to `b`, both ends included.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let (parent, _) = self.rooted(a);
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            assert!(cur != usize::MAX, "nodes {a} and {b} are not connected");
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Parent/depth tables for repeated path queries.
    pub fn rooted_at(&self, root: usize) -> RootedTree {
        let (parent, order) = self.rooted(root);
        let mut depth = vec![0usize; self.node_count()];
        for &u in &order[1..] {
            depth[u] = depth[parent[u]] + 1;
        }
        RootedTree { parent, depth }
    }

    /// True when the tree is a path whose node ids appear in path order.
    pub fn is_id_ordered_path(&self) -> bool {
        let n = self.node_count();
        if self.edges.len() + 1 != n {
            return false;
        }
        let mut es: Vec<_> = self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        es.sort_unstable();
        es.iter().enumerate().all(|(i, &e)| e == (i, i + 1))
    }
}

/// A tree with fixed root, answering path queries by climbing parents.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub parent: Vec<usize>,
    pub depth: Vec<usize>,
}

impl RootedTree {
    /// Nodes on the path from `a` to `b`, in order, both ends included.
    pub fn path(&self, mut a: usize, mut b: usize) -> Vec<usize> {
        let mut front = Vec::new();
        let mut back = Vec::new();
        while self.depth[a] > self.depth[b] {
            front.push(a);
            a = self.parent[a];
        }
        while self.depth[b] > self.depth[a] {
            back.push(b);
            b = self.parent[b];
        }
        while a != b {
            front.push(a);
            back.push(b);
            a = self.parent[a];
            b = self.parent[b];
        }
        front.push(a);
        front.extend(back.into_iter().rev());
        front
    }
}
