//! Line-oriented text formats. All ids in files are 1-indexed; lines
//! starting with `c` are comments.
//!
//! * `.gr`: `p tw <n> <m>` then `m` lines `<u> <v>`.
//! * `.td`: `s td <bags> <max_bag_size> <n>`, bag lines `b <id> <elems…>`,
//!   then tree edges `<i> <j>`. For decompositions of `L(G)` the elements
//!   are edge ids in the canonical order of the companion graph.
//! * `.emb`: `s emb <tree_nodes> <n>`, tree edges `t <i> <j>`, leaves
//!   `l <tree_node> <vertex>`.
//! * `.ord`: `s ord <n>` then one line of `n` vertex ids in position order.

use std::fmt::Write as _;

use crate::congestion::{LeafEmbedding, LinearOrdering};
use crate::decomposition::{Subject, TreeDecomposition};
use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::tree::Tree;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, words)),
        }
    })
}

fn num(line: usize, w: &str) -> Result<usize> {
    w.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a nonnegative integer, found {w:?}")))
}

/// A 1-indexed id in `1..=max`, returned 0-indexed.
fn id(line: usize, w: &str, max: usize, what: &str) -> Result<usize> {
    let v = num(line, w)?;
    if v == 0 || v > max {
        return Err(parse_err(line, format!("{what} {v} out of range 1..={max}")));
    }
    Ok(v - 1)
}

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"p tw <n> <m>\""))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(parse_err(hl, "expected header \"p tw <n> <m>\""));
    }
    let n = num(hl, header[2])?;
    let m = num(hl, header[3])?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, words) in lines {
        last = ln;
        if words.len() != 2 {
            return Err(parse_err(ln, "expected an edge \"<u> <v>\""));
        }
        let u = id(ln, words[0], n, "vertex")?;
        let v = id(ln, words[1], n, "vertex")?;
        if u == v {
            return Err(parse_err(ln, format!("self-loop at vertex {}", u + 1)));
        }
        edges.push((u.min(v), u.max(v)));
        if edges.len() > m {
            return Err(parse_err(ln, format!("more than the {m} declared edges")));
        }
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("declared {m} edges, found {}", edges.len())));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidGraph(format!(
            "duplicate edge {}-{}",
            w[0].0 + 1,
            w[0].1 + 1
        )));
    }
    Graph::new(n, edges)
}

/// Edges in canonical id order.
pub fn write_gr(g: &Graph) -> String {
    let mut s = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

/// A parsed `.td` file; `n` is the declared element count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdFile {
    pub decomposition: TreeDecomposition,
    pub n: usize,
}

pub fn parse_td(text: &str, subject: Subject) -> Result<TdFile> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"s td <bags> <max_bag_size> <n>\""))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(parse_err(hl, "expected header \"s td <bags> <max_bag_size> <n>\""));
    }
    let count = num(hl, header[2])?;
    let max_size = num(hl, header[3])?;
    let n = num(hl, header[4])?;
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut edges = Vec::new();
    for (ln, words) in lines {
        if words[0] == "b" {
            if words.len() < 2 {
                return Err(parse_err(ln, "bag line needs an id"));
            }
            let b = id(ln, words[1], count, "bag")?;
            if bags[b].is_some() {
                return Err(parse_err(ln, format!("bag {} given twice", b + 1)));
            }
            let elems = words[2..]
                .iter()
                .map(|w| id(ln, w, n, "element"))
                .collect::<Result<Vec<_>>>()?;
            if elems.len() > max_size {
                return Err(parse_err(
                    ln,
                    format!("bag has {} elements, header allows {max_size}", elems.len()),
                ));
            }
            bags[b] = Some(elems);
        } else {
            if words.len() != 2 {
                return Err(parse_err(ln, "expected a tree edge \"<i> <j>\""));
            }
            edges.push((id(ln, words[0], count, "bag")?, id(ln, words[1], count, "bag")?));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(hl, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    if bags.is_empty() {
        return Err(Error::NoBags);
    }
    Ok(TdFile {
        decomposition: TreeDecomposition::new(subject, Tree::new(count, &edges), bags),
        n,
    })
}

/// `n` is the number of elements: vertices of `G` or edges of `G`.
pub fn write_td(d: &TreeDecomposition, n: usize) -> String {
    let max = d.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "c {} decomposition",
        match d.subject {
            Subject::Graph => "graph",
            Subject::Line => "line-graph",
        }
    );
    let _ = writeln!(s, "s td {} {} {}", d.bags.len(), max, n);
    for (i, bag) in d.bags.iter().enumerate() {
        let _ = write!(s, "b {}", i + 1);
        for &e in bag {
            let _ = write!(s, " {}", e + 1);
        }
        s.push('\n');
    }
    for &(a, b) in d.tree.edges() {
        let _ = writeln!(s, "{} {}", a + 1, b + 1);
    }
    s
}

/// The subject named by a `c graph decomposition` / `c line-graph
/// decomposition` comment, if present.
pub fn td_subject_hint(text: &str) -> Option<Subject> {
    text.lines().find_map(|l| match l.trim() {
        "c graph decomposition" => Some(Subject::Graph),
        "c line-graph decomposition" => Some(Subject::Line),
        _ => None,
    })
}

pub fn parse_emb(text: &str) -> Result<LeafEmbedding> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"s emb <tree_nodes> <n>\""))?;
    if header.len() != 4 || header[0] != "s" || header[1] != "emb" {
        return Err(parse_err(hl, "expected header \"s emb <tree_nodes> <n>\""));
    }
    let nodes = num(hl, header[2])?;
    let n = num(hl, header[3])?;
    let mut edges = Vec::new();
    let mut assignment = vec![None; n];
    for (ln, words) in lines {
        match (words[0], words.len()) {
            ("t", 3) => edges.push((
                id(ln, words[1], nodes, "tree node")?,
                id(ln, words[2], nodes, "tree node")?,
            )),
            ("l", 3) => {
                let u = id(ln, words[1], nodes, "tree node")?;
                let v = id(ln, words[2], n, "vertex")?;
                if assignment[v].is_some() {
                    return Err(parse_err(ln, format!("vertex {} placed twice", v + 1)));
                }
                assignment[v] = Some(u);
            }
            _ => return Err(parse_err(ln, "expected \"t <i> <j>\" or \"l <node> <vertex>\"")),
        }
    }
    Ok(LeafEmbedding {
        tree: Tree::new(nodes, &edges),
        assignment,
    })
}

pub fn write_emb(e: &LeafEmbedding) -> String {
    let mut s = format!("s emb {} {}\n", e.tree.node_count(), e.assignment.len());
    for &(a, b) in e.tree.edges() {
        let _ = writeln!(s, "t {} {}", a + 1, b + 1);
    }
    for (v, u) in e.assignment.iter().enumerate() {
        if let Some(u) = u {
            let _ = writeln!(s, "l {} {}", u + 1, v + 1);
        }
    }
    s
}

/// `graph_n` bounds the vertex ids; the header counts listed vertices.
pub fn parse_ord(text: &str, graph_n: usize) -> Result<LinearOrdering> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"s ord <n>\""))?;
    if header.len() != 3 || header[0] != "s" || header[1] != "ord" {
        return Err(parse_err(hl, "expected header \"s ord <n>\""));
    }
    let count = num(hl, header[2])?;
    let mut order = Vec::with_capacity(count);
    for (ln, words) in lines {
        for w in words {
            order.push(id(ln, w, graph_n, "vertex")?);
        }
    }
    if order.len() != count {
        return Err(parse_err(
            hl,
            format!("declared {count} vertices, found {}", order.len()),
        ));
    }
    Ok(LinearOrdering { order })
}

pub fn write_ord(o: &LinearOrdering) -> String {
    let ids: Vec<String> = o.order.iter().map(|v| (v + 1).to_string()).collect();
    format!("s ord {}\n{}\n", o.order.len(), ids.join(" "))
}
