//! Cross-checks of the main identities and bounds over a graph suite.

use std::fmt;

use rayon::prelude::*;

use crate::bounds::{bounds_report, expansion_formula, improved_upper_construction, improved_upper_construction_path};
use crate::congestion::{golovach_check, min_path_congestion, min_tree_congestion, Witness};
use crate::decomposition::{
    check_normal_form, decomposition_from_embedding, expand_to_line, line_to_graph_decomposition,
    normalize_line_decomposition, validate, Subject, TreeDecomposition,
};
use crate::exact::{exact_pathwidth, exact_treewidth};
use crate::graph::{line_graph, Graph};
use crate::suite::{exhaustive_suite, random_graphs};
use crate::Result;

/// Names of the individual checks, in report order.
pub const CHECKS: [&str; 10] = [
    "con = tw(L)+1",
    "pcon = pw(L)+1",
    "witness reevaluates",
    "embedding decomposition",
    "normal form",
    "line to graph",
    "expansion",
    "improved construction",
    "cutwidth sandwich",
    "bounds bracket",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub graphs: usize,
    pub lines: Vec<CheckLine>,
}

impl TheoremReport {
    pub fn ok(&self) -> bool {
        self.lines.iter().all(|l| l.passed == l.total)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs {}", self.graphs)?;
        for l in &self.lines {
            let status = if l.passed == l.total { "ok" } else { "FAIL" };
            write!(f, "{status} {}: {}/{}", l.name, l.passed, l.total)?;
            if let Some(why) = &l.first_failure {
                write!(f, " ({why})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Outcome = (&'static str, std::result::Result<(), String>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn as_line(d: &TreeDecomposition) -> TreeDecomposition {
    TreeDecomposition::new(Subject::Line, d.tree.clone(), d.bags.clone())
}

/// Runs every applicable check on one graph. Edgeless graphs are skipped.
pub fn check_graph(g: &Graph) -> Result<Vec<Outcome>> {
    let mut out: Vec<Outcome> = Vec::new();
    if g.edge_count() == 0 {
        return Ok(out);
    }
    let l = line_graph(g);
    let tw_l = exact_treewidth(&l)?;
    let pw_l = exact_pathwidth(&l)?;
    let con = min_tree_congestion(g)?;
    let pcon = min_path_congestion(g)?;
    let edges = || format!("{:?}", g.edges());

    out.push((
        CHECKS[0],
        ensure(con.value == tw_l.width + 1, || {
            format!("{} vs {} on {}", con.value, tw_l.width, edges())
        }),
    ));
    out.push((
        CHECKS[1],
        ensure(pcon.value == pw_l.width + 1, || {
            format!("{} vs {} on {}", pcon.value, pw_l.width, edges())
        }),
    ));
    let re = (con.reevaluate(g)?, pcon.reevaluate(g)?);
    out.push((
        CHECKS[2],
        ensure(re == (con.value, pcon.value), || {
            format!("reevaluated {re:?} on {}", edges())
        }),
    ));

    if let Witness::Tree(e) = &con.witness {
        let (d, _) = decomposition_from_embedding(e, g)?;
        let rep = validate(&d, g)?;
        out.push((
            CHECKS[3],
            ensure(rep.ok() && d.width()? + 1 == con.value, || {
                format!("{rep} on {}", edges())
            }),
        ));
    }

    let line_dec = as_line(&tw_l.decomposition);
    let nf = normalize_line_decomposition(&line_dec, g)?;
    let nf_ok = check_normal_form(&nf, g).and_then(|()| {
        ensure(
            nf.decomposition.width().map_err(|e| e.to_string())? <= tw_l.width,
            || "width grew".into(),
        )
    });
    out.push((CHECKS[4], nf_ok.map_err(|e| format!("{e} on {}", edges()))));

    let back = line_to_graph_decomposition(&line_dec, g)?;
    let rep = validate(&back, g)?;
    out.push((
        CHECKS[5],
        ensure(rep.ok() && back.width()? <= tw_l.width + 1, || {
            format!("{rep} on {}", edges())
        }),
    ));

    let tw_g = exact_treewidth(g)?;
    let expanded = expand_to_line(&tw_g.decomposition, g)?;
    let rep = validate(&expanded, g)?;
    let cap = expansion_formula(tw_g.width, g.max_degree());
    out.push((
        CHECKS[6],
        ensure(rep.ok() && expanded.width()? as i64 <= cap, || {
            format!("{rep} on {}", edges())
        }),
    ));

    let pw_g = exact_pathwidth(g)?;
    let mut improved_ok = Ok(());
    for c in [
        improved_upper_construction(g, &tw_g.decomposition)?,
        improved_upper_construction_path(g, &pw_g.decomposition)?,
    ] {
        let rep = validate(&c.decomposition, g)?;
        let exact = if c.path_mode { pw_l.width } else { tw_l.width };
        if !rep.ok() || crate::Rational::from(c.width as i64) > c.closed_form || c.width < exact {
            improved_ok = Err(format!("{rep}, width {} on {}", c.width, edges()));
        }
    }
    out.push((CHECKS[7], improved_ok));

    if g.max_degree() >= 2 {
        let gr = golovach_check(g)?;
        out.push((CHECKS[8], ensure(gr.holds, || format!("{gr:?} on {}", edges()))));
    }

    let report = bounds_report(g, true)?;
    out.push((CHECKS[9], report.check().map_err(|e| format!("{e} on {}", edges()))));
    Ok(out)
}

/// Checks every connected graph on `2..=max_n` vertices plus `random`
/// seeded random graphs on at most 8 vertices and 10 edges.
pub fn verify_theorems(max_n: usize, random: usize, seed: u64) -> Result<TheoremReport> {
    let mut graphs = exhaustive_suite(max_n);
    graphs.extend(random_graphs(random, 8, 10, seed));
    let per_graph: Vec<Vec<Outcome>> = graphs.par_iter().map(check_graph).collect::<Result<_>>()?;
    let lines = CHECKS
        .iter()
        .map(|&name| {
            let results = per_graph.iter().flatten().filter(|(n, _)| *n == name);
            let mut line = CheckLine {
                name,
                passed: 0,
                total: 0,
                first_failure: None,
            };
            for (_, r) in results {
                line.total += 1;
                match r {
                    Ok(()) => line.passed += 1,
                    Err(e) if line.first_failure.is_none() => line.first_failure = Some(e.clone()),
                    Err(_) => {}
                }
            }
            line
        })
        .collect();
    Ok(TheoremReport {
        graphs: graphs.len(),
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = verify_theorems(4, 10, 7).unwrap();
        assert_eq!(r.graphs, 19);
        assert!(r.ok(), "{r}");
    }
}
