//! Acceptance criteria 1-12. Run with `--nocapture` to see one line per
//! criterion; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use lgtw::appendix::{verify_appendix_a, verify_appendix_b, verify_appendix_c, CMode, Exact, Parity};
use lgtw::bounds::{
    avg_degree_lower_bound, bounds_report, improved_upper_construction, improved_upper_construction_path,
    min_degree_formula, min_degree_lower_bound, tree_line_decomposition, BoundKind, Target,
};
use lgtw::congestion::{cutwidth, golovach_check, min_path_congestion, min_tree_congestion};
use lgtw::decomposition::validate;
use lgtw::exact::{exact_pathwidth, exact_treewidth};
use lgtw::families::{bipartite_lower_check, generate, sharp_embedding, FamilySpec};
use lgtw::graph::line_graph;
use lgtw::suite::{exhaustive_suite, random_graphs, random_trees};
use lgtw::{Graph, Rational};

const SEED: u64 = 2024;

fn suite() -> Vec<Graph> {
    let mut g = exhaustive_suite(5);
    assert_eq!(g.len(), 30);
    g.extend(random_graphs(100, 8, 10, SEED));
    g
}

type Outcome = Result<String, String>;

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Err(msg())
    } else {
        Ok(())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    fail_if(start.elapsed() > budget, || {
        format!("took {:?}, budget {:?}", start.elapsed(), budget)
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let graphs = suite();
    for g in &graphs {
        let con = min_tree_congestion(g).map_err(|e| e.to_string())?.value;
        let tw = exact_treewidth(&line_graph(g)).map_err(|e| e.to_string())?.width;
        fail_if(con != tw + 1, || format!("con {con}, tw(L) {tw} on {:?}", g.edges()))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} graphs, con = tw(L)+1 on all, {:?}",
        graphs.len(),
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let graphs = suite();
    for g in &graphs {
        let pcon = min_path_congestion(g).map_err(|e| e.to_string())?.value;
        let pw = exact_pathwidth(&line_graph(g)).map_err(|e| e.to_string())?.width;
        fail_if(pcon != pw + 1, || format!("pcon {pcon}, pw(L) {pw} on {:?}", g.edges()))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} graphs, pcon = pw(L)+1 on all, {:?}",
        graphs.len(),
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for g in suite().iter().filter(|g| g.max_degree() >= 2) {
        let pw = exact_pathwidth(&line_graph(g)).map_err(|e| e.to_string())?.width as i64;
        let cw = cutwidth(g).map_err(|e| e.to_string())?.value as i64;
        let half = (g.max_degree() / 2) as i64;
        fail_if(!(pw - half + 1 <= cw && cw <= pw), || {
            format!("pw(L) {pw}, cw {cw} on {:?}", g.edges())
        })?;
        let r = golovach_check(g).map_err(|e| e.to_string())?;
        fail_if(!r.holds, || format!("library check disagrees on {:?}", g.edges()))?;
        checked += 1;
    }
    for m in 3..=6 {
        let star = Graph::new(m + 1, (1..=m).map(|i| (0, i))).unwrap();
        let pw = exact_pathwidth(&line_graph(&star)).unwrap().width as i64;
        let cw = cutwidth(&star).unwrap().value as i64;
        fail_if(pw - (m / 2) as i64 + 1 != cw, || {
            format!("lower side not tight on K_1,{m}")
        })?;
    }
    Ok(format!(
        "{checked} graphs with max degree >= 2; tight on K_1,m for m = 3..6"
    ))
}

fn criterion_4() -> Outcome {
    let mut entries = 0;
    for g in &suite() {
        let l = line_graph(g);
        let tw = exact_treewidth(&l).unwrap().width as i64;
        let pw = exact_pathwidth(&l).unwrap().width as i64;
        let r = bounds_report(g, true).map_err(|e| e.to_string())?;
        fail_if(
            r.exact_tw != Some(tw as usize) || r.exact_pw != Some(pw as usize),
            || "report exact values".into(),
        )?;
        for e in &r.entries {
            let exact = if e.applies_to(Target::TwLine) { tw } else { pw };
            let ok = match e.kind {
                BoundKind::Lower => e.effective <= exact,
                BoundKind::Upper => exact <= e.effective,
            };
            fail_if(!ok, || {
                format!(
                    "{} {:?} = {} vs exact {exact} on {:?}",
                    e.name,
                    e.kind,
                    e.effective,
                    g.edges()
                )
            })?;
            entries += 1;
        }
        let tw_g = exact_treewidth(g).unwrap();
        let pw_g = exact_pathwidth(g).unwrap();
        for c in [
            improved_upper_construction(g, &tw_g.decomposition).map_err(|e| e.to_string())?,
            improved_upper_construction_path(g, &pw_g.decomposition).map_err(|e| e.to_string())?,
        ] {
            let rep = validate(&c.decomposition, g).unwrap();
            fail_if(!rep.ok(), || format!("construction invalid: {rep} on {:?}", g.edges()))?;
            fail_if(c.decomposition.width().unwrap() != c.width, || "reported width".into())?;
            fail_if(Rational::from_integer(c.width as i64) > c.closed_form, || {
                format!("width {} above {} on {:?}", c.width, c.closed_form, g.edges())
            })?;
        }
    }
    Ok(format!(
        "{entries} bound entries bracket the exact widths; constructions validate"
    ))
}

fn check_sharp(spec: FamilySpec, want: i64, bound: i64, exact_equal: bool) -> Result<String, String> {
    let s = sharp_embedding(&spec).map_err(|e| e.to_string())?;
    let g = generate(&spec).unwrap();
    fail_if(s.width as i64 != want, || {
        format!("{spec}: width {} want {want}", s.width)
    })?;
    let lib_bound = min_degree_lower_bound(&g).unwrap();
    fail_if(lib_bound != bound, || format!("{spec}: bound {lib_bound} want {bound}"))?;
    fail_if(!validate(&s.decomposition.to_tree(), &g).unwrap().ok(), || {
        format!("{spec}: invalid")
    })?;
    let pw = min_path_congestion(&g).map_err(|e| e.to_string())?.value as i64 - 1;
    fail_if(pw < bound || pw > s.width as i64, || {
        format!("{spec}: pw(L) {pw} outside [{bound}, {}]", s.width)
    })?;
    fail_if(exact_equal && pw != bound, || {
        format!("{spec}: pw(L) {pw} differs from bound {bound}")
    })?;
    Ok(format!("{spec}: width {} bound {bound} pw(L) {pw}", s.width))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for (n, k) in [(8, 2), (10, 2), (12, 3)] {
        let want = (k * k + 2 * k - 1) as i64;
        fail_if(min_degree_formula(2 * k) != want, || {
            format!("formula at delta {}", 2 * k)
        })?;
        parts.push(check_sharp(FamilySpec::CyclePower { n, k }, want, want, true)?);
    }
    Ok(parts.join("; "))
}

fn criterion_6() -> Outcome {
    let bound = min_degree_formula(3);
    fail_if(bound != 4, || format!("odd bound {bound}"))?;
    let a = check_sharp(FamilySpec::CyclePowerMatched { n: 8, k: 2 }, 4, bound, true)?;
    let b = check_sharp(FamilySpec::CyclePowerMatched { n: 9, k: 2 }, 5, bound, false)?;
    Ok(format!("{a}; {b}"))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    let mut gaps = Vec::new();
    for k in 1..=3usize {
        let spec = FamilySpec::PathPower { n: 4 * k + 1, k };
        let s = sharp_embedding(&spec).map_err(|e| e.to_string())?;
        let want = (k * k + 3 * k) / 2 - 1;
        fail_if(s.width != want, || format!("{spec}: width {} want {want}", s.width))?;
        let g = generate(&spec).unwrap();
        let b = avg_degree_lower_bound(&g).unwrap();
        fail_if(b.integer > s.width as i64, || {
            format!("{spec}: bound {} above width", b.integer)
        })?;
        let exact = match min_tree_congestion(&g) {
            Ok(c) => format!(" tw(L) {}", c.value - 1),
            Err(_) => String::new(),
        };
        parts.push(format!(
            "{spec}: width {} bound {} d {}{exact}",
            s.width, b.integer, b.d
        ));
        if s.width as i64 - b.integer > 1 {
            gaps.push(format!("{spec} gap {}", s.width as i64 - b.integer));
        }
    }
    let line = parts.join("; ");
    if gaps.is_empty() {
        Ok(line)
    } else {
        Err(format!("{line}; not within 1: {}", gaps.join(", ")))
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (p, q) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
        let c = bipartite_lower_check(p, q).map_err(|e| e.to_string())?;
        let g = generate(&FamilySpec::CompleteBipartite { p, q }).unwrap();
        let oracle = min_tree_congestion(&g).unwrap().value - 1;
        fail_if(c.exact != oracle, || format!("K_{p},{q}: solvers disagree"))?;
        let bound = Rational::new((p * q) as i64, 2) - 1;
        fail_if(bound > Rational::from_integer(c.exact as i64), || {
            format!("K_{p},{q}: {bound} > {}", c.exact)
        })?;
        fail_if(!c.holds, || format!("K_{p},{q}: library check"))?;
        parts.push(format!("K_{p},{q} {bound} <= {}", c.exact));
    }
    within(start, Duration::from_secs(60))?;
    Ok(parts.join("; "))
}

fn criterion_9() -> Outcome {
    let trees = random_trees(50, 12, SEED);
    for t in &trees {
        let want = t.max_degree() - 1;
        let tw = exact_treewidth(&line_graph(t)).unwrap().width;
        let d = tree_line_decomposition(t).map_err(|e| e.to_string())?;
        fail_if(tw != want, || format!("tw(L) {tw} want {want} on {:?}", t.edges()))?;
        fail_if(!validate(&d, t).unwrap().ok(), || format!("invalid on {:?}", t.edges()))?;
        fail_if(d.width().unwrap() != want, || {
            format!("construction width on {:?}", t.edges())
        })?;
    }
    Ok(format!("{} trees", trees.len()))
}

fn criterion_10() -> Outcome {
    let k = 4;
    let mut widths = Vec::new();
    for n in 3..=5 {
        let spec = FamilySpec::GridCliques { n, k };
        let s = sharp_embedding(&spec).map_err(|e| e.to_string())?;
        let g = generate(&spec).unwrap();
        fail_if(!validate(&s.decomposition.to_tree(), &g).unwrap().ok(), || {
            format!("{spec}: invalid")
        })?;
        let cap = (4 * n + 4 + (k - 2) * (k * (k + 1) / 2 + 1) - 1) as i64;
        fail_if(s.width as i64 > cap, || {
            format!("{spec}: width {} above {cap}", s.width)
        })?;
        widths.push(s.width as i64);
    }
    for w in widths.windows(2) {
        fail_if(w[1] - w[0] > 4, || {
            format!("width step {} > 4 in {widths:?}", w[1] - w[0])
        })?;
    }
    Ok(format!("widths {widths:?} for n = 3..5"))
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let zero = Exact::from_integer(0);
    let mut notes = Vec::new();
    for s in [
        Rational::new(1, 10),
        Rational::new(1, 4),
        Rational::new(1, 3),
        Rational::new(1, 2),
    ] {
        let mut runs = vec![("a", verify_appendix_a(s, 64).map_err(|e| e.to_string())?)];
        for (name, parity) in [("b-even", Parity::Even), ("b-odd", Parity::Odd)] {
            runs.push((name, verify_appendix_b(s, parity, 64).map_err(|e| e.to_string())?));
        }
        for (name, r) in runs {
            let c = r.corner.as_ref().unwrap();
            fail_if(c.gap != zero, || format!("{name} s={s}: corner gap {}", c.gap))?;
            fail_if(r.gap < zero, || format!("{name} s={s}: grid below closed form"))?;
            if c.feasible {
                fail_if(r.gap != zero, || format!("{name} s={s}: grid gap {}", r.gap))?;
            } else {
                notes.push(format!("{name} s={s} corner outside region"));
            }
        }
    }
    let half = Exact::new(1, 2);
    for mode in [CMode::Fast, CMode::Full] {
        let r = verify_appendix_c(8, mode).map_err(|e| e.to_string())?;
        fail_if(r.value != half, || format!("appendix c {mode:?}: {}", r.value))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("corner gaps 0; c max 1/2 in both modes; {}", notes.join(", ")))
}

fn criterion_12() -> Outcome {
    let mut parts = Vec::new();
    for n in [4, 5] {
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        let tw = exact_treewidth(&line_graph(&g)).unwrap().width;
        if n == 4 {
            fail_if(tw != 4, || format!("tw(L(K_4)) = {tw}"))?;
        }
        let con = min_tree_congestion(&g).unwrap().value;
        fail_if(con != tw + 1, || format!("K_{n}: con {con}, tw(L) {tw}"))?;
        let avg = avg_degree_lower_bound(&g).unwrap().integer;
        let min = min_degree_lower_bound(&g).unwrap();
        fail_if(avg > tw as i64 || min > tw as i64, || {
            format!("K_{n}: bounds {avg}, {min} above {tw}")
        })?;
        bounds_report(&g, true).unwrap().check()?;
        parts.push(format!("tw(L(K_{n})) = {tw}, lower bounds {avg}/{min}"));
    }
    Ok(parts.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failed = Vec::new();
    for (i, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {i:>2}: PASS  {detail}"),
            Err(detail) => {
                println!("criterion {i:>2}: FAIL  {detail}");
                failed.push(i);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
