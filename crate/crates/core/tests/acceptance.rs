//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every line is printed. Criterion 2
//! includes the n = 6 stretch run, which takes well under a second.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use eod_core::amenability::{
    check_kmn_amenable, find_cycle_parallel_amenable, find_kr_amenable, find_zigzag_set, k2_partition_to_zigzag,
    zigzag_to_k2_partition, Label,
};
use eod_core::eod::{enumerate_eod_sets, find_eod_set, is_eod_set, is_parallel_eod, layer_occupancy, SearchOptions};
use eod_core::harness::{enumerate_labeled_graphs, load_fixture, FixtureLabels};
use eod_core::oracles::{c4_torus_eod, cycle_eod, grid_eod, path_eod};
use eod_core::product::{cartesian_product, Factor, ProductDims};
use eod_core::trees::{canonical_code, enumerate_trees, generate_family, recognize_tree, RecognizeOutcome};
use eod_core::{Graph, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn has_eod(g: &Graph) -> bool {
    find_eod_set(g, &SearchOptions::default()).unwrap().is_found()
}

/// The definition, vertex by vertex, over every subset. Used where the graph
/// is small enough to make this cheap.
fn brute_force_has_eod(g: &Graph) -> bool {
    let n = g.order();
    assert!(n <= 20);
    (0u32..1 << n).any(|mask| (0..n).all(|v| g.neighbors(v).iter().filter(|&&x| mask >> x & 1 == 1).count() == 1))
}

/// Independent of the library checker: every vertex has exactly one neighbor in `d`.
fn is_eod_by_definition(g: &Graph, d: &VertexSet) -> bool {
    g.vertices().all(|v| g.neighbors(v).iter().filter(|&&x| d.contains(x)).count() == 1)
}

fn labeled_graphs(n: usize) -> Vec<Graph> {
    enumerate_labeled_graphs(n, n > 5).unwrap().map(|(_, g)| g).collect()
}

fn cycle(n: usize) -> Graph {
    Graph::cycle(n).unwrap()
}

fn criterion_1() -> Outcome {
    for n in 1..=16 {
        let p = Graph::path(n);
        let solver = has_eod(&p);
        ensure(solver == path_eod(n).unwrap().value, || format!("P_{n}: solver {solver}, oracle disagrees"))?;
        ensure(solver == brute_force_has_eod(&p), || format!("P_{n}: solver {solver}, brute force disagrees"))?;
    }
    for n in 3..=16 {
        let c = cycle(n);
        let solver = has_eod(&c);
        ensure(solver == cycle_eod(n).unwrap().value, || format!("C_{n}: solver {solver}, oracle disagrees"))?;
        ensure(solver == brute_force_has_eod(&c), || format!("C_{n}: solver {solver}, brute force disagrees"))?;
    }
    Ok("30 instances agree with the closed forms and with brute force".into())
}

fn kr_equivalence(n: usize) -> Result<usize, String> {
    let k3 = Graph::complete(3);
    let mut count = 0;
    for g in labeled_graphs(n) {
        let amenable = find_kr_amenable(&g, 3).unwrap().is_some();
        let (p, _) = cartesian_product(&g, &k3);
        let eod = has_eod(&p);
        ensure(amenable == eod, || format!("{:?}: amenable={amenable} eod={eod}", g))?;
        count += 1;
    }
    Ok(count)
}

fn criterion_2() -> Outcome {
    let count = kr_equivalence(5)?;
    ensure(count == 1024, || format!("expected 1024 graphs, saw {count}"))?;
    let t = Instant::now();
    let c6 = kr_equivalence(6)?;
    ensure(c6 == 32768, || format!("expected 32768 graphs on 6 vertices, saw {c6}"))?;
    Ok(format!(
        "{count} graphs on 5 vertices, zero discrepancies; stretch n=6: {c6} graphs agree in {:.1?}",
        t.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for n in 3..=5 {
        for g in labeled_graphs(n) {
            let z = find_zigzag_set(&g).unwrap();
            let p = find_kr_amenable(&g, 2).unwrap();
            ensure(z.is_some() == p.is_some(), || format!("{g:?}: zig-zag {} vs K2 {}", z.is_some(), p.is_some()))?;
            if let Some(z) = z {
                let q = zigzag_to_k2_partition(&g, &z).unwrap();
                ensure(k2_partition_to_zigzag(&g, &q).unwrap() == z, || format!("{g:?}: zig-zag round trip"))?;
            }
            if let Some(p) = p {
                // The partition is determined by its zig-zag set up to swapping
                // V_1 and V_2 on each 2-step component, so compare V_0 and the set.
                let z = k2_partition_to_zigzag(&g, &p).unwrap();
                let back = zigzag_to_k2_partition(&g, &z).unwrap();
                ensure(back.members(Label::Zero) == p.members(Label::Zero), || format!("{g:?}: V_0 changed"))?;
                ensure(k2_partition_to_zigzag(&g, &back).unwrap() == z, || format!("{g:?}: partition round trip"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs on 3..5 vertices, zero discrepancies"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for r in 3..=4 {
        for t in r..=10 {
            let (p, _) = cartesian_product(&Graph::path(r), &Graph::path(t));
            let cert = find_eod_set(&p, &SearchOptions::default()).unwrap();
            if let Some(d) = cert.found() {
                ensure(is_eod_by_definition(&p, d), || format!("P{r} x P{t}: returned set is not an EOD-set"))?;
            }
            let oracle = grid_eod(r, t).unwrap().value;
            ensure(cert.is_found() == oracle, || format!("P{r} x P{t}: solver {} oracle {oracle}", cert.is_found()))?;
            count += 1;
        }
    }
    Ok(format!("{count} grids agree with the grid closed form"))
}

fn any_parallel(r: usize, t: usize) -> bool {
    let (p, dims) = cartesian_product(&cycle(r), &cycle(t));
    enumerate_eod_sets(&p).iter().any(|d| {
        is_parallel_eod(&p, dims, Factor::First, d).unwrap() || is_parallel_eod(&p, dims, Factor::Second, d).unwrap()
    })
}

fn criterion_5() -> Outcome {
    for t in 4..=12 {
        let (p, _) = cartesian_product(&cycle(4), &cycle(t));
        let solver = has_eod(&p);
        let oracle = c4_torus_eod(t).unwrap().value;
        ensure(solver == oracle, || format!("C4 x C{t}: solver {solver} oracle {oracle}"))?;
    }
    for (r, t, want) in [(4, 4, true), (4, 8, true), (4, 6, false), (5, 5, false), (3, 6, false)] {
        let got = any_parallel(r, t);
        ensure(got == want, || format!("C{r} x C{t}: parallel EOD-set exists = {got}, expected {want}"))?;
    }
    for (r, t) in [(3, 3), (3, 4), (3, 5), (5, 5), (6, 6)] {
        let (p, _) = cartesian_product(&cycle(r), &cycle(t));
        ensure(enumerate_eod_sets(&p).is_empty(), || format!("C{r} x C{t} has an EOD-set"))?;
    }
    Ok("C4 tori t=4..12, 5 parallel cases, 5 non-EOD tori all as expected".into())
}

fn criterion_6() -> Outcome {
    let fx = load_fixture("fig1").unwrap();
    let FixtureLabels::Partition(p) = &fx.labels else {
        return Err("fig1 carries no partition".into());
    };
    let report = check_kmn_amenable(&fx.graph, p).unwrap();
    ensure(report.is_ok(), || format!("check failed: {:?}", report.violations))?;
    let d = fx.implied_set().unwrap();
    let (prod, _) = fx.product();
    ensure(prod.order() == 60, || format!("product has {} vertices", prod.order()))?;
    ensure(d.len() == 12, || format!("|D| = {}", d.len()))?;
    ensure(is_eod_by_definition(&prod, &d) && is_eod_set(&prod, &d), || "D is not an EOD-set".into())?;
    Ok(format!("K_2,3-amenable, |D| = 12, EOD-set of the 60-vertex product (flavor {})", p.flavor()))
}

fn criterion_7() -> Outcome {
    let fx = load_fixture("fig2").unwrap();
    let d = fx.implied_set().unwrap();
    let (prod, _) = fx.product();
    ensure(prod.order() == 48, || format!("product has {} vertices", prod.order()))?;
    ensure(is_eod_by_definition(&prod, &d) && is_eod_set(&prod, &d), || "D is not an EOD-set".into())?;
    // Six pair-labelled vertices give two product vertices each.
    ensure(d.len() == 12, || format!("|D| = {}", d.len()))?;
    Ok(format!("implied D = {d} is an EOD-set of the 48-vertex product"))
}

fn criterion_8() -> Outcome {
    let k3 = Graph::complete(3);
    let mut trees = 0;
    let mut brute = BTreeSet::new();
    for n in 3..=12 {
        for t in enumerate_trees(n) {
            let amenable = find_kr_amenable(&t, 3).unwrap().is_some();
            if amenable {
                brute.insert(canonical_code(&t).unwrap());
            }
            if n > 10 {
                continue;
            }
            trees += 1;
            let outcome = recognize_tree(&t, 3).unwrap();
            let (p, _) = cartesian_product(&t, &k3);
            let eod = has_eod(&p);
            ensure(outcome.is_amenable() == amenable && amenable == eod, || {
                format!("{t:?}: recognizer {outcome:?}, partition {amenable}, product {eod}")
            })?;
            if let RecognizeOutcome::Member(trace) = outcome {
                let rebuilt = trace.replay().unwrap();
                ensure(canonical_code(rebuilt.tree()).unwrap() == canonical_code(&t).unwrap(), || {
                    format!("{t:?}: trace {trace} replays to a different tree")
                })?;
            }
        }
    }
    ensure(trees == 199, || format!("saw {trees} trees of order 3..10"))?;
    ensure(enumerate_trees(10).len() == 106, || "order 10 should have 106 trees".into())?;
    let family: BTreeSet<_> = generate_family(3, 12).unwrap().into_iter().collect();
    // P_2 is amenable but below order 3, so the sets compare directly.
    ensure(family == brute, || format!("family {family:?} vs amenable {brute:?}"))?;
    Ok(format!("{trees} trees (106 at order 10) agree; T_3 up to order 12 has {} members", family.len()))
}

/// Every EOD-set of the products checked for criterion 11, with the factor
/// whose layers have diameter 2.
struct Collected {
    product: Graph,
    dims: ProductDims,
    layer: Factor,
    sets: Vec<VertexSet>,
}

fn diameter_two_factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K_1,2", Graph::complete_bipartite(1, 2)),
        ("K_2,3", Graph::complete_bipartite(2, 3)),
    ]
}

fn criterion_9(collected: &mut Vec<Collected>) -> Outcome {
    let mut products = 0;
    let mut sets = 0;
    for n in 3..=8 {
        for t in enumerate_trees(n) {
            for (name, h) in diameter_two_factors() {
                let (p, dims) = cartesian_product(&t, &h);
                let all = enumerate_eod_sets(&p);
                for d in &all {
                    ensure(!is_parallel_eod(&p, dims, Factor::First, d).unwrap(), || {
                        format!("{t:?} x {name}: {d} is parallel")
                    })?;
                }
                products += 1;
                sets += all.len();
                collected.push(Collected { product: p, dims, layer: Factor::Second, sets: all });
            }
        }
    }
    Ok(format!("{products} products, {sets} EOD-sets, none parallel to the tree"))
}

fn criterion_10(collected: &mut Vec<Collected>) -> Outcome {
    let mut checked = 0;
    for k in [4, 5] {
        let ck = cycle(k);
        for n in 1..=5 {
            for g in labeled_graphs(n) {
                let (p, dims) = cartesian_product(&g, &ck);
                let all = enumerate_eod_sets(&p);
                let parallel = all.iter().any(|d| is_parallel_eod(&p, dims, Factor::First, d).unwrap());
                let amenable = find_cycle_parallel_amenable(&g, k).unwrap().is_some();
                ensure(amenable == parallel, || format!("{g:?}, k={k}: amenable {amenable}, parallel {parallel}"))?;
                checked += 1;
                collected.push(Collected { product: p, dims, layer: Factor::Second, sets: all });
            }
        }
    }
    let p3 = Graph::path(3);
    ensure(find_cycle_parallel_amenable(&p3, 4).unwrap().is_none(), || "P3 is C4-amenable".into())?;
    let (p, _) = cartesian_product(&p3, &cycle(4));
    ensure(has_eod(&p), || "P3 x C4 has no EOD-set".into())?;
    Ok(format!("{checked} (graph, k) pairs agree; P3 is not C4-amenable yet P3 x C4 has an EOD-set"))
}

fn torus_sets(collected: &mut Vec<Collected>) {
    let mut push = |r: usize, t: usize, layer: Factor| {
        let (p, dims) = cartesian_product(&cycle(r), &cycle(t));
        let sets = enumerate_eod_sets(&p);
        collected.push(Collected { product: p, dims, layer, sets });
    };
    for t in 4..=12 {
        push(4, t, Factor::First);
        if t <= 5 {
            push(4, t, Factor::Second);
        }
    }
    for (r, t) in [(4, 4), (4, 8), (4, 6), (5, 5), (3, 6), (3, 3), (3, 4), (3, 5), (6, 6)] {
        if r == 4 || r == 5 {
            push(r, t, Factor::First);
        }
        if t == 4 || t == 5 {
            push(r, t, Factor::Second);
        }
    }
}

fn criterion_11(collected: &[Collected]) -> Outcome {
    let mut layers = 0;
    let mut pairs = 0;
    for c in collected {
        for d in &c.sets {
            let occupancy = layer_occupancy(&c.product, c.dims, c.layer, d).unwrap();
            let outer = match c.layer {
                Factor::Second => c.dims.g_size,
                Factor::First => c.dims.h_size,
            };
            for at in 0..outer {
                let hit: Vec<usize> = d
                    .iter()
                    .filter(|&v| {
                        let (g, h) = c.dims.coords(v);
                        match c.layer {
                            Factor::Second => g == at,
                            Factor::First => h == at,
                        }
                    })
                    .collect();
                ensure(occupancy[at].count == hit.len(), || format!("layer {at}: occupancy count disagrees"))?;
                ensure(hit.len() <= 2, || format!("layer {at} meets {d} in {} vertices", hit.len()))?;
                if hit.len() == 2 {
                    ensure(c.product.has_edge(hit[0], hit[1]), || format!("layer {at} of {d}: non-adjacent pair"))?;
                    pairs += 1;
                }
                layers += 1;
            }
        }
    }
    Ok(format!("{layers} layers checked, {pairs} two-vertex layers all adjacent"))
}

fn main() -> ExitCode {
    let mut collected = Vec::new();
    let mut failed = 0;
    let mut report = |n: usize, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS criterion {n}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n}: {msg} ({elapsed:.2?})");
            }
        }
    };
    report(1, &mut criterion_1);
    report(2, &mut criterion_2);
    report(3, &mut criterion_3);
    report(4, &mut criterion_4);
    report(5, &mut criterion_5);
    report(6, &mut criterion_6);
    report(7, &mut criterion_7);
    report(8, &mut criterion_8);
    report(9, &mut || criterion_9(&mut collected));
    report(10, &mut || criterion_10(&mut collected));
    torus_sets(&mut collected);
    report(11, &mut || criterion_11(&collected));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
