//! Verification suites: every characterization against exhaustive ground
//! truth on small instances.
//!
//! Instances are built in a fixed order, evaluated on a rayon pool, and
//! reported back in their original order, so a report does
//! not depend on the worker count. Failure descriptions carry the graph in
//! graph6 (and, for labeled sweeps, its edge mask) so the instance can be
//! rerun on its own.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use super::fixtures::load_fixture;
use super::labeled::enumerate_labeled_graphs;
use super::report::{Failure, SuiteReport};
use crate::amenability::{
    check_cycle_parallel_amenable, check_kmn_amenable, check_kr_amenable, cycle_partition_to_parallel_eod,
    eod_to_kmn_partition, eod_to_kr_partition, find_cycle_parallel_amenable, find_kmn_amenable, find_kr_amenable,
    find_zigzag_set, is_zigzag_set, k2_partition_to_zigzag, kmn_partition_to_eod, kr_partition_to_eod,
    parallel_eod_to_cycle_partition, zigzag_to_k2_partition, Label,
};
use crate::eod::{enumerate_eod_sets, find_eod_set, is_eod_set, is_parallel_eod, layer_occupancy, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::oracles::{c4_torus_eod, cycle_eod, grid_eod, path_eod, torus_eod, torus_parallel_eod};
use crate::product::{cartesian_product, Factor};
use crate::trees::{canonical_code, enumerate_coded_trees, generate_family, recognize_tree, CanonicalCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    KrEquiv,
    ZzEquiv,
    KmnEquiv,
    CycEquiv,
    TreeEquiv,
    Diam2Trees,
    LayerLemma,
    OracleXcheck,
    TorusEvidence,
}

impl SuiteId {
    pub const ALL: [SuiteId; 9] = [
        SuiteId::KrEquiv,
        SuiteId::ZzEquiv,
        SuiteId::KmnEquiv,
        SuiteId::CycEquiv,
        SuiteId::TreeEquiv,
        SuiteId::Diam2Trees,
        SuiteId::LayerLemma,
        SuiteId::OracleXcheck,
        SuiteId::TorusEvidence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::KrEquiv => "KR_EQUIV",
            SuiteId::ZzEquiv => "ZZ_EQUIV",
            SuiteId::KmnEquiv => "KMN_EQUIV",
            SuiteId::CycEquiv => "CYC_EQUIV",
            SuiteId::TreeEquiv => "TREE_EQUIV",
            SuiteId::Diam2Trees => "DIAM2_TREES",
            SuiteId::LayerLemma => "LAYER_LEMMA",
            SuiteId::OracleXcheck => "ORACLE_XCHECK",
            SuiteId::TorusEvidence => "TORUS_EVIDENCE",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            SuiteId::KrEquiv => "K_r-amenable <=> G □ K_r has an EOD-set (r >= 3), labeled graphs",
            SuiteId::ZzEquiv => "zig-zag set exists <=> K_2-amenable, plus converter round trips",
            SuiteId::KmnEquiv => "K_m,n-amenable <=> G □ K_m,n has an EOD-set, labeled graphs",
            SuiteId::CycEquiv => "C_k-parallel amenable <=> G □ C_k has an EOD-set parallel to G (k = 4, 5)",
            SuiteId::TreeEquiv => "T_r recognizer, K_r-amenability and EOD of T □ K_r agree on all trees",
            SuiteId::Diam2Trees => "no EOD-set of T □ H is parallel to a tree T when diam(H) = 2",
            SuiteId::LayerLemma => "diameter-2 layers meet an EOD-set at most twice, in adjacent vertices",
            SuiteId::OracleXcheck => "closed forms for paths, cycles, grids and tori against the solver",
            SuiteId::TorusEvidence => "EOD of C_r □ C_t against the multiples-of-4 conjecture (evidence only)",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        SuiteId::ALL.into_iter().find(|id| id.name() == norm).ok_or_else(|| {
            let known: Vec<&str> = SuiteId::ALL.iter().map(|id| id.name()).collect();
            Error::Usage(format!("unknown suite {s:?}; known suites: {}", known.join(", ")))
        })
    }
}

/// Size bounds for a suite run. Which fields a suite reads is listed in
/// [`SuiteParams::defaults`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Smallest graph or tree order swept.
    pub min_order: usize,
    /// Largest graph or tree order swept.
    pub max_order: usize,
    pub r_values: Vec<usize>,
    pub kmn: Vec<(usize, usize)>,
    pub cycle_k: Vec<usize>,
    /// Largest tree order in mixed sweeps (`LAYER_LEMMA`).
    pub tree_max_order: usize,
    /// Largest order for the generated-family comparison (`TREE_EQUIV`).
    pub family_max_order: usize,
    /// Largest cycle order in torus sweeps.
    pub torus_max: usize,
    /// Lifts the labeled-enumeration order guard.
    pub allow_large: bool,
    /// Worker threads; 0 picks the available parallelism.
    pub workers: usize,
}

impl SuiteParams {
    pub fn defaults(id: SuiteId) -> Self {
        let base = SuiteParams {
            min_order: 1,
            max_order: 5,
            r_values: vec![3],
            kmn: vec![(1, 1), (1, 2), (2, 2), (2, 3)],
            cycle_k: vec![4, 5],
            tree_max_order: 8,
            family_max_order: 12,
            torus_max: 12,
            allow_large: false,
            workers: 0,
        };
        match id {
            SuiteId::KrEquiv | SuiteId::CycEquiv | SuiteId::LayerLemma => base,
            SuiteId::ZzEquiv => SuiteParams { min_order: 3, ..base },
            SuiteId::KmnEquiv => SuiteParams { max_order: 4, ..base },
            SuiteId::TreeEquiv => SuiteParams {
                min_order: 3,
                max_order: 10,
                ..base
            },
            SuiteId::Diam2Trees => SuiteParams {
                min_order: 3,
                max_order: 8,
                ..base
            },
            SuiteId::OracleXcheck => SuiteParams {
                min_order: 1,
                max_order: 16,
                ..base
            },
            SuiteId::TorusEvidence => SuiteParams {
                min_order: 3,
                max_order: 8,
                torus_max: 8,
                ..base
            },
        }
    }

    fn render(&self, id: SuiteId) -> String {
        let orders = format!("orders={}..{}", self.min_order, self.max_order);
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match id {
            SuiteId::KrEquiv => format!("{orders} r={}", list(&self.r_values)),
            SuiteId::ZzEquiv | SuiteId::Diam2Trees => orders,
            SuiteId::KmnEquiv => {
                let pairs: Vec<String> = self.kmn.iter().map(|(m, n)| format!("{m}x{n}")).collect();
                format!("{orders} kmn={}", pairs.join(","))
            }
            SuiteId::CycEquiv => format!("{orders} k={}", list(&self.cycle_k)),
            SuiteId::TreeEquiv => format!(
                "{orders} r={} family_max={}",
                list(&self.r_values),
                self.family_max_order
            ),
            SuiteId::LayerLemma => format!(
                "{orders} tree_max={} torus_max={}",
                self.tree_max_order, self.torus_max
            ),
            SuiteId::OracleXcheck => format!("path_cycle_max={} torus_max={}", self.max_order, self.torus_max),
            SuiteId::TorusEvidence => format!("torus_max={}", self.torus_max),
        }
    }

    fn validate(&self, id: SuiteId) -> Result<()> {
        let usage = |m: String| Err(Error::Usage(m));
        if self.min_order == 0 || self.min_order > self.max_order {
            return usage(format!("bad order range {}..{}", self.min_order, self.max_order));
        }
        match id {
            SuiteId::KrEquiv | SuiteId::TreeEquiv if self.r_values.iter().any(|&r| r < 3) => {
                usage("the K_r characterizations are checked for r >= 3".into())
            }
            SuiteId::KmnEquiv if self.kmn.iter().any(|&(m, n)| m == 0 || m > n) => {
                usage("K_m,n needs 1 <= m <= n".into())
            }
            SuiteId::CycEquiv if self.cycle_k.iter().any(|&k| k != 4 && k != 5) => {
                usage("cycle-parallel amenability covers k = 4 and 5".into())
            }
            SuiteId::OracleXcheck | SuiteId::TorusEvidence | SuiteId::LayerLemma if self.torus_max < 4 => {
                usage("torus_max must be at least 4".into())
            }
            _ => Ok(()),
        }
    }
}

type Outcome = Option<Failure>;

fn fail(instance: &str, expected: impl fmt::Display, got: impl fmt::Display) -> Failure {
    Failure {
        instance: instance.to_string(),
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

/// Runs a fallible check, turning library errors into failures.
fn guarded(id: &str, check: impl FnOnce() -> Result<Outcome>) -> Outcome {
    check().unwrap_or_else(|e| Some(fail(id, "no error", format!("error: {e}"))))
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

/// Order-preserving parallel map on a pool of `workers` threads (0 = rayon's default).
fn par_map<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    let run = || items.par_iter().map(&f).collect();
    if workers == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(run),
        Err(_) => items.iter().map(&f).collect(),
    }
}

fn labeled_sweep(params: &SuiteParams, min_order: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in params.min_order.max(min_order)..=params.max_order {
        for (mask, g) in enumerate_labeled_graphs(n, params.allow_large)? {
            out.push((format!("n={n} mask={mask:#x} g6={}", g6(&g)), g));
        }
    }
    Ok(out)
}

fn trees_in(min: usize, max: usize) -> Vec<(String, Graph)> {
    (min..=max)
        .flat_map(|n| enumerate_coded_trees(n).into_iter())
        .map(|(code, t)| (format!("tree n={} code={code}", t.order()), t))
        .collect()
}

struct Sweep {
    outcomes: Vec<Outcome>,
    notes: Vec<String>,
}

impl Sweep {
    fn plain(outcomes: Vec<Outcome>) -> Self {
        Sweep { outcomes, notes: Vec::new() }
    }
}

pub fn run_suite(id: SuiteId, params: &SuiteParams) -> Result<SuiteReport> {
    params.validate(id)?;
    let start = Instant::now();
    let sweep = match id {
        SuiteId::KrEquiv => kr_equiv(params)?,
        SuiteId::ZzEquiv => zz_equiv(params)?,
        SuiteId::KmnEquiv => kmn_equiv(params)?,
        SuiteId::CycEquiv => cyc_equiv(params)?,
        SuiteId::TreeEquiv => tree_equiv(params)?,
        SuiteId::Diam2Trees => diam2_trees(params),
        SuiteId::LayerLemma => layer_lemma(params)?,
        SuiteId::OracleXcheck => oracle_xcheck(params),
        SuiteId::TorusEvidence => torus_evidence(params),
    };
    let instances = sweep.outcomes.len();
    let failures: Vec<Failure> = sweep.outcomes.into_iter().flatten().collect();
    Ok(SuiteReport {
        suite: id,
        params: params.render(id),
        instances,
        passed: instances - failures.len(),
        failures,
        notes: sweep.notes,
        elapsed: start.elapsed(),
    })
}

// ---------------------------------------------------------------- K_r

fn kr_instance(id: &str, g: &Graph, r: usize) -> Outcome {
    guarded(id, || {
        let amenable = find_kr_amenable(g, r)?;
        let (prod, dims) = cartesian_product(g, &Graph::complete(r));
        let cert = find_eod_set(&prod, &SearchOptions::default())?;
        if amenable.is_some() != cert.is_found() {
            return Ok(Some(fail(
                id,
                format!("eod={}", cert.is_found()),
                format!("amenable={}", amenable.is_some()),
            )));
        }
        if let Some(p) = &amenable {
            let d = kr_partition_to_eod(g, p)?;
            if !is_eod_set(&prod, &d) {
                return Ok(Some(fail(id, "partition maps to an EOD-set", format!("{d} is not EOD"))));
            }
        }
        if let Some(d) = cert.found() {
            let p = eod_to_kr_partition(dims, r, d)?;
            let report = check_kr_amenable(g, &p)?;
            if !report.is_ok() {
                return Ok(Some(fail(id, "EOD-set maps to an amenable partition", &report.violations[0])));
            }
        }
        Ok(None)
    })
}

fn kr_equiv(params: &SuiteParams) -> Result<Sweep> {
    let graphs = labeled_sweep(params, 1)?;
    let items: Vec<(String, &Graph, usize)> = params
        .r_values
        .iter()
        .flat_map(|&r| graphs.iter().map(move |(id, g)| (format!("r={r} {id}"), g, r)))
        .collect();
    Ok(Sweep::plain(par_map(&items, params.workers, |(id, g, r)| kr_instance(id, g, *r))))
}

// ---------------------------------------------------------------- zig-zag

fn zz_instance(id: &str, g: &Graph) -> Outcome {
    guarded(id, || {
        let z = find_zigzag_set(g)?;
        let p = find_kr_amenable(g, 2)?;
        if z.is_some() != p.is_some() {
            return Ok(Some(fail(
                id,
                format!("k2_amenable={}", p.is_some()),
                format!("zigzag={}", z.is_some()),
            )));
        }
        if let Some(z) = &z {
            let p1 = zigzag_to_k2_partition(g, z)?;
            let back = k2_partition_to_zigzag(g, &p1)?;
            if &back != z {
                return Ok(Some(fail(id, format!("zigzag {z}"), format!("round trip gave {back}"))));
            }
            let d = kr_partition_to_eod(g, &p1)?;
            let (prod, _) = cartesian_product(g, &Graph::complete(2));
            if !is_eod_set(&prod, &d) {
                return Ok(Some(fail(id, "zig-zag set yields an EOD-set of G □ K_2", format!("{d} is not EOD"))));
            }
        }
        if let Some(p) = &p {
            let z1 = k2_partition_to_zigzag(g, p)?;
            let report = is_zigzag_set(g, &z1)?;
            if !report.is_ok() {
                return Ok(Some(fail(id, "partition yields a zig-zag set", &report.violations[0])));
            }
            let p2 = zigzag_to_k2_partition(g, &z1)?;
            if p2.members(Label::Zero) != p.members(Label::Zero) || k2_partition_to_zigzag(g, &p2)? != z1 {
                return Ok(Some(fail(id, p.to_text(), p2.to_text())));
            }
        }
        Ok(None)
    })
}

fn zz_equiv(params: &SuiteParams) -> Result<Sweep> {
    let graphs = labeled_sweep(params, 3)?;
    Ok(Sweep::plain(par_map(&graphs, params.workers, |(id, g)| zz_instance(id, g))))
}

// ---------------------------------------------------------------- K_m,n

fn kmn_instance(id: &str, g: &Graph, m: usize, n: usize) -> Outcome {
    guarded(id, || {
        let amenable = find_kmn_amenable(g, m, n)?;
        let (prod, dims) = cartesian_product(g, &Graph::complete_bipartite(m, n));
        let cert = find_eod_set(&prod, &SearchOptions::default())?;
        if amenable.is_some() != cert.is_found() {
            return Ok(Some(fail(
                id,
                format!("eod={}", cert.is_found()),
                format!("amenable={}", amenable.is_some()),
            )));
        }
        if let Some(p) = &amenable {
            let d = kmn_partition_to_eod(g, p)?;
            if !is_eod_set(&prod, &d) {
                return Ok(Some(fail(id, "partition maps to an EOD-set", format!("{d} is not EOD"))));
            }
        }
        if let Some(d) = cert.found() {
            let p = eod_to_kmn_partition(dims, m, n, d)?;
            let report = check_kmn_amenable(g, &p)?;
            if !report.is_ok() {
                return Ok(Some(fail(id, "EOD-set maps to an amenable partition", &report.violations[0])));
            }
        }
        Ok(None)
    })
}

fn kmn_equiv(params: &SuiteParams) -> Result<Sweep> {
    let mut items: Vec<(String, Graph, usize, usize)> = Vec::new();
    let fig1 = load_fixture("fig1")?;
    items.push(("fixture fig1 K_2,3".into(), fig1.graph.clone(), 2, 3));
    let graphs = labeled_sweep(params, 1)?;
    for &(m, n) in &params.kmn {
        items.extend(graphs.iter().map(|(id, g)| (format!("K_{m},{n} {id}"), g.clone(), m, n)));
    }
    let mut outcomes = vec![guarded("fixture fig1 labels", || {
        Ok((!fig1.verify()?).then(|| fail("fixture fig1 labels", "fixture verifies", "it does not")))
    })];
    outcomes.extend(par_map(&items, params.workers, |(id, g, m, n)| kmn_instance(id, g, *m, *n)));
    Ok(Sweep::plain(outcomes))
}

// ---------------------------------------------------------------- C_k parallel

fn cyc_instance(id: &str, g: &Graph, k: usize) -> Outcome {
    guarded(id, || {
        let amenable = find_cycle_parallel_amenable(g, k)?;
        let (prod, dims) = cartesian_product(g, &Graph::cycle(k)?);
        let cert = find_eod_set(&prod, &SearchOptions::parallel_to(dims, Factor::First))?;
        if amenable.is_some() != cert.is_found() {
            return Ok(Some(fail(
                id,
                format!("parallel_eod={}", cert.is_found()),
                format!("amenable={}", amenable.is_some()),
            )));
        }
        if let Some(p) = &amenable {
            let d = cycle_partition_to_parallel_eod(g, p)?;
            if !is_eod_set(&prod, &d) || !is_parallel_eod(&prod, dims, Factor::First, &d)? {
                return Ok(Some(fail(id, "partition maps to a parallel EOD-set", format!("{d}"))));
            }
        }
        if let Some(d) = cert.found() {
            let p = parallel_eod_to_cycle_partition(dims, k, d)?;
            let report = check_cycle_parallel_amenable(g, &p)?;
            if !report.is_ok() {
                return Ok(Some(fail(id, "parallel EOD-set maps to an amenable partition", &report.violations[0])));
            }
        }
        Ok(None)
    })
}

fn cyc_equiv(params: &SuiteParams) -> Result<Sweep> {
    let graphs = labeled_sweep(params, 1)?;
    let items: Vec<(String, &Graph, usize)> = params
        .cycle_k
        .iter()
        .flat_map(|&k| graphs.iter().map(move |(id, g)| (format!("C_{k} {id}"), g, k)))
        .collect();
    Ok(Sweep::plain(par_map(&items, params.workers, |(id, g, k)| cyc_instance(id, g, *k))))
}

// ---------------------------------------------------------------- trees

fn tree_instance(id: &str, t: &Graph, r: usize) -> Outcome {
    guarded(id, || {
        let recognized = recognize_tree(t, r)?;
        let amenable = find_kr_amenable(t, r)?.is_some();
        let (prod, _) = cartesian_product(t, &Graph::complete(r));
        let eod = find_eod_set(&prod, &SearchOptions::default())?.is_found();
        if recognized.is_amenable() != amenable || amenable != eod {
            return Ok(Some(fail(
                id,
                format!("eod={eod}"),
                format!("recognized={} amenable={amenable}", recognized.is_amenable()),
            )));
        }
        if let Some(trace) = recognized.trace() {
            let rebuilt = trace.replay()?;
            let want = canonical_code(t)?;
            let got = canonical_code(rebuilt.tree())?;
            if got != want || trace.order() != t.order() {
                return Ok(Some(fail(id, want, format!("trace {trace} replays to {got}"))));
            }
        }
        Ok(None)
    })
}

fn family_instance(id: &str, brute: &BTreeSet<CanonicalCode>, generated: &BTreeSet<CanonicalCode>) -> Outcome {
    if brute == generated {
        return None;
    }
    let missing: Vec<String> = brute.difference(generated).map(ToString::to_string).collect();
    let extra: Vec<String> = generated.difference(brute).map(ToString::to_string).collect();
    Some(fail(
        id,
        format!("{} amenable trees", brute.len()),
        format!(
            "{} generated; missing=[{}] extra=[{}]",
            generated.len(),
            missing.join(" "),
            extra.join(" ")
        ),
    ))
}

fn tree_equiv(params: &SuiteParams) -> Result<Sweep> {
    let trees = trees_in(params.min_order, params.max_order);
    let mut outcomes = Vec::new();
    let mut notes = Vec::new();
    let per_order: Vec<String> = (params.min_order..=params.max_order)
        .map(|n| format!("{n}:{}", trees.iter().filter(|(_, t)| t.order() == n).count()))
        .collect();
    notes.push(format!("trees per order {}", per_order.join(" ")));
    notes.push(format!("trees checked {}", trees.len()));

    for &r in &params.r_values {
        let items: Vec<(String, &Graph)> = trees.iter().map(|(id, t)| (format!("r={r} {id}"), t)).collect();
        let results = par_map(&items, params.workers, |(id, t)| tree_instance(id, t, r));
        outcomes.extend(results);

        let generated: BTreeSet<CanonicalCode> = generate_family(r, params.family_max_order)?.into_iter().collect();
        let candidates = trees_in(3, params.family_max_order);
        let flags = par_map(&candidates, params.workers, |(_, t)| find_kr_amenable(t, r).map(|p| p.is_some()));
        let mut brute = BTreeSet::new();
        for ((_, t), flag) in candidates.iter().zip(flags) {
            if flag? {
                brute.insert(canonical_code(t)?);
            }
        }
        for n in 3..=params.family_max_order {
            let at = |s: &BTreeSet<CanonicalCode>| -> BTreeSet<CanonicalCode> {
                s.iter().filter(|c| c.order() == n).cloned().collect()
            };
            outcomes.push(family_instance(&format!("family r={r} order={n}"), &at(&brute), &at(&generated)));
        }
        let orders: BTreeSet<usize> = generated.iter().map(CanonicalCode::order).collect();
        notes.push(format!(
            "r={r} family up to order {}: {} trees, orders {:?}",
            params.family_max_order,
            generated.len(),
            orders
        ));
    }
    Ok(Sweep { outcomes, notes })
}

// ---------------------------------------------------------------- diameter 2

fn diameter_two_factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("C_4", Graph::cycle(4).expect("C4")),
        ("C_5", Graph::cycle(5).expect("C5")),
        ("K_1,2", Graph::complete_bipartite(1, 2)),
        ("K_2,3", Graph::complete_bipartite(2, 3)),
    ]
}

fn diam2_trees(params: &SuiteParams) -> Sweep {
    let trees = trees_in(params.min_order, params.max_order);
    let factors = diameter_two_factors();
    let items: Vec<(String, &Graph, &Graph)> = trees
        .iter()
        .flat_map(|(id, t)| factors.iter().map(move |(name, h)| (format!("{id} H={name}"), t, h)))
        .collect();
    let results = par_map(&items, params.workers, |(id, t, h)| {
        let (prod, dims) = cartesian_product(t, h);
        let sets = enumerate_eod_sets(&prod);
        let parallel = sets
            .iter()
            .filter(|d| is_parallel_eod(&prod, dims, Factor::First, d).unwrap_or(true))
            .count();
        let outcome = (parallel > 0).then(|| fail(id, "0 parallel EOD-sets", format!("{parallel} of {}", sets.len())));
        (outcome, sets.len())
    });
    let total: usize = results.iter().map(|(_, n)| n).sum();
    let with_eod = results.iter().filter(|(_, n)| *n > 0).count();
    Sweep {
        outcomes: results.into_iter().map(|(o, _)| o).collect(),
        notes: vec![format!("{total} EOD-sets enumerated over {with_eod} products that have any")],
    }
}

// ---------------------------------------------------------------- layer lemma

/// The products whose EOD-sets the lemma is checked on: the tori of the
/// oracle sweep, trees against diameter-2 factors, and small labeled graphs
/// against `C_4` and `C_5`.
fn layer_sources(params: &SuiteParams) -> Result<Vec<(String, Graph, Graph)>> {
    let mut out = Vec::new();
    let c = |n: usize| Graph::cycle(n).expect("n >= 3");
    for t in 4..=params.torus_max {
        out.push((format!("C_4 x C_{t}"), c(4), c(t)));
    }
    for (r, t) in [(4, 4), (4, 8), (4, 6), (5, 5), (3, 6), (3, 3), (3, 4), (3, 5), (6, 6)] {
        out.push((format!("C_{r} x C_{t}"), c(r), c(t)));
    }
    for (id, t) in trees_in(3, params.tree_max_order) {
        for (name, h) in diameter_two_factors() {
            out.push((format!("{id} H={name}"), t.clone(), h));
        }
    }
    for (id, g) in labeled_sweep(params, 1)? {
        for k in [4, 5] {
            out.push((format!("{id} H=C_{k}"), g.clone(), c(k)));
        }
    }
    Ok(out)
}

fn layer_instance(id: &str, g: &Graph, h: &Graph) -> (Outcome, usize, usize) {
    let (prod, dims) = cartesian_product(g, h);
    let sets = enumerate_eod_sets(&prod);
    let mut doubles = 0;
    // Layers of a diameter-2 factor: `^gH` for H (Factor::Second), `G^h` for G.
    let checks = [(h, Factor::Second, Factor::First), (g, Factor::First, Factor::Second)];
    for d in &sets {
        for &(factor_graph, layers, other) in &checks {
            if factor_graph.diameter() != Some(2) {
                continue;
            }
            let occupancy = match layer_occupancy(&prod, dims, layers, d) {
                Ok(o) => o,
                Err(e) => return (Some(fail(id, "no error", format!("error: {e}"))), sets.len(), doubles),
            };
            let parallel = is_parallel_eod(&prod, dims, other, d).unwrap_or(false);
            for o in occupancy {
                let bad = o.count > 2 || (o.count == 2 && o.adjacent != Some(true)) || (parallel && o.count > 1);
                if bad {
                    return (
                        Some(fail(
                            id,
                            "layer meets D in <= 2 adjacent vertices (<= 1 if parallel)",
                            format!("D={d} layer {:?} at {} has {} (adjacent={:?})", layers, o.at, o.count, o.adjacent),
                        )),
                        sets.len(),
                        doubles,
                    );
                }
                doubles += usize::from(o.count == 2);
            }
        }
    }
    (None, sets.len(), doubles)
}

fn layer_lemma(params: &SuiteParams) -> Result<Sweep> {
    let sources = layer_sources(params)?;
    let results = par_map(&sources, params.workers, |(id, g, h)| layer_instance(id, g, h));
    let sets: usize = results.iter().map(|r| r.1).sum();
    let doubles: usize = results.iter().map(|r| r.2).sum();
    Ok(Sweep {
        outcomes: results.into_iter().map(|r| r.0).collect(),
        notes: vec![format!("{sets} EOD-sets checked; {doubles} layers held an adjacent pair")],
    })
}

// ---------------------------------------------------------------- oracles

#[derive(Clone, Copy, Debug)]
enum OracleCase {
    Path(usize),
    Cycle(usize),
    Grid(usize, usize),
    C4Torus(usize),
    TorusParallel(usize, usize),
    Torus(usize, usize),
}

fn oracle_cases(params: &SuiteParams) -> Vec<OracleCase> {
    let mut out = Vec::new();
    out.extend((1..=params.max_order).map(OracleCase::Path));
    out.extend((3..=params.max_order).map(OracleCase::Cycle));
    for r in [3, 4] {
        out.extend((r..=10).map(|t| OracleCase::Grid(r, t)));
    }
    out.extend((4..=params.torus_max).map(OracleCase::C4Torus));
    for (r, t) in [(4, 4), (4, 8), (4, 6), (5, 5), (3, 6)] {
        out.push(OracleCase::TorusParallel(r, t));
    }
    for (r, t) in [(3, 3), (3, 4), (3, 5), (5, 5), (6, 6)] {
        out.push(OracleCase::Torus(r, t));
    }
    out
}

fn has_eod(g: &Graph) -> Result<bool> {
    Ok(find_eod_set(g, &SearchOptions::default())?.is_found())
}

fn oracle_instance(case: OracleCase) -> Outcome {
    let id = format!("{case:?}");
    guarded(&id, || {
        let c = |n| Graph::cycle(n);
        let (oracle, truth) = match case {
            OracleCase::Path(n) => (path_eod(n)?, has_eod(&Graph::path(n))?),
            OracleCase::Cycle(n) => (cycle_eod(n)?, has_eod(&c(n)?)?),
            OracleCase::Grid(r, t) => (grid_eod(r, t)?, has_eod(&cartesian_product(&Graph::path(r), &Graph::path(t)).0)?),
            OracleCase::C4Torus(t) => (c4_torus_eod(t)?, has_eod(&cartesian_product(&c(4)?, &c(t)?).0)?),
            OracleCase::TorusParallel(r, t) => {
                let (prod, dims) = cartesian_product(&c(r)?, &c(t)?);
                let mut any = false;
                for d in enumerate_eod_sets(&prod) {
                    any |= is_parallel_eod(&prod, dims, Factor::First, &d)? || is_parallel_eod(&prod, dims, Factor::Second, &d)?;
                }
                (torus_parallel_eod(r, t)?, any)
            }
            OracleCase::Torus(r, t) => (torus_eod(r, t)?, has_eod(&cartesian_product(&c(r)?, &c(t)?).0)?),
        };
        Ok((oracle.value != truth).then(|| fail(&id, format!("solver={truth}"), oracle)))
    })
}

fn oracle_xcheck(params: &SuiteParams) -> Sweep {
    let cases = oracle_cases(params);
    Sweep::plain(par_map(&cases, params.workers, |&c| oracle_instance(c)))
}

// ---------------------------------------------------------------- torus evidence

fn torus_evidence(params: &SuiteParams) -> Sweep {
    let pairs: Vec<(usize, usize)> = (3..=params.torus_max)
        .flat_map(|r| (r..=params.torus_max).map(move |t| (r, t)))
        .collect();
    let results = par_map(&pairs, params.workers, |&(r, t)| {
        let (prod, _) = cartesian_product(&Graph::cycle(r).expect("r >= 3"), &Graph::cycle(t).expect("t >= 3"));
        has_eod(&prod)
    });
    let mut notes = Vec::new();
    let mut outcomes = Vec::new();
    let mut agree = 0;
    for (&(r, t), found) in pairs.iter().zip(results) {
        let id = format!("C_{r} x C_{t}");
        match found {
            Ok(eod) => {
                let predicted = r % 4 == 0 && t % 4 == 0;
                agree += usize::from(eod == predicted);
                let verdict = if eod == predicted { "consistent" } else { "inconsistent" };
                notes.push(format!("{id} eod={eod} conjecture={predicted} {verdict}"));
                // Evidence only: a disagreement is recorded, never failed.
                outcomes.push(None);
            }
            Err(e) => outcomes.push(Some(fail(&id, "no error", format!("error: {e}")))),
        }
    }
    let verdict = if agree == pairs.len() { "consistent" } else { "inconsistent" };
    notes.push(format!("{agree} of {} tori agree; evidence is {verdict} with the conjecture", pairs.len()));
    Sweep { outcomes, notes }
}
