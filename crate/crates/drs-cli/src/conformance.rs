//! Randomized self-checks: each property draws graphs from a seeded stream
//! and verifies one guarantee the library makes. Failures report a concrete
//! counterexample as an edge list.

use drs_core::constructive::{construct_diametral, construct_unicyclic};
use drs_core::families::{classify_n_minus_1, closed_form_psi, recognize, ClosedFormPsi};
use drs_core::resolve::is_doubly_resolving_set;
use drs_core::solver::ORACLE_CAP;
use drs_core::{generate, psi_brute_oracle, psi_exact_capped, Graph, GraphSpec, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub struct Config {
    pub seed: u64,
    pub count: u32,
    pub max_n: usize,
    pub cap: usize,
}

#[derive(Serialize)]
pub struct ConformancePayload {
    pub seed: u64,
    pub count: u32,
    pub max_n: usize,
    pub cap: usize,
    pub properties: Vec<PropertyReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub status: Status,
    pub cases: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Serialize, PartialEq, Eq, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    pub message: String,
}

impl Counterexample {
    fn new(g: &Graph, message: String) -> Self {
        Counterexample {
            n: g.n(),
            edges: g.edges(),
            set: None,
            message,
        }
    }

    fn with_set(g: &Graph, set: &[usize], message: String) -> Self {
        Counterexample {
            set: Some(set.to_vec()),
            ..Counterexample::new(g, message)
        }
    }
}

/// Which caps a property depends on; an out-of-range `max_n` skips the
/// property rather than shrinking its cases.
#[derive(Clone, Copy)]
enum Gate {
    Always,
    Solver,
    Oracle,
}

pub fn run(cfg: &Config) -> ConformancePayload {
    type Body = fn(&Config, &mut ChaCha8Rng) -> Result<(), Counterexample>;
    let properties: [(&'static str, Gate, Body); 12] = [
        ("diametral-construction", Gate::Always, prop_diametral),
        ("verifier-equivalence", Gate::Always, prop_verifier_equivalence),
        ("unicyclic-construction", Gate::Always, prop_unicyclic_construction),
        ("psi-bounds", Gate::Solver, prop_psi_bounds),
        ("leaf-forcing", Gate::Solver, prop_leaf_forcing),
        ("twin-forcing", Gate::Solver, prop_twin_forcing),
        ("twin-swap", Gate::Solver, prop_twin_swap),
        ("closed-form-vs-solver", Gate::Solver, prop_closed_form),
        ("characterization-vs-solver", Gate::Solver, prop_characterization),
        ("unicyclic-sandwich", Gate::Solver, prop_unicyclic_sandwich),
        ("oracle-agreement", Gate::Oracle, prop_oracle_agreement),
        ("tree-uniqueness", Gate::Oracle, prop_tree_uniqueness),
    ];

    let mut reports = Vec::with_capacity(properties.len());
    for (index, (name, gate, body)) in properties.iter().enumerate() {
        reports.push(run_property(cfg, index as u64, name, *gate, *body));
    }
    let count_status =
        |s: Status| reports.iter().filter(|r| r.status == s).count();
    ConformancePayload {
        seed: cfg.seed,
        count: cfg.count,
        max_n: cfg.max_n,
        cap: cfg.cap,
        passed: count_status(Status::Pass),
        failed: count_status(Status::Fail),
        skipped: count_status(Status::Skipped),
        properties: reports,
    }
}

fn run_property(
    cfg: &Config,
    index: u64,
    name: &'static str,
    gate: Gate,
    body: fn(&Config, &mut ChaCha8Rng) -> Result<(), Counterexample>,
) -> PropertyReport {
    let skip_reason = match gate {
        Gate::Always => None,
        Gate::Solver if cfg.max_n > cfg.cap => Some(format!(
            "max-n {} exceeds the solver cap {}",
            cfg.max_n, cfg.cap
        )),
        Gate::Oracle if cfg.max_n > ORACLE_CAP => Some(format!(
            "max-n {} exceeds the oracle cap {ORACLE_CAP}",
            cfg.max_n
        )),
        _ => None,
    };
    if let Some(reason) = skip_reason {
        return PropertyReport {
            name,
            status: Status::Skipped,
            cases: 0,
            detail: Some(reason),
            counterexample: None,
        };
    }
    for case in 0..cfg.count {
        // One independent, reproducible stream per (property, case).
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(index << 32 | case as u64);
        if let Err(ce) = body(cfg, &mut rng) {
            return PropertyReport {
                name,
                status: Status::Fail,
                cases: case + 1,
                detail: Some(format!("case {case} failed")),
                counterexample: Some(ce),
            };
        }
    }
    PropertyReport {
        name,
        status: Status::Pass,
        cases: cfg.count,
        detail: None,
        counterexample: None,
    }
}

/// Random connected graph with `min_n..=max_n` vertices: a tree, a unicyclic
/// graph, or a connected G(n, p).
fn draw_connected(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let spec = match rng.gen_range(0..3u8) {
        0 => GraphSpec::RandomTree(n),
        1 => GraphSpec::RandomUnicyclic(n.max(3)),
        _ => {
            let p = [0.25, 0.4, 0.6][rng.gen_range(0..3usize)];
            GraphSpec::RandomConnected { n, p }
        }
    };
    generate(spec, rng.gen()).expect("generator parameters are in range")
}

fn draw_unicyclic_with_tree(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(4..=max_n.max(4));
        let g = generate(GraphSpec::RandomUnicyclic(n), rng.gen()).unwrap();
        if !g.is_cycle_graph() {
            return g;
        }
    }
}

/// Subset of `0..n` with at least two members.
fn draw_set(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    let mut members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    while members.len() < 2 {
        let v = rng.gen_range(0..n);
        if !members.contains(&v) {
            members.push(v);
        }
    }
    VertexSet::new(members, n).unwrap()
}

/// The definition, checked literally against raw matrix entries.
fn literal_doubly_resolving(g: &Graph, w: &[usize]) -> bool {
    let dm = g.distance_matrix().unwrap();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let resolved = w.iter().enumerate().any(|(i, &x)| {
                w[i + 1..].iter().any(|&y| {
                    dm.get(v, x) as i64 - dm.get(u, x) as i64
                        != dm.get(v, y) as i64 - dm.get(u, y) as i64
                })
            });
            if !resolved {
                return false;
            }
        }
    }
    true
}

fn prop_diametral(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 3, cfg.max_n.max(3));
    let dm = g.distance_matrix().unwrap();
    let set = construct_diametral(&g, &dm)
        .map_err(|e| Counterexample::new(&g, format!("construction failed: {e}")))?;
    if set.len() != g.n() - dm.diam() as usize + 1 {
        return Err(Counterexample::with_set(
            &g,
            set.members(),
            format!("size {} is not n - d + 1", set.len()),
        ));
    }
    if !is_doubly_resolving_set(&dm, &set).unwrap() {
        return Err(Counterexample::with_set(
            &g,
            set.members(),
            "diametral complement does not doubly resolve".into(),
        ));
    }
    Ok(())
}

fn prop_verifier_equivalence(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 2, cfg.max_n);
    let set = draw_set(rng, g.n());
    let dm = g.distance_matrix().unwrap();
    let fast = is_doubly_resolving_set(&dm, &set).unwrap();
    let literal = literal_doubly_resolving(&g, set.members());
    if fast != literal {
        return Err(Counterexample::with_set(
            &g,
            set.members(),
            format!("verifier says {fast}, the definition says {literal}"),
        ));
    }
    Ok(())
}

fn prop_unicyclic_construction(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_unicyclic_with_tree(rng, cfg.max_n);
    let built = construct_unicyclic(&g)
        .map_err(|e| Counterexample::new(&g, format!("construction failed: {e}")))?;
    let dm = g.distance_matrix().unwrap();
    if !is_doubly_resolving_set(&dm, &built.set).unwrap() {
        return Err(Counterexample::with_set(
            &g,
            built.set.members(),
            "leaf-plus-cycle set does not doubly resolve".into(),
        ));
    }
    let slack = if built.cycle_len % 2 == 1 { 1 } else { 2 };
    if built.set.len() > built.leaf_count + slack {
        return Err(Counterexample::with_set(
            &g,
            built.set.members(),
            format!("size {} exceeds leaves + {slack}", built.set.len()),
        ));
    }
    Ok(())
}

fn prop_psi_bounds(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 2, cfg.max_n);
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    let n = g.n();
    let dm = g.distance_matrix().unwrap();
    let mut violations = Vec::new();
    if res.psi < 2 {
        violations.push(format!("psi={} below 2", res.psi));
    }
    if res.psi < res.lower_bound.value || res.psi > res.upper_bound.value {
        violations.push(format!(
            "psi={} outside [{}, {}]",
            res.psi, res.lower_bound.value, res.upper_bound.value
        ));
    }
    if n >= 3 && res.psi > n - 1 {
        violations.push(format!("psi={} exceeds n-1", res.psi));
    }
    if n >= 3 && res.psi > n - dm.diam() as usize + 1 {
        violations.push(format!("psi={} exceeds n-d+1", res.psi));
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Counterexample::with_set(
            &g,
            res.witness.members(),
            violations.join("; "),
        ))
    }
}

fn prop_leaf_forcing(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 2, cfg.max_n);
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    for leaf in g.leaves().iter() {
        if !res.witness.contains(leaf) {
            return Err(Counterexample::with_set(
                &g,
                res.witness.members(),
                format!("minimum witness omits leaf {leaf}"),
            ));
        }
    }
    Ok(())
}

fn prop_twin_forcing(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 2, cfg.max_n);
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    for class in &g.twin_partition().classes {
        let missing = class
            .members
            .iter()
            .filter(|&&v| !res.witness.contains(v))
            .count();
        if missing > 1 {
            return Err(Counterexample::with_set(
                &g,
                res.witness.members(),
                format!("witness misses {missing} members of a twin class"),
            ));
        }
    }
    Ok(())
}

fn prop_twin_swap(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 2, cfg.max_n);
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    let dm = g.distance_matrix().unwrap();
    for class in &g.twin_partition().classes {
        let out = class.members.iter().find(|&&v| !res.witness.contains(v));
        let Some(&out) = out else { continue };
        for &inside in class.members.iter().filter(|&&v| res.witness.contains(v)) {
            let members: Vec<usize> = res
                .witness
                .iter()
                .map(|v| if v == inside { out } else { v })
                .collect();
            let swapped = VertexSet::new(members, g.n()).unwrap();
            if !is_doubly_resolving_set(&dm, &swapped).unwrap() {
                return Err(Counterexample::with_set(
                    &g,
                    swapped.members(),
                    format!("swapping twin {inside} for {out} broke the witness"),
                ));
            }
        }
    }
    Ok(())
}

fn prop_closed_form(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    // A random rigid family instance fitting under the cap (main guarantees
    // max-n and cap are at least 4 here).
    let max_n = cfg.max_n.min(cfg.cap);
    let spec = match rng.gen_range(0..5u8) {
        0 => GraphSpec::Path(rng.gen_range(2..=max_n)),
        1 => GraphSpec::Cycle(rng.gen_range(3..=max_n)),
        2 => GraphSpec::Complete(rng.gen_range(2..=max_n)),
        3 => {
            // r.max(2) keeps the order at 3 or more when r = 1.
            let r = rng.gen_range(1..=max_n / 2);
            let s = rng.gen_range(r.max(2)..=max_n - r);
            GraphSpec::CompleteBipartite(r, s)
        }
        _ => GraphSpec::JoinK2Empty(rng.gen_range(1..=max_n - 2)),
    };
    let g = generate(spec, 0).unwrap();
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    for fd in recognize(&g).unwrap() {
        match closed_form_psi(&fd) {
            Ok(ClosedFormPsi::Exact { value }) if value != res.psi => {
                return Err(Counterexample::new(
                    &g,
                    format!("{fd:?} closed form {value} but solver found {}", res.psi),
                ));
            }
            Ok(ClosedFormPsi::Interval { lo, hi }) if res.psi < lo || res.psi > hi => {
                return Err(Counterexample::new(
                    &g,
                    format!("{fd:?} interval [{lo}, {hi}] misses psi {}", res.psi),
                ));
            }
            _ => {}
        }
    }
    Ok(())
}

fn prop_characterization(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 3, cfg.max_n.max(3));
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    let family = classify_n_minus_1(&g).unwrap();
    let extremal = res.psi == g.n() - 1;
    if family.is_some() != extremal {
        return Err(Counterexample::new(
            &g,
            format!("classifier {family:?} disagrees with psi={}", res.psi),
        ));
    }
    Ok(())
}

fn prop_unicyclic_sandwich(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_unicyclic_with_tree(rng, cfg.max_n.min(cfg.cap));
    let res = psi_exact_capped(&g, cfg.cap).unwrap();
    let l = g.leaves().len();
    let m = g.cycle_structure().unwrap().m();
    let hi = l + if m % 2 == 1 { 1 } else { 2 };
    if res.psi < l || res.psi > hi {
        return Err(Counterexample::with_set(
            &g,
            res.witness.members(),
            format!("psi={} outside [{l}, {hi}]", res.psi),
        ));
    }
    let built = construct_unicyclic(&g).unwrap();
    if built.extra.is_empty() && res.psi != l {
        return Err(Counterexample::new(
            &g,
            format!("all-branch cycle basis but psi={} != {l}", res.psi),
        ));
    }
    Ok(())
}

fn prop_oracle_agreement(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let g = draw_connected(rng, 2, cfg.max_n);
    let fast = psi_exact_capped(&g, cfg.cap).unwrap();
    let oracle = psi_brute_oracle(&g).unwrap();
    if fast.psi != oracle.psi || fast.witness != oracle.witness {
        return Err(Counterexample::new(
            &g,
            format!(
                "solver psi={} {} vs oracle psi={} {}",
                fast.psi, fast.witness, oracle.psi, oracle.witness
            ),
        ));
    }
    Ok(())
}

fn prop_tree_uniqueness(cfg: &Config, rng: &mut ChaCha8Rng) -> Result<(), Counterexample> {
    let n = rng.gen_range(2..=cfg.max_n.max(2));
    let g = generate(GraphSpec::RandomTree(n), rng.gen()).unwrap();
    let leaves = g.leaves();
    // Every set of the leaf count other than the leaf set must fail, and the
    // leaf set itself must verify.
    if !literal_doubly_resolving(&g, leaves.members()) {
        return Err(Counterexample::with_set(
            &g,
            leaves.members(),
            "leaf set does not doubly resolve".into(),
        ));
    }
    let k = leaves.len();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((start, prefix)) = stack.pop() {
        if prefix.len() == k {
            if prefix != leaves.members() && literal_doubly_resolving(&g, &prefix) {
                return Err(Counterexample::with_set(
                    &g,
                    &prefix,
                    "a non-leaf set of the same size doubly resolves".into(),
                ));
            }
            continue;
        }
        for v in start..n {
            let mut next = prefix.clone();
            next.push(v);
            stack.push((v + 1, next));
        }
    }
    // No smaller set may work either.
    if k > 2 {
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
        while let Some((start, prefix)) = stack.pop() {
            if prefix.len() == k - 1 {
                if literal_doubly_resolving(&g, &prefix) {
                    return Err(Counterexample::with_set(
                        &g,
                        &prefix,
                        "a set below the leaf count doubly resolves".into(),
                    ));
                }
                continue;
            }
            for v in start..n {
                let mut next = prefix.clone();
                next.push(v);
                stack.push((v + 1, next));
            }
        }
    }
    Ok(())
}

pub fn conformance_text(p: &ConformancePayload) -> String {
    let mut out = format!(
        "conformance: seed {}, {} cases per property, max n {}, cap {}",
        p.seed, p.count, p.max_n, p.cap
    );
    for prop in &p.properties {
        let line = match prop.status {
            Status::Pass => format!("  {}: pass ({} cases)", prop.name, prop.cases),
            Status::Fail => {
                let mut s = format!(
                    "  {}: FAIL ({})",
                    prop.name,
                    prop.detail.as_deref().unwrap_or("")
                );
                if let Some(ce) = &prop.counterexample {
                    s.push_str(&format!(
                        "\n    counterexample: n={} edges={:?}",
                        ce.n, ce.edges
                    ));
                    if let Some(set) = &ce.set {
                        s.push_str(&format!(" set={set:?}"));
                    }
                    s.push_str(&format!("\n    {}", ce.message));
                }
                s
            }
            Status::Skipped => format!(
                "  {}: skipped ({})",
                prop.name,
                prop.detail.as_deref().unwrap_or("")
            ),
        };
        out.push('\n');
        out.push_str(&line);
    }
    out.push('\n');
    out.push_str(&format!(
        "{} passed, {} failed, {} skipped",
        p.passed, p.failed, p.skipped
    ));
    out
}
