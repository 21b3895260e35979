//! Report schema shared by every subcommand: a stable JSON envelope and the
//! plain-text rendering of the same content.

use drs_core::families::{ClosedFormPsi, FamilyDescriptor};
use drs_core::solver::{Certificate, LowerBoundKind, SolveResult, UpperBoundKind};
use drs_core::{DistanceMatrix, Graph, Verdict, VertexSet};
use serde::Serialize;

/// Envelope around every report. Field order is part of the format.
#[derive(Serialize)]
pub struct RunReport<T: Serialize> {
    pub schema: u32,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    pub result: T,
}

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub diam: u32,
    pub leaves: usize,
}

impl GraphSummary {
    pub fn new(g: &Graph, dm: &DistanceMatrix) -> Self {
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            diam: dm.diam(),
            leaves: g.leaves().len(),
        }
    }

    fn text_line(&self) -> String {
        let edges = if self.edges == 1 { "edge" } else { "edges" };
        let leaves = if self.leaves == 1 { "leaf" } else { "leaves" };
        format!(
            "graph: n={}, {} {edges}, diameter {}, {} {leaves}",
            self.n, self.edges, self.diam, self.leaves
        )
    }
}

#[derive(Serialize)]
pub struct VerifyPayload {
    pub set: VertexSet,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct ConstructPayload {
    pub method: &'static str,
    pub set: VertexSet,
    pub size: usize,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_basis: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_len: Option<usize>,
}

#[derive(Serialize)]
pub struct FamilyEntry {
    #[serde(flatten)]
    pub family: FamilyDescriptor,
    /// Absent for descriptors without a closed form (bare cycles as
    /// unicyclic graphs; the cycle descriptor carries the value instead).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<ClosedFormPsi>,
}

#[derive(Serialize)]
pub struct FamilyPayload {
    pub families: Vec<FamilyEntry>,
}

#[derive(Serialize)]
pub struct ClassifyPayload {
    pub extremal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDescriptor>,
}

/// Renders a report to the requested format; JSON is pretty-printed and
/// deterministic for a given input.
pub fn emit<T: Serialize>(report: &RunReport<T>, json: bool, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        if let Some(summary) = &report.graph {
            println!("{}", summary.text_line());
        }
        println!("{}", text());
    }
}

pub fn family_name(fd: &FamilyDescriptor) -> String {
    match *fd {
        FamilyDescriptor::Path { n } => format!("path on {n} vertices"),
        FamilyDescriptor::Cycle { n } => format!("cycle on {n} vertices"),
        FamilyDescriptor::Complete { n } => format!("complete graph on {n} vertices"),
        FamilyDescriptor::CompleteBipartite { r, s } => {
            format!("complete bipartite graph with parts {r} and {s}")
        }
        FamilyDescriptor::Star { n } => format!("star on {n} vertices"),
        FamilyDescriptor::JoinK2Empty { m } => {
            format!("edge joined to {m} independent vertices")
        }
        FamilyDescriptor::Tree { n, leaves } => format!("tree on {n} vertices with {leaves} leaves"),
        FamilyDescriptor::Unicyclic { n, m, leaves } => {
            format!("unicyclic graph on {n} vertices (cycle length {m}, {leaves} leaves)")
        }
    }
}

pub fn closed_form_text(cf: &ClosedFormPsi) -> String {
    match cf {
        ClosedFormPsi::Exact { value } => format!("psi = {value}"),
        ClosedFormPsi::Interval { lo, hi } => format!("psi in [{lo}, {hi}]"),
    }
}

pub fn solve_text(res: &SolveResult) -> String {
    let certificate = match res.certificate {
        Certificate::LowerBoundMet => "lower bound met".to_string(),
        Certificate::ExhaustedBelow { up_to } => {
            format!("all sets of size <= {up_to} exhausted")
        }
    };
    let lower_kind = match res.lower_bound.kind {
        LowerBoundKind::Trivial2 => "pair minimum",
        LowerBoundKind::LeafCount => "leaf count",
        LowerBoundKind::TwinClasses => "twin classes",
    };
    let upper_kind = match res.upper_bound.kind {
        UpperBoundKind::NMinus1 => "n-1",
        UpperBoundKind::NMinusDiamPlus1 => "n-d+1",
        UpperBoundKind::Constructive => "constructive",
    };
    format!(
        "psi = {}\nwitness = {}\nlower bound {} ({})\nupper bound {} ({})\ncertificate: {}\ncandidates examined: {}",
        res.psi,
        res.witness,
        res.lower_bound.value,
        lower_kind,
        res.upper_bound.value,
        upper_kind,
        certificate,
        res.stats.candidates_examined,
    )
}

pub fn verify_text(p: &VerifyPayload) -> String {
    match p.verdict.witness() {
        None => format!("set {} of size {}\nverdict: doubly resolving", p.set, p.set.len()),
        Some(w) => format!(
            "set {} of size {}\nverdict: failed\nunresolved pair ({}, {}): every member gives difference {}",
            p.set,
            p.set.len(),
            w.u,
            w.v,
            w.constant
        ),
    }
}

pub fn construct_text(p: &ConstructPayload) -> String {
    let mut out = format!(
        "method: {}\nset {} of size {} (verified)",
        p.method, p.set, p.size
    );
    if let (Some(basis), Some(len)) = (&p.cycle_basis, p.cycle_len) {
        out.push_str(&format!("\ncycle basis {basis} on the {len}-cycle"));
    }
    out
}

pub fn family_text(p: &FamilyPayload) -> String {
    if p.families.is_empty() {
        return "families: none recognized".to_string();
    }
    let mut out = String::from("families:");
    for entry in &p.families {
        let psi = match &entry.psi {
            Some(cf) => closed_form_text(cf),
            None => "no closed form".to_string(),
        };
        out.push_str(&format!("\n  {} - {}", family_name(&entry.family), psi));
    }
    out
}

pub fn classify_text(p: &ClassifyPayload) -> String {
    match &p.family {
        Some(fd) => format!("psi = n - 1: yes ({})", family_name(fd)),
        None => "psi = n - 1: no".to_string(),
    }
}
