//! Result documents.
//!
//! Every solver and analysis output converts into one [`ResultDocument`].
//! The machine format is that document as JSON; fields that do not apply
//! to a given `kind` are omitted. The field set is closed: parsing rejects
//! unknown fields.
//!
//! | field | kinds | meaning |
//! |---|---|---|
//! | `format_version` | all | always `1` |
//! | `kind` | all | `solve`, `verify`, `decide`, `orbit`, `random`, `theorem-check` |
//! | `dims`, `mode` | all but `theorem-check` | instance shape |
//! | `solver` | solve | `bfs`, `bibfs`, `ida`, `greedy` |
//! | `outcome` | solve | `solved`, `unreachable`, `budget-exhausted` |
//! | `moves`, `length` | solve, verify | canonical move notation and its length |
//! | `optimal` | solve | `true` only for exact solvers |
//! | `solved`, `valid`, `failing_index` | solve, verify | replay results |
//! | `verdict`, `parity`, `reason` | decide, solve | reachability |
//! | `orbit_size`, `eccentricity`, `histogram`, `complete` | orbit | `histogram` is `[[distance, count], ...]` |
//! | `nodes_expanded`, `elapsed_ms` | solve, orbit | search statistics |
//! | `seed`, `policy`, `instance` | random | generator input and the instance document |
//! | `shapes`, `all_pass` | theorem-check | one row per shape |

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::Policy;
use crate::analysis::{OrbitReport, Reachability, TheoremReport};
use crate::io::instance::write_instance;
use crate::model::{Dims, Mode, MoveSequence, MultiArray};
use crate::solve::{SearchFailure, Solution, Verification};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Solve,
    Verify,
    Decide,
    Orbit,
    Random,
    TheoremCheck,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Solve => "solve",
            Kind::Verify => "verify",
            Kind::Decide => "decide",
            Kind::Orbit => "orbit",
            Kind::Random => "random",
            Kind::TheoremCheck => "theorem-check",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeRow {
    pub dims: [usize; 2],
    pub predicted: String,
    pub expected: u64,
    pub orbit_size: u64,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub format_version: u32,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moves: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solved: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_size: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eccentricity: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub histogram: Option<Vec<(u32, u64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes_expanded: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shapes: Option<Vec<ShapeRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_pass: Option<bool>,
}

impl ResultDocument {
    pub fn new(kind: Kind) -> Self {
        ResultDocument {
            format_version: FORMAT_VERSION,
            kind,
            dims: None,
            mode: None,
            solver: None,
            outcome: None,
            moves: None,
            length: None,
            optimal: None,
            solved: None,
            valid: None,
            failing_index: None,
            verdict: None,
            parity: None,
            reason: None,
            orbit_size: None,
            eccentricity: None,
            histogram: None,
            complete: None,
            nodes_expanded: None,
            elapsed_ms: None,
            seed: None,
            policy: None,
            instance: None,
            shapes: None,
            all_pass: None,
        }
    }

    fn shaped(kind: Kind, dims: Dims, mode: Mode) -> Self {
        let mut doc = ResultDocument::new(kind);
        doc.dims = Some(dims.as_slice().to_vec());
        doc.mode = Some(mode.to_string());
        doc
    }

    /// Drops wall-clock fields so that repeated runs are byte-identical.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

pub fn solve_document(
    ma: &MultiArray,
    solver: &str,
    result: &Result<Solution, SearchFailure>,
) -> ResultDocument {
    let mut doc = ResultDocument::shaped(Kind::Solve, ma.dims(), ma.mode());
    doc.solver = Some(solver.to_string());
    match result {
        Ok(sol) => {
            doc.outcome = Some("solved".into());
            doc.moves = Some(sol.moves.to_string());
            doc.length = Some(sol.length());
            doc.optimal = Some(sol.optimal);
            doc.solved = Some(true);
            doc.nodes_expanded = Some(sol.nodes_expanded);
            doc.elapsed_ms = Some(sol.elapsed.as_millis() as u64);
        }
        Err(SearchFailure::Unreachable {
            proof,
            nodes_expanded,
        }) => {
            doc.outcome = Some("unreachable".into());
            doc.solved = Some(false);
            doc.reason = Some(proof.to_string());
            doc.nodes_expanded = Some(*nodes_expanded);
        }
        Err(SearchFailure::BudgetExhausted {
            limit,
            nodes_expanded,
        }) => {
            doc.outcome = Some("budget-exhausted".into());
            doc.solved = Some(false);
            doc.reason = Some(format!("{} reached", limit.as_str()));
            doc.nodes_expanded = Some(*nodes_expanded);
        }
        Err(SearchFailure::Model(e)) => {
            doc.outcome = Some("error".into());
            doc.solved = Some(false);
            doc.reason = Some(e.to_string());
        }
    }
    doc
}

pub fn verify_document(ma: &MultiArray, moves: &MoveSequence, v: &Verification) -> ResultDocument {
    let mut doc = ResultDocument::shaped(Kind::Verify, ma.dims(), ma.mode());
    doc.moves = Some(moves.to_string());
    doc.length = Some(moves.len());
    doc.valid = Some(v.valid);
    doc.solved = Some(v.solved);
    if let Some((index, err)) = &v.failure {
        doc.failing_index = Some(*index);
        doc.reason = Some(err.to_string());
    }
    doc
}

pub fn decide_document(dims: Dims, mode: Mode, r: &Reachability) -> ResultDocument {
    let mut doc = ResultDocument::shaped(Kind::Decide, dims, mode);
    doc.verdict = Some(r.verdict.to_string());
    doc.parity = r.parity.map(|p| p.to_string());
    doc.reason = Some(r.reason.clone());
    doc
}

pub fn orbit_document(r: &OrbitReport) -> ResultDocument {
    let mut doc = ResultDocument::shaped(Kind::Orbit, r.dims, r.mode);
    doc.orbit_size = Some(r.orbit_size);
    doc.eccentricity = Some(r.eccentricity);
    doc.histogram = Some(r.histogram.clone());
    doc.complete = Some(r.complete);
    doc.nodes_expanded = Some(r.nodes_expanded);
    doc.elapsed_ms = Some(r.elapsed_ms as u64);
    doc
}

pub fn random_document(ma: &MultiArray, seed: u64, policy: Policy) -> ResultDocument {
    let mut doc = ResultDocument::shaped(Kind::Random, ma.dims(), ma.mode());
    doc.seed = Some(seed);
    doc.policy = Some(policy.to_string());
    doc.instance = Some(write_instance(ma));
    doc
}

pub fn theorem_document(r: &TheoremReport) -> ResultDocument {
    let mut doc = ResultDocument::new(Kind::TheoremCheck);
    doc.shapes = Some(
        r.rows
            .iter()
            .map(|row| ShapeRow {
                dims: [row.rows, row.cols],
                predicted: row.predicted.to_string(),
                expected: row.expected,
                orbit_size: row.orbit_size,
                status: row.status.to_string(),
            })
            .collect(),
    );
    doc.all_pass = Some(r.all_pass());
    doc
}

/// Renders a document in the requested format.
pub fn emit_result(doc: &ResultDocument, format: Format) -> String {
    match format {
        Format::Machine => {
            let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(doc),
    }
}

pub fn parse_result(text: &str) -> Result<ResultDocument, serde_json::Error> {
    serde_json::from_str(text)
}

fn render_text(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let mut field = |name: &str, value: Option<String>| {
        if let Some(v) = value {
            let _ = writeln!(out, "{name}: {v}");
        }
    };
    field("kind", Some(doc.kind.as_str().to_string()));
    field(
        "dims",
        doc.dims.as_ref().map(|d| {
            d.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }),
    );
    field("mode", doc.mode.clone());
    field("solver", doc.solver.clone());
    field("outcome", doc.outcome.clone());
    field("verdict", doc.verdict.clone());
    field("parity", doc.parity.clone());
    field("reason", doc.reason.clone());
    field("moves", doc.moves.clone());
    field("length", doc.length.map(|v| v.to_string()));
    field("optimal", doc.optimal.map(|v| v.to_string()));
    field("valid", doc.valid.map(|v| v.to_string()));
    field("failing_index", doc.failing_index.map(|v| v.to_string()));
    field("solved", doc.solved.map(|v| v.to_string()));
    field("orbit_size", doc.orbit_size.map(|v| v.to_string()));
    field("eccentricity", doc.eccentricity.map(|v| v.to_string()));
    field("complete", doc.complete.map(|v| v.to_string()));
    field("nodes_expanded", doc.nodes_expanded.map(|v| v.to_string()));
    field("elapsed_ms", doc.elapsed_ms.map(|v| v.to_string()));
    field("seed", doc.seed.map(|v| v.to_string()));
    field("policy", doc.policy.clone());
    field("all_pass", doc.all_pass.map(|v| v.to_string()));
    if let Some(h) = &doc.histogram {
        out.push_str("histogram:\n");
        for (d, c) in h {
            let _ = writeln!(out, "  {d} {c}");
        }
    }
    if let Some(shapes) = &doc.shapes {
        out.push_str("shapes:\n");
        for s in shapes {
            let _ = writeln!(
                out,
                "  {}x{} {} orbit={} expected={} {}",
                s.dims[0], s.dims[1], s.predicted, s.orbit_size, s.expected, s.status
            );
        }
    }
    if let Some(inst) = &doc.instance {
        out.push_str("instance:\n");
        out.push_str(inst);
    }
    out
}
