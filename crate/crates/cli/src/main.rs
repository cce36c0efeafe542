//! `hamsq`: decide, build and check hamiltonian cycles in squares of graphs.
//!
//! Graphs are read as edge lists (`-` is stdin). Results go to stdout as
//! JSON, diagnostics to stderr. Exit codes: 0 success or hamiltonian, 1
//! failed verification, 2 not hamiltonian, 3 out of class, 4 budget or cap
//! exceeded, 64 usage, 65 malformed input, 66 unreadable file, 70 internal
//! defect.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hamsq_core::blocks::{decompose, BlShape, BlockKind, ClassCheck, EndStatus};
use hamsq_core::explore::explore_star_block;
use hamsq_core::generate::Family;
use hamsq_core::io::{to_dot, CertificateDocument};
use hamsq_core::{
    acceptable_cycle, branch_point_cycle, classify_vertex_type, decide_and_construct,
    find_ham_cycle_constrained, star_block_cycle, thomassen_path_cycle, verify_decision,
    Certificate, CycleConstraint, Decision, EdgeListDocument, Error, HamCycle, Mode, Provenance,
    SearchLimits, VerificationReport, Vertex, Violation, ViolationKind,
};

const FAMILY_HELP: &str = "\
Instance family to write as an edge list:
  figure1                 three triangles v1v2v4, v1v5v7, v1v8v9 sharing v1,
                          with pendant edges v2v3, v5v6, v9v10
  figure2:n1,n2,n3,n4,n5  central block K_{2,5}: L and R each joined to
                          c1..c5 (edges L-ci, R-ci); a clique K_ni is
                          attached at ci on new vertices k8, k9, ...
                          in order; every ni >= 2
  block-path:SPEC         blocks in a chain, e.g. k3,2,c5 (2 = single edge,
                          kN = clique, cN = cycle)
  star-cut:LEG/LEG/...    block chains hung at vertex 0, e.g. 2,2/k3/2
  random:SEED,N           seeded connected graph on N vertices";

#[derive(Parser)]
#[command(name = "hamsq", version, about = "Hamiltonian cycles in squares of graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Largest graph handed to exhaustive search [env: HAMSQ_CAP]
    #[arg(long)]
    cap: Option<usize>,
    /// Node expansions allowed per search
    #[arg(long)]
    budget: Option<u64>,
}

impl LimitArgs {
    fn limits(self) -> SearchLimits {
        let mut l = SearchLimits::from_env();
        if let Some(cap) = self.cap {
            l.cap = cap;
        }
        if let Some(b) = self.budget {
            l.budget = b;
        }
        l
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Constructive,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Block graph a path; anchors are non-cut vertices of the two endblocks
    Thomassen,
    /// A single branch point; the anchor is that cut vertex
    Lemma1,
    /// The full recursive construction
    Main,
    /// Block graph a star centered at a 2-connected block
    StarBlock,
}

#[derive(Subcommand)]
enum Cmd {
    /// Block decomposition, block-graph shape, t per cut vertex, class check
    Analyze { file: String },
    /// Decide whether the square is hamiltonian and emit a certificate
    Decide {
        file: String,
        #[arg(long, value_enum, default_value = "constructive")]
        mode: ModeArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run one named construction and emit a certificate
    Construct {
        file: String,
        #[arg(long = "theorem", value_enum)]
        construction: Construction,
        /// Comma-separated anchor labels
        #[arg(long)]
        anchors: Option<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Re-check a certificate against a graph
    Verify {
        graph: String,
        certificate: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Vertex type 1-4 with a witness cycle
    Classify {
        file: String,
        #[arg(long)]
        vertex: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Constrained exhaustive search
    Oracle {
        file: String,
        /// Edges `u-v` the cycle must use, comma separated
        #[arg(long, value_delimiter = ',')]
        require_edges: Vec<String>,
        /// Edges `u-v` the cycle must avoid, comma separated
        #[arg(long, value_delimiter = ',')]
        forbid_edges: Vec<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Write an instance as an edge list
    Generate {
        #[arg(long, long_help = FAMILY_HELP)]
        family: String,
    },
    /// Search star-at-block instances for non-hamiltonian squares
    ExploreConjecture {
        /// Largest center block order
        #[arg(long, default_value_t = 5)]
        max_block: usize,
        /// Most legs hung on the center
        #[arg(long, default_value_t = 5)]
        legs: usize,
        #[arg(long, default_value_t = 200_000)]
        max_instances: usize,
        /// Non-hamiltonian examples to print in full
        #[arg(long, default_value_t = 10)]
        max_findings: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Graphviz rendering; cycle edges highlighted when a certificate is given
    ExportDot {
        file: String,
        /// Also draw square-only pairs (dashed)
        #[arg(long)]
        square: bool,
        #[arg(long)]
        certificate: Option<String>,
    },
}

/// A finished command: what to print and the exit code.
struct Fail {
    code: u8,
    msg: String,
}

type Out = Result<u8, Fail>;

fn fail(code: u8, msg: impl Into<String>) -> Fail {
    Fail {
        code,
        msg: msg.into(),
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Defect(_) => 70,
            Error::BadParams(_) => 64,
            Error::BudgetExceeded(_) | Error::SizeCapExceeded { .. } => 4,
            _ => 65,
        };
        fail(code, e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, Fail> {
    let mut s = String::new();
    let r = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    r.map_err(|e| fail(66, format!("{path}: {e}")))?;
    Ok(s)
}

fn read_graph(path: &str) -> Result<EdgeListDocument, Fail> {
    EdgeListDocument::parse(&read_input(path)?).map_err(|e| fail(65, format!("{path}: {e}")))
}

fn read_certificate(path: &str, el: &EdgeListDocument) -> Result<Result<Certificate, Error>, Fail> {
    let doc = CertificateDocument::from_json(&read_input(path)?).map_err(|e| fail(65, format!("{path}: {e}")))?;
    match doc.to_certificate(el) {
        Err(e @ Error::Malformed { .. }) => Err(fail(65, format!("{path}: {e}"))),
        other => Ok(other),
    }
}

/// Id of a label given on the command line.
fn flag_vertex(el: &EdgeListDocument, label: &str) -> Result<Vertex, Fail> {
    el.require_id(label.trim())
        .map_err(|_| fail(64, format!("no vertex labelled {label:?}")))
}

fn flag_edge(el: &EdgeListDocument, s: &str) -> Result<(Vertex, Vertex), Fail> {
    // Labels may contain '-', so try every split point.
    for (i, _) in s.match_indices('-') {
        if let (Ok(u), Ok(v)) = (el.require_id(&s[..i]), el.require_id(&s[i + 1..])) {
            return Ok((u, v));
        }
    }
    Err(fail(64, format!("{s:?} is not an edge `u-v` of known labels")))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &impl serde::Serialize) {
    emit(&(serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"));
}

fn cycle_json(el: &EdgeListDocument, c: &HamCycle) -> Value {
    let tags: Vec<&str> = c
        .provenance()
        .iter()
        .map(|p| match p {
            Provenance::InG => "G",
            Provenance::InSquareOnly => "SQ",
        })
        .collect();
    json!({
        "cycle": c.order().iter().map(|&v| el.label(v)).collect::<Vec<_>>(),
        "edge_provenance": tags,
    })
}

fn class_of(g: &hamsq_core::Graph) -> ClassCheck {
    if g.vertex_count() < 2 {
        return ClassCheck::InClass;
    }
    decompose(g).map_or(ClassCheck::InClass, |bd| bd.class_check())
}

fn analyze(file: &str) -> Out {
    let el = read_graph(file)?;
    let g = &el.graph;
    let bd = decompose(g)?;
    let labels = |it: &mut dyn Iterator<Item = Vertex>| it.map(|v| el.label(v)).collect::<Vec<_>>();
    let blocks: Vec<Value> = (0..bd.block_count())
        .map(|i| {
            let info = bd.info(i);
            json!({
                "vertices": labels(&mut bd.block(i).iter().copied()),
                "kind": if info.kind == BlockKind::Cyclic { "cyclic" } else { "acyclic" },
                "end_block": info.end_status == EndStatus::EndBlock,
                "degree": info.degree,
            })
        })
        .collect();
    let cuts: Vec<Value> = bd
        .cut_vertices()
        .iter()
        .map(|&v| {
            json!({
                "vertex": el.label(v),
                "t": bd.t_count(v),
                "block_graph_degree": bd.bl_degree(hamsq_core::BlNode::Cut(v)),
            })
        })
        .collect();
    let shape = match bd.shape() {
        BlShape::Path => json!({"kind": "path"}),
        BlShape::StarCenteredAtCutVertex(v) => json!({"kind": "star_at_cut_vertex", "center": el.label(v)}),
        BlShape::StarCenteredAtBlock(b) => json!({
            "kind": "star_at_block",
            "center": labels(&mut bd.block(b).iter().copied()),
        }),
        BlShape::Other => json!({"kind": "other"}),
    };
    let class = bd.class_check();
    let violations: Vec<String> = match &class {
        ClassCheck::InClass => Vec::new(),
        ClassCheck::OutOfClass(v) => vec![v.to_string()],
    };
    print_json(&json!({
        "name": el.name,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "blocks": blocks,
        "cut_vertices": cuts,
        "branch_points": labels(&mut bd.branch_cut_vertices().into_iter()),
        "shape": shape,
        "preconditions": {"in_class": class.is_in_class(), "violations": violations},
    }));
    Ok(0)
}

fn decision_code(d: &Decision) -> u8 {
    match d {
        Decision::Hamiltonian(_) => 0,
        Decision::NotHamiltonian(_) => 2,
        Decision::OutOfClass(_) => 3,
    }
}

fn decide(file: &str, mode: ModeArg, limits: &SearchLimits) -> Out {
    let el = read_graph(file)?;
    let mode = match mode {
        ModeArg::Constructive => Mode::Constructive,
        ModeArg::Oracle => Mode::OracleSearch,
    };
    match decide_and_construct(&el.graph, mode, limits) {
        Ok(cert) => {
            print_json(&CertificateDocument::from_certificate(&cert, &el));
            Ok(decision_code(&cert.decision))
        }
        Err(e) => match CertificateDocument::budget_exceeded(&e, &class_of(&el.graph), &el) {
            Some(doc) => {
                eprintln!("{e}");
                print_json(&doc);
                Ok(4)
            }
            None => Err(e.into()),
        },
    }
}

fn construct(file: &str, which: Construction, anchors: Option<&str>, limits: &SearchLimits) -> Out {
    let el = read_graph(file)?;
    let g = &el.graph;
    let anchors: Vec<Vertex> = match anchors {
        Some(s) => s.split(',').map(|l| flag_vertex(&el, l)).collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let bd = decompose(g)?;
    let not_applicable = |msg: String| fail(3, msg);
    let cycle = match which {
        Construction::Main => {
            let cert = decide_and_construct(g, Mode::Constructive, limits)?;
            print_json(&CertificateDocument::from_certificate(&cert, &el));
            return Ok(decision_code(&cert.decision));
        }
        Construction::Thomassen => {
            let (u1, u2) = match anchors[..] {
                [u1, u2] => (u1, u2),
                [] => {
                    let ends = bd.endblocks();
                    let pick = |b: usize| bd.non_cut_vertices(b).next();
                    match ends[..] {
                        [e1, e2] => (pick(e1).unwrap(), pick(e2).unwrap()),
                        _ => return Err(fail(64, "give --anchors u1,u2 for this graph")),
                    }
                }
                _ => return Err(fail(64, "thomassen takes two anchors")),
            };
            thomassen_path_cycle(g, u1, u2, limits)
        }
        Construction::Lemma1 => {
            let a = match anchors[..] {
                [a] => a,
                [] => match bd.shape() {
                    BlShape::StarCenteredAtCutVertex(a) => a,
                    _ => return Err(not_applicable("block graph is not a star centered at a cut vertex".into())),
                },
                _ => return Err(fail(64, "lemma1 takes one anchor")),
            };
            branch_point_cycle(g, a, limits)
        }
        Construction::StarBlock => {
            let mut centers: Vec<usize> = (0..bd.block_count()).filter(|&b| bd.is_cyclic(b)).collect();
            if let BlShape::StarCenteredAtBlock(b) = bd.shape() {
                centers = vec![b];
            }
            let mut found = None;
            for bc in centers {
                match acceptable_cycle(g, bc, limits) {
                    Err(Error::WrongShape(_)) => continue,
                    Err(e) => return Err(e.into()),
                    Ok(None) => return Err(not_applicable("center block has no acceptable cycle".into())),
                    Ok(Some(ac)) => {
                        found = Some(ac);
                        break;
                    }
                }
            }
            let Some(ac) = found else {
                return Err(not_applicable("block graph is not a star centered at a 2-connected block".into()));
            };
            star_block_cycle(g, &ac, limits)
        }
    };
    let cycle = cycle.map_err(|e| match e {
        Error::BadAnchors(_)
        | Error::BlockGraphNotPath
        | Error::PreconditionViolated(_)
        | Error::WrongShape(_)
        | Error::TooSmall => not_applicable(e.to_string()),
        e => e.into(),
    })?;
    let cert = Certificate {
        decision: Decision::Hamiltonian(cycle),
        trace: Vec::new(),
        class: bd.class_check(),
    };
    print_json(&CertificateDocument::from_certificate(&cert, &el));
    Ok(0)
}

fn verify(graph: &str, certificate: &str, limits: &SearchLimits) -> Out {
    let el = read_graph(graph)?;
    let report = match read_certificate(certificate, &el)? {
        Ok(cert) => verify_decision(&el.graph, &cert, limits),
        Err(e) => VerificationReport {
            ok: false,
            violations: vec![Violation {
                kind: ViolationKind::DecisionMismatch,
                location: "decision".into(),
                detail: format!("certificate makes no decision: {e}"),
            }],
        },
    };
    print_json(&report);
    Ok(if report.ok { 0 } else { 1 })
}

fn classify(file: &str, vertex: &str, limits: &SearchLimits) -> Out {
    let el = read_graph(file)?;
    let x = flag_vertex(&el, vertex)?;
    match classify_vertex_type(&el.graph, x, limits) {
        Ok(t) => {
            print_json(&json!({
                "vertex": el.label(x),
                "type": t.type_index,
                "witness": t.witness.map(|c| cycle_json(&el, &c)),
            }));
            Ok(0)
        }
        Err(Error::SquareNotHamiltonian) => Err(fail(2, "square is not hamiltonian; types are undefined")),
        Err(e) => Err(e.into()),
    }
}

fn oracle(file: &str, require: &[String], forbid: &[String], limits: &SearchLimits) -> Out {
    let el = read_graph(file)?;
    limits.check_cap(&el.graph)?;
    let mut c = CycleConstraint::free();
    for s in require {
        let (u, v) = flag_edge(&el, s)?;
        c = c.require_edge(u, v);
    }
    for s in forbid {
        let (u, v) = flag_edge(&el, s)?;
        c = c.forbid_edge(u, v);
    }
    let found = match find_ham_cycle_constrained(&el.graph, &c, limits.budget) {
        Err(e @ Error::ConflictingEdgeRequirement(..)) => return Err(fail(64, e.to_string())),
        r => r?,
    };
    match found {
        Some(cycle) => {
            let mut v = cycle_json(&el, &cycle);
            v["found"] = json!(true);
            print_json(&v);
            Ok(0)
        }
        None => {
            print_json(&json!({"found": false}));
            Ok(2)
        }
    }
}

fn generate(family: &str) -> Out {
    let fam: Family = family.parse()?;
    let g = fam.build()?;
    let el = EdgeListDocument::from_graph(&fam.name(), &g, |v| fam.label(v))?;
    emit(&el.to_string());
    Ok(0)
}

fn export_dot(file: &str, square: bool, certificate: Option<&str>) -> Out {
    let el = read_graph(file)?;
    let cycle = match certificate {
        Some(path) => match read_certificate(path, &el)? {
            Ok(Certificate {
                decision: Decision::Hamiltonian(c),
                ..
            }) => Some(c),
            _ => {
                eprintln!("certificate has no cycle; drawing the graph only");
                None
            }
        },
        None => None,
    };
    emit(&to_dot(&el, square, cycle.as_ref()));
    Ok(0)
}

fn run(cli: Cli) -> Out {
    match cli.cmd {
        Cmd::Analyze { file } => analyze(&file),
        Cmd::Decide { file, mode, limits } => decide(&file, mode, &limits.limits()),
        Cmd::Construct {
            file,
            construction,
            anchors,
            limits,
        } => construct(&file, construction, anchors.as_deref(), &limits.limits()),
        Cmd::Verify {
            graph,
            certificate,
            limits,
        } => verify(&graph, &certificate, &limits.limits()),
        Cmd::Classify { file, vertex, limits } => classify(&file, &vertex, &limits.limits()),
        Cmd::Oracle {
            file,
            require_edges,
            forbid_edges,
            limits,
        } => oracle(&file, &require_edges, &forbid_edges, &limits.limits()),
        Cmd::Generate { family } => generate(&family),
        Cmd::ExploreConjecture {
            max_block,
            legs,
            max_instances,
            max_findings,
            limits,
        } => {
            let report = explore_star_block(max_block, legs, &limits.limits(), max_instances, max_findings)?;
            print_json(&report);
            if report.findings.iter().any(|f| f.acceptable_cycle) {
                return Err(fail(70, "non-hamiltonian instance whose center has an acceptable cycle"));
            }
            Ok(0)
        }
        Cmd::ExportDot {
            file,
            square,
            certificate,
        } => export_dot(&file, square, certificate.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hamsq: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
