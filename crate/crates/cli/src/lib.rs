//! Command implementations behind the `ctforge` binary: classification
//! tables, certificate verification, and diagram emission. Everything is
//! deterministic; identical inputs produce byte-identical payloads (timing
//! is attached only on request, since it would break that).

pub mod ascii;
pub mod dot;
pub mod json;

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::json;

use ctforge_core::diagram::{DynkinDiagram, DynkinFamily, Quiver};
use ctforge_core::nakayama::{classify_numeric, ModEnumeration, NakayamaAlgebra};
use ctforge_core::orbit::{
    verify_named_example, Check, CtCertificate, DOutcome, ExampleName, OrbitCategory,
};

use json::{certificate_json, CertificateJson, DiagramJson, Report, DIAGRAM_SCHEMA, REPORT_SCHEMA};

pub fn engine_string() -> String {
    format!("ctforge {}", env!("CARGO_PKG_VERSION"))
}

/// Exit code 2: bad input. Exit code 3: a mathematical verification failed
/// (a Hom that should vanish does not, or two routes disagree).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Verification(m) => write!(f, "verification failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "text" => Some(ReportFormat::Text),
            "json" => Some(ReportFormat::Json),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Dot,
    Json,
    Ascii,
}

impl DiagramFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "dot" => Some(DiagramFormat::Dot),
            "json" => Some(DiagramFormat::Json),
            "ascii" => Some(DiagramFormat::Ascii),
            _ => None,
        }
    }
}

/// Search budgets; `CTFORGE_BUDGET` overrides both (capped at 128, the
/// clique-search bitset width).
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    pub trivext: usize,
    pub nakayama: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            trivext: ctforge_core::orbit::DEFAULT_SEARCH_BUDGET,
            nakayama: ctforge_core::nakayama::DEFAULT_MODULE_BUDGET,
        }
    }
}

impl Budgets {
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var("CTFORGE_BUDGET") {
            Err(_) => Ok(Budgets::default()),
            Ok(raw) => {
                let value: usize = raw.parse().map_err(|_| {
                    CliError::Usage(format!("CTFORGE_BUDGET must be an integer, got {raw:?}"))
                })?;
                if !(1..=128).contains(&value) {
                    return Err(CliError::Usage(format!(
                        "CTFORGE_BUDGET must be in [1, 128], got {value}"
                    )));
                }
                Ok(Budgets {
                    trivext: value,
                    nakayama: value,
                })
            }
        }
    }
}

#[derive(Debug)]
pub struct CommandOutput {
    pub payload: String,
    pub warnings: Vec<String>,
}

fn parse_family(s: &str) -> Result<DynkinFamily, CliError> {
    match s {
        "A" | "a" => Ok(DynkinFamily::A),
        "D" | "d" => Ok(DynkinFamily::D),
        "E" | "e" => Ok(DynkinFamily::E),
        _ => Err(CliError::Usage(format!(
            "unknown Dynkin family {s:?}; expected A, D or E"
        ))),
    }
}

fn diagram(family: &str, rank: usize) -> Result<DynkinDiagram, CliError> {
    DynkinDiagram::new(parse_family(family)?, rank).map_err(|e| CliError::Usage(e.to_string()))
}

fn report_payload<T: Serialize>(
    command: &str,
    inputs: serde_json::Value,
    results: T,
    timing_ms: Option<u128>,
) -> String {
    let report = Report {
        schema: REPORT_SCHEMA.to_string(),
        engine: engine_string(),
        command: command.to_string(),
        inputs,
        results,
        timing_ms,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// classify-trivext

#[derive(Serialize, Deserialize)]
pub struct TrivextRow {
    pub d: i64,
    pub verdict: String,
    pub method: Option<String>,
    pub certificates: usize,
}

#[derive(Serialize, Deserialize)]
pub struct TrivextResults {
    pub diagram: DiagramJson,
    pub coxeter_number: i64,
    pub rows: Vec<TrivextRow>,
}

pub fn run_classify_trivext(
    family: &str,
    rank: usize,
    d_min: i64,
    d_max: i64,
    format: ReportFormat,
    timing: bool,
    budgets: Budgets,
) -> Result<CommandOutput, CliError> {
    let diagram = diagram(family, rank)?;
    if d_min < 2 || d_min > d_max {
        return Err(CliError::Usage(format!(
            "need 2 <= d_min <= d_max, got [{d_min}, {d_max}]"
        )));
    }
    let started = std::time::Instant::now();
    let cat = OrbitCategory::new(Quiver::default_orientation(diagram));
    let rows = cat.classify(d_min, d_max, budgets.trivext);

    let mut warnings = Vec::new();
    let mut out_rows = Vec::new();
    for row in &rows {
        let (verdict, method, certificates) = match &row.outcome {
            DOutcome::Finite { certificates } => {
                ("finite", Some("enumeration".to_string()), *certificates)
            }
            DOutcome::Refuted { method } => ("not-finite", Some(method.to_string()), 0),
            DOutcome::NotAttempted {
                domain_size,
                budget,
            } => {
                warnings.push(format!(
                    "d = {}: search not attempted ({} orbit objects exceed budget {})",
                    row.d, domain_size, budget
                ));
                ("not-attempted", None, 0)
            }
        };
        out_rows.push(TrivextRow {
            d: row.d,
            verdict: verdict.to_string(),
            method,
            certificates,
        });
    }
    let elapsed = timing.then(|| started.elapsed().as_millis());

    let payload = match format {
        ReportFormat::Json => report_payload(
            "classify-trivext",
            json!({
                "family": diagram.family().to_string(),
                "rank": diagram.rank(),
                "d_min": d_min,
                "d_max": d_max,
                "budget": budgets.trivext,
            }),
            TrivextResults {
                diagram: DiagramJson {
                    family: diagram.family().to_string(),
                    rank: diagram.rank(),
                },
                coxeter_number: diagram.coxeter_number(),
                rows: out_rows,
            },
            elapsed,
        ),
        ReportFormat::Text => {
            let mut s = format!(
                "T(kQ) classification for {diagram} (h = {}), d in [{d_min}, {d_max}]\n",
                diagram.coxeter_number()
            );
            s.push_str("  d    verdict        method               certificates\n");
            for r in &out_rows {
                writeln!(
                    s,
                    "  {:<4} {:<14} {:<20} {}",
                    r.d,
                    r.verdict,
                    r.method.as_deref().unwrap_or("-"),
                    r.certificates
                )
                .unwrap();
            }
            s
        }
    };
    Ok(CommandOutput { payload, warnings })
}

// ---------------------------------------------------------------------------
// classify-nakayama

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NakayamaMode {
    Numeric,
    BruteForce,
    Both,
}

impl NakayamaMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "numeric" => Some(NakayamaMode::Numeric),
            "bruteforce" => Some(NakayamaMode::BruteForce),
            "both" => Some(NakayamaMode::Both),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct NakayamaRow {
    pub d: u64,
    pub numeric: Option<bool>,
    pub bruteforce: Option<String>,
    pub summand_sets: Option<usize>,
}

#[derive(Serialize, Deserialize)]
pub struct NakayamaResults {
    pub simples: usize,
    pub multiplicity: usize,
    pub loewy_length: usize,
    pub rows: Vec<NakayamaRow>,
}

pub fn run_classify_nakayama(
    a: usize,
    n: usize,
    d_max: u64,
    mode: &str,
    format: ReportFormat,
    timing: bool,
    budgets: Budgets,
) -> Result<CommandOutput, CliError> {
    let mode = NakayamaMode::parse(mode).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown mode {mode:?}; expected numeric, bruteforce or both"
        ))
    })?;
    let alg = NakayamaAlgebra::new(n, a).map_err(|e| CliError::Usage(e.to_string()))?;
    if d_max < 2 {
        return Err(CliError::Usage(format!("need d_max >= 2, got {d_max}")));
    }
    let started = std::time::Instant::now();

    let mut warnings = Vec::new();
    let mut rows = Vec::new();
    for d in 2..=d_max {
        let numeric = matches!(mode, NakayamaMode::Numeric | NakayamaMode::Both)
            .then(|| classify_numeric(a as u64, n as u64, d));
        let brute = if matches!(mode, NakayamaMode::BruteForce | NakayamaMode::Both) {
            Some(alg.enumerate_d_cluster_tilting(d as u32, budgets.nakayama))
        } else {
            None
        };
        let (brute_str, sets) = match &brute {
            None => (None, None),
            Some(ModEnumeration::Done(sets)) => (
                Some(if sets.is_empty() {
                    "not-finite"
                } else {
                    "finite"
                }),
                Some(sets.len()),
            ),
            Some(ModEnumeration::NotAttempted {
                nonprojectives,
                budget,
            }) => {
                warnings.push(format!(
                    "d = {d}: brute force not attempted ({nonprojectives} non-projectives exceed budget {budget})"
                ));
                (Some("not-attempted"), None)
            }
        };
        if let (Some(num), Some(ModEnumeration::Done(sets))) = (numeric, &brute) {
            if num != !sets.is_empty() {
                return Err(CliError::Verification(format!(
                    "route disagreement at (a, n, d) = ({a}, {n}, {d}): numeric says {num}, enumeration found {} summand sets",
                    sets.len()
                )));
            }
        }
        rows.push(NakayamaRow {
            d,
            numeric,
            bruteforce: brute_str.map(str::to_string),
            summand_sets: sets,
        });
    }
    let elapsed = timing.then(|| started.elapsed().as_millis());

    let payload = match format {
        ReportFormat::Json => report_payload(
            "classify-nakayama",
            json!({
                "a": a,
                "n": n,
                "d_max": d_max,
                "mode": match mode {
                    NakayamaMode::Numeric => "numeric",
                    NakayamaMode::BruteForce => "bruteforce",
                    NakayamaMode::Both => "both",
                },
                "budget": budgets.nakayama,
            }),
            NakayamaResults {
                simples: n,
                multiplicity: a,
                loewy_length: alg.loewy_length(),
                rows,
            },
            elapsed,
        ),
        ReportFormat::Text => {
            let mut s = format!(
                "symmetric Nakayama algebra with n = {n}, a = {a} (Loewy length {}), d in [2, {d_max}]\n",
                alg.loewy_length()
            );
            s.push_str("  d    numeric    bruteforce     summand sets\n");
            for r in &rows {
                writeln!(
                    s,
                    "  {:<4} {:<10} {:<14} {}",
                    r.d,
                    r.numeric.map_or("-".to_string(), |b| b.to_string()),
                    r.bruteforce.as_deref().unwrap_or("-"),
                    r.summand_sets.map_or("-".to_string(), |c| c.to_string()),
                )
                .unwrap();
            }
            s
        }
    };
    Ok(CommandOutput { payload, warnings })
}

// ---------------------------------------------------------------------------
// verify-example

#[derive(Serialize, Deserialize)]
pub struct VerifyResults {
    pub example: String,
    pub certificate: CertificateJson,
}

pub fn run_verify_example(
    name: &str,
    format: ReportFormat,
    timing: bool,
) -> Result<CommandOutput, CliError> {
    let parsed = ExampleName::parse(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown example {name:?}; expected cta1:<n>, cta2, cta3, ctd or d4-derived"
        ))
    })?;
    let started = std::time::Instant::now();
    let cert = verify_named_example(parsed).map_err(|e| CliError::Verification(e.to_string()))?;
    let elapsed = timing.then(|| started.elapsed().as_millis());

    let payload = match format {
        ReportFormat::Json => report_payload(
            "verify-example",
            json!({ "name": parsed.to_string() }),
            VerifyResults {
                example: parsed.to_string(),
                certificate: certificate_json(&cert),
            },
            elapsed,
        ),
        ReportFormat::Text => render_certificate_text(&parsed.to_string(), &cert),
    };
    Ok(CommandOutput {
        payload,
        warnings: Vec::new(),
    })
}

fn render_certificate_text(name: &str, cert: &CtCertificate) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "example {name}: {}",
        if cert.verified { "VERIFIED" } else { "FAILED" }
    )
    .unwrap();
    writeln!(s, "quiver {}", cert.quiver).unwrap();
    writeln!(s, "d = {}", cert.d).unwrap();
    let objs: Vec<String> = cert.objects.iter().map(|o| o.to_string()).collect();
    writeln!(s, "objects: {}", objs.join(" ")).unwrap();
    writeln!(s, "transcript:").unwrap();
    for check in &cert.transcript {
        match check {
            Check::Rigidity {
                from,
                to,
                degree,
                value,
            } => writeln!(s, "  rigidity Ext^{degree}({from}, {to}) = {value}").unwrap(),
            Check::MaximalityWitness {
                candidate,
                against,
                degree,
                value,
                outward,
            } => {
                let (src, dst) = if *outward {
                    (candidate, against)
                } else {
                    (against, candidate)
                };
                writeln!(
                    s,
                    "  exclude {candidate}: Ext^{degree}({src}, {dst}) = {value}"
                )
                .unwrap()
            }
            Check::PerpViolation { candidate, outward } => writeln!(
                s,
                "  VIOLATION: {candidate} lies in the {} perpendicular category but not in the set",
                if *outward { "left" } else { "right" }
            )
            .unwrap(),
            Check::Periodicity { h, d, divides } => writeln!(
                s,
                "  periodicity: (d+1) | 2(h-1) with h = {h}, d = {d}: {}",
                if *divides { "yes" } else { "NO" }
            )
            .unwrap(),
            Check::NudClosure {
                object,
                image,
                inside,
            } => writeln!(
                s,
                "  nu_d-closure: {object} -> {image}: {}",
                if *inside { "inside" } else { "OUTSIDE" }
            )
            .unwrap(),
        }
    }
    s
}

// ---------------------------------------------------------------------------
// emit-ar-quiver

#[derive(Serialize, Deserialize)]
pub struct DiagramCell {
    pub vertex: usize,
    pub twist: i64,
    pub marked: bool,
}

#[derive(Serialize, Deserialize)]
pub struct DiagramArtifact {
    pub schema: String,
    pub diagram: DiagramJson,
    pub orientation: Vec<(usize, usize)>,
    pub window: i64,
    pub marked_certificate: Option<String>,
    pub objects: Vec<DiagramCell>,
    pub arrows: Vec<[(usize, i64); 2]>,
}

pub fn run_emit_ar_quiver(
    family: &str,
    rank: usize,
    window: i64,
    marked: &str,
    format: DiagramFormat,
) -> Result<CommandOutput, CliError> {
    let diagram = diagram(family, rank)?;
    if window < 1 {
        return Err(CliError::Usage(format!(
            "window must be >= 1, got {window}"
        )));
    }
    let quiver = Quiver::default_orientation(diagram);
    let period = diagram.coxeter_number() - 1;

    let (marked_name, marked_set): (Option<String>, BTreeSet<(usize, i64)>) = if marked == "none" {
        (None, BTreeSet::new())
    } else {
        let name = ExampleName::parse(marked)
            .ok_or_else(|| CliError::Usage(format!("unknown certificate id {marked:?}")))?;
        let cert = verify_named_example(name).map_err(|e| CliError::Verification(e.to_string()))?;
        if cert.quiver.diagram() != diagram {
            return Err(CliError::Usage(format!(
                "certificate {name} lives on {}, not {diagram}",
                cert.quiver.diagram()
            )));
        }
        let mut cells = BTreeSet::new();
        for l in 0..window {
            for o in &cert.objects {
                if l.rem_euclid(period) == o.twist {
                    cells.insert((o.vertex, l));
                }
            }
        }
        (Some(name.to_string()), cells)
    };

    let payload = match format {
        DiagramFormat::Dot => dot::emit(&quiver, window, &marked_set),
        DiagramFormat::Ascii => ascii::emit(&quiver, window, &marked_set),
        DiagramFormat::Json => {
            let mut objects = Vec::new();
            for v in 1..=quiver.rank() {
                for l in 0..window {
                    objects.push(DiagramCell {
                        vertex: v,
                        twist: l,
                        marked: marked_set.contains(&(v, l)),
                    });
                }
            }
            let mut arrows = Vec::new();
            for &(u, v) in quiver.arrows() {
                for l in 0..window {
                    arrows.push([(v, l), (u, l)]);
                    if l > 0 {
                        arrows.push([(u, l), (v, l - 1)]);
                    }
                }
            }
            arrows.sort();
            let artifact = DiagramArtifact {
                schema: DIAGRAM_SCHEMA.to_string(),
                diagram: DiagramJson {
                    family: diagram.family().to_string(),
                    rank: diagram.rank(),
                },
                orientation: quiver.arrows().to_vec(),
                window,
                marked_certificate: marked_name,
                objects,
                arrows,
            };
            let mut s = serde_json::to_string_pretty(&artifact).expect("artifact serializes");
            s.push('\n');
            s
        }
    };
    Ok(CommandOutput {
        payload,
        warnings: Vec::new(),
    })
}
