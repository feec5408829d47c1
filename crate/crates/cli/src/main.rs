use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use trilink::constructions::ConstructionSpec;
use trilink::extremal::{self, FdBound, LemmaChainReport, RecursionTerm};
use trilink::linking::{self, IntersectionTrace};
use trilink::{scx, Budget, Error, Graph, LinkCountCheck, PatternGraph, Point3, ScanMode, ScanOptions, SimplicialComplex, Verdict};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "trilink", version, about = "Link-intersection obstructions for embedding simplicial complexes")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Time limit in seconds for each graph-level search, or "unlimited".
    #[arg(long, global = true, default_value = "10", value_parser = parse_seconds)]
    budget: Seconds,
    /// Node limit for each graph-level search. Unlike the time limit this
    /// makes inconclusive outcomes reproducible.
    #[arg(long, global = true)]
    max_steps: Option<u64>,
    /// Also print a human-readable summary to stderr.
    #[arg(long, global = true)]
    pretty: bool,
}

impl Common {
    fn budget(&self) -> Budget {
        Budget { max_steps: self.max_steps, time_limit: self.budget.0.map(std::time::Duration::from_secs_f64) }
    }
}

/// A time limit; `None` is unlimited.
#[derive(Clone, Copy, Debug)]
struct Seconds(Option<f64>);

fn parse_seconds(s: &str) -> Result<Seconds, String> {
    if s == "unlimited" || s == "none" {
        return Ok(Seconds(None));
    }
    match s.trim_end_matches('s').parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(Seconds(Some(v))),
        _ => Err(format!("expected a positive number of seconds or \"unlimited\", got {s:?}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// f-vector, vertex links, the link-count identity and degrees.
    Analyze {
        file: PathBuf,
    },
    /// Search for a link-intersection obstruction.
    Scan {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(ScanMode))]
        mode: ScanMode,
        /// Report elapsed_ms as 0 so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
        /// Scan triples on all cores. The report does not change.
        #[arg(long)]
        parallel: bool,
    },
    /// Write a named complex in the .scx format.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Output file; the complex goes to stdout when omitted.
        #[arg(short = 'o', long, global = true)]
        output: Option<PathBuf>,
    },
    /// Linking number of two cycles in a .geom file.
    Linking {
        file: PathBuf,
        /// Edge list such as "1:2,2:3,-1:3" (a leading minus flips the edge).
        #[arg(long, allow_hyphen_values = true)]
        cycle1: String,
        #[arg(long, allow_hyphen_values = true)]
        cycle2: String,
        /// Cone apex "x,y,z"; coordinates may be fractions.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "auto")]
        apex: Option<String>,
        /// Retry apexes until the cone is in general position.
        #[arg(long)]
        auto: bool,
    },
    /// Check the triple-intersection counting chain on a set system.
    Setsystem {
        /// Set-system file, or "fano".
        source: String,
        /// Bound on triple intersections; defaults to the largest one.
        #[arg(long)]
        f_bound: Option<u64>,
    },
    /// Exponent table for the face-count bound.
    Bounds {
        /// A dimension or an inclusive range such as "1..5".
        #[arg(long, default_value = "1..4")]
        d: String,
        /// Also evaluate the ceiling of n^{e(d)}.
        #[arg(long)]
        n: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// d-skeleton of the simplex on m vertices.
    Complete {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
    },
    /// Join of the d_i-skeleta of (2 d_i + 2)-simplices, e.g. --dims 1,0.
    Grunbaum {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Boundary of the cyclic 4-polytope on n vertices.
    CyclicPolytope {
        #[arg(long)]
        n: usize,
        /// Drop the facet with this index in Gale-evenness order.
        #[arg(long)]
        drop_facet: Option<usize>,
    },
    /// Two cones over a graph given as a 1-dimensional .scx file or a pattern name.
    DoubleCone {
        #[arg(long)]
        base: String,
    },
    /// Join of paths with a and b vertices.
    Staircase {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// A random maximal planar graph plus one vertex joined to everything.
    Apex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    MaximalPlanar {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A forbidden graph: K5, K3,3 or a Petersen-family member.
    Pattern {
        name: String,
    },
    /// 2-complex realizing a set system over the edges of a complete graph.
    Tightness {
        /// Set-system file whose ground set has C(v, 2) elements.
        system: PathBuf,
    },
}

/// Failure that ends the run with a given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TripleBoundViolated { .. } => EXIT_VIOLATION,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { file } => analyze(&cli.common, file),
        Command::Scan { file, mode, no_timing, parallel } => scan(&cli.common, file, *mode, *no_timing, *parallel),
        Command::Construct { kind, output } => construct(&cli.common, kind, output.as_deref()),
        Command::Linking { file, cycle1, cycle2, apex, auto } => {
            linking(&cli.common, file, cycle1, cycle2, apex.as_deref(), *auto)
        }
        Command::Setsystem { source, f_bound } => setsystem(&cli.common, source, *f_bound),
        Command::Bounds { d, n } => bounds(&cli.common, d, *n),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit<T: Serialize>(report: &T) {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    // A closed pipe (`| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    scx::parse(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct VertexLink {
    vertex: u32,
    f_vector: Vec<u64>,
}

#[derive(Serialize)]
struct DegreeCount {
    degree: usize,
    count: usize,
}

#[derive(Serialize)]
struct AnalyzeReport {
    dimension: usize,
    f_vector: Vec<u64>,
    vertex_links: Vec<VertexLink>,
    link_count_identity: Vec<LinkCountCheck>,
    degree_histogram: Vec<DegreeCount>,
}

fn analyze(common: &Common, file: &Path) -> Outcome {
    let k = read_complex(file)?;
    let dimension = k.dim().ok_or(Error::EmptyComplex)?;
    let mut vertex_links = Vec::new();
    for &v in k.vertices() {
        vertex_links.push(VertexLink { vertex: v, f_vector: k.link(v)?.f_vector().0 });
    }
    let link_count_identity = (1..=dimension)
        .map(|i| trilink::verify_link_count_identity(&k, i))
        .collect::<Result<Vec<_>, _>>()?;
    let mut degrees: BTreeMap<u32, usize> = k.vertices().iter().map(|&v| (v, 0)).collect();
    for e in k.faces_of_dim(1) {
        for v in e.vertices() {
            *degrees.get_mut(v).expect("edge endpoints are vertices") += 1;
        }
    }
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for d in degrees.values() {
        *histogram.entry(*d).or_default() += 1;
    }
    let report = AnalyzeReport {
        dimension,
        f_vector: k.f_vector().0,
        vertex_links,
        degree_histogram: histogram.into_iter().map(|(degree, count)| DegreeCount { degree, count }).collect(),
        link_count_identity,
    };
    if common.pretty {
        eprintln!("dimension {}  f-vector {:?}", report.dimension, report.f_vector);
        for c in &report.link_count_identity {
            eprintln!("  k = {}: (k+1) f_k = {}  link sum = {}  {}", c.k, c.lhs, c.rhs, if c.equal { "ok" } else { "MISMATCH" });
        }
        for h in &report.degree_histogram {
            eprintln!("  degree {:>4}: {}", h.degree, h.count);
        }
    }
    let ok = report.link_count_identity.iter().all(|c| c.equal);
    emit(&report);
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn scan(common: &Common, file: &Path, mode: ScanMode, no_timing: bool, parallel: bool) -> Outcome {
    let k = read_complex(file)?;
    let opts = ScanOptions { budget: common.budget(), parallel };
    let mut report = trilink::scan(&k, mode, &opts)?;
    if no_timing {
        report.statistics.elapsed_ms = 0;
    }
    if common.pretty {
        eprintln!("{} (dimension {}): {}", report.mode, report.dimension, report.summary);
        for t in &report.witness_chain {
            eprintln!("  descend through {t:?}");
        }
        eprintln!("  triples scanned {}, depth {}", report.statistics.triples_scanned, report.statistics.max_depth);
    }
    emit(&report);
    Ok(match report.verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::Obstruction => EXIT_VIOLATION,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

#[derive(Serialize)]
struct ConstructReport {
    kind: &'static str,
    output: Option<String>,
    dimension: Option<usize>,
    f_vector: Vec<u64>,
    facets: usize,
}

fn construct(common: &Common, kind: &ConstructKind, output: Option<&Path>) -> Outcome {
    let (name, k) = match kind {
        ConstructKind::Complete { d, m } => ("complete", ConstructionSpec::Complete { d: *d, m: *m }.build()?),
        ConstructKind::Grunbaum { dims } => ("grunbaum", ConstructionSpec::Grunbaum { dims: dims.clone() }.build()?),
        ConstructKind::CyclicPolytope { n, drop_facet } => {
            ("cyclic-polytope", ConstructionSpec::CyclicPolytope { n: *n, drop_facet: *drop_facet }.build()?)
        }
        ConstructKind::DoubleCone { base } => {
            let graph = match PatternGraph::from_name(base) {
                Some(p) if !Path::new(base).exists() => p.graph(),
                _ => Graph::from_complex(&read_complex(Path::new(base))?)?,
            };
            ("double-cone", ConstructionSpec::DoubleCone { base: graph }.build()?)
        }
        ConstructKind::Staircase { a, b } => ("staircase", ConstructionSpec::Staircase { a: *a, b: *b }.build()?),
        ConstructKind::Apex { n, seed } => ("apex", ConstructionSpec::Apex { n: *n, seed: *seed }.build()?),
        ConstructKind::MaximalPlanar { n, seed } => {
            ("maximal-planar", ConstructionSpec::MaximalPlanar { n: *n, seed: *seed }.build()?)
        }
        ConstructKind::Pattern { name } => {
            let p = PatternGraph::from_name(name).ok_or_else(|| input_error(format!("unknown pattern graph {name:?}")))?;
            ("pattern", ConstructionSpec::Pattern(p).build()?)
        }
        ConstructKind::Tightness { system } => {
            let s = extremal::parse_set_system(&read(system)?)?;
            ("tightness", extremal::build_tightness_complex(&s, None)?.complex)
        }
    };
    let text = scx::write(&k);
    let report = ConstructReport {
        kind: name,
        output: output.map(|p| p.display().to_string()),
        dimension: k.dim(),
        f_vector: k.f_vector().0,
        facets: k.facets().len(),
    };
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            emit(&report);
        }
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
    }
    if common.pretty {
        eprintln!("{name}: dimension {:?}, f-vector {:?}", report.dimension, report.f_vector);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LinkingReport {
    linking_number: i64,
    apex: Point3,
    /// Position in the apex retry sequence, absent for an explicit apex.
    apex_index: Option<u64>,
    trace: IntersectionTrace,
}

fn parse_point(s: &str) -> Result<Point3, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(input_error(format!("apex must be \"x,y,z\", got {s:?}")));
    }
    let c = |t: &str| linking::parse_rational(t).map_err(|e| input_error(format!("apex: {e}")));
    Ok(Point3::new(c(parts[0])?, c(parts[1])?, c(parts[2])?))
}

fn linking(common: &Common, file: &Path, cycle1: &str, cycle2: &str, apex: Option<&str>, auto: bool) -> Outcome {
    let curves = linking::parse_geom(&read(file)?).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    let z1 = curves.realize(&linking::parse_cycle_spec(cycle1)?)?;
    let z2 = curves.realize(&linking::parse_cycle_spec(cycle2)?)?;
    let report = if auto {
        let r = linking::linking_number_auto(&z1, &z2)?;
        LinkingReport { linking_number: r.linking_number, apex: r.apex, apex_index: Some(r.apex_index), trace: r.trace }
    } else {
        let (apex, index) = match apex {
            Some(s) => (parse_point(s)?, None),
            None => (linking::apex_candidate(0), Some(0)),
        };
        let trace = linking::linking_trace(&z1, &z2, &apex)?;
        LinkingReport { linking_number: trace.value, apex, apex_index: index, trace }
    };
    if common.pretty {
        eprintln!("linking number {} (apex {})", report.linking_number, report.apex);
        for c in &report.trace.crossings {
            eprintln!("  {:+} x {}: segment {} {}", c.sign, c.coefficient, c.segment[0], c.segment[1]);
        }
    }
    emit(&report);
    Ok(EXIT_OK)
}

fn setsystem(common: &Common, source: &str, f_bound: Option<u64>) -> Outcome {
    let s = if source == "fano" && !Path::new(source).exists() {
        extremal::fano()
    } else {
        extremal::parse_set_system(&read(Path::new(source))?)?
    };
    let f = match f_bound {
        Some(f) => f,
        None => extremal::max_triple_intersection(&s).map_or(0, |(_, size)| size as u64),
    };
    let report: LemmaChainReport = extremal::verify_lemma_chain(&s, f)?;
    if common.pretty {
        eprintln!("n = {}, m = {}, f = {}, t = {}", report.ground_size, report.sets, report.f, report.t);
        for step in &report.steps {
            eprintln!("  {:<12} {:<40} {}", step.name, step.statement, if step.holds { "holds" } else { "FAILS" });
        }
    }
    emit(&report);
    Ok(if report.holds { EXIT_OK } else { EXIT_VIOLATION })
}

#[derive(Serialize)]
struct BoundsRow {
    d: u32,
    #[serde(serialize_with = "extremal::serialize_rational")]
    exponent: num_rational::BigRational,
    exponent_decimal: String,
    recursion: RecursionTerm,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<FdBound>,
}

#[derive(Serialize)]
struct BoundsReport {
    n: Option<u64>,
    rows: Vec<BoundsRow>,
}

fn parse_range(s: &str) -> Result<(u32, u32), Failure> {
    let bad = || input_error(format!("--d expects a dimension or a range like 1..5, got {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn decimal(r: &num_rational::BigRational, places: usize) -> String {
    let scale = num_bigint::BigInt::from(10).pow(places as u32);
    let scaled = (r * num_rational::BigRational::from_integer(scale.clone())).round().to_integer();
    let (int, frac) = num_integer::Integer::div_mod_floor(&scaled, &scale);
    format!("{int}.{:0>width$}", frac.to_string(), width = places)
}

fn bounds(common: &Common, d: &str, n: Option<u64>) -> Outcome {
    let (lo, hi) = parse_range(d)?;
    let terms = extremal::unroll_recursion(hi)?;
    let mut rows = Vec::new();
    for d in lo..=hi {
        let exponent = extremal::fd_exponent(d)?;
        let bound = match n {
            Some(n) => Some(extremal::bound_fd(n, d)?),
            None => None,
        };
        rows.push(BoundsRow {
            d,
            exponent_decimal: decimal(&exponent, 6),
            exponent,
            recursion: terms[d as usize - 1].clone(),
            bound,
        });
    }
    if common.pretty {
        eprintln!("{:>3}  {:>12}  {:>10}", "d", "e(d)", "decimal");
        for r in &rows {
            eprintln!("{:>3}  {:>12}  {:>10}", r.d, r.exponent.to_string(), r.exponent_decimal);
        }
    }
    emit(&BoundsReport { n, rows });
    Ok(EXIT_OK)
}
