//! The `wha` command line: verification, decomposition and enumeration
//! reports for algebra files, and builders for the example families.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use wha_core::braided::{braided_group_verify, decompose_braided_group, verify_components, BraidedGroup};
use wha_core::builders::{build_drinfeld_double, build_group_algebra, build_groupoid_algebra, Example};
use wha_core::comod::{enumerate_yd, ComponentRecord};
use wha_core::io::{
    groupoid_splitting_field, splitting_field, to_json, AlgebraFile, GroupFile, GroupoidFile, ModulesFile,
};
use wha_core::linalg::commalg::SplitOptions;
use wha_core::{qt_verify, wha_verify, Check, Field, FieldSpec, RMatrix, Report, SVec, WeakHopfAlgebra};

pub const REPORT_SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wha", version, about = "Exact computations with quasi-triangular weak Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for randomized separating elements.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Binary precision of numerical root isolation.
    #[arg(long, global = true, default_value_t = 256)]
    pub precision: u32,
    /// Denominator bound for exact reconstruction of roots.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub height_bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (makes reports non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weak Hopf, quasi-triangular and braided group axioms.
    Verify { file: PathBuf },
    /// Decompose the braided group into minimal adjoint-stable subcoalgebras.
    Decompose { file: PathBuf },
    /// Count and construct the simple Yetter-Drinfeld modules.
    EnumerateYd {
        file: PathBuf,
        #[arg(long)]
        modules: Option<PathBuf>,
    },
    /// Build an algebra file from a group or groupoid table.
    Example {
        kind: ExampleKind,
        table: PathBuf,
        /// `rationals` or `cyclotomic:N`; defaults to the table's field or a splitting field.
        #[arg(long, value_parser = parse_field)]
        field: Option<FieldSpec>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleKind {
    Group,
    Groupoid,
    Double,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let spec = match s {
        "rationals" | "q" | "Q" => FieldSpec::Rationals,
        _ => {
            let n = s
                .strip_prefix("cyclotomic:")
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| format!("expected `rationals` or `cyclotomic:N`, got `{s}`"))?;
            FieldSpec::Cyclotomic { order: n }
        }
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

/// Failure modes that map to exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SuiteCheck {
    pub suite: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub braided_dim: usize,
    pub component_dims: Vec<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct EnumerationPayload {
    pub simple_count: usize,
    pub simple_dims: Vec<usize>,
    pub sum_of_squares: usize,
    pub all_constructed: bool,
    pub components: Vec<ComponentRecord>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Timing {
    pub stage: String,
    pub seconds: f64,
}

/// The machine-readable report.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub input_sha256: String,
    pub seed: u64,
    pub precision: u32,
    pub height_bound: u64,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationPayload>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub timing: Vec<Timing>,
}

impl RunReport {
    pub fn failures(&self) -> impl Iterator<Item = &SuiteCheck> {
        self.checks.iter().filter(|c| !c.check.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "command      {}", self.command);
        let _ = writeln!(s, "input        sha256:{}", self.input_sha256);
        let _ = writeln!(s, "seed         {}", self.seed);
        let _ = writeln!(s, "precision    {}", self.precision);
        let _ = writeln!(s, "height bound {}", self.height_bound);
        let _ = writeln!(s);
        for c in &self.checks {
            let mark = if c.check.passed { "PASS" } else { "FAIL" };
            let _ = match &c.check.witness {
                Some(w) => writeln!(s, "{mark}  [{}] {}  ({w})", c.suite, c.check.name),
                None => writeln!(s, "{mark}  [{}] {}", c.suite, c.check.name),
            };
        }
        if let Some(d) = &self.decomposition {
            let _ = writeln!(s, "\nbraided group dim {}; components {:?}", d.braided_dim, d.component_dims);
        }
        if let Some(e) = &self.enumeration {
            let _ = writeln!(s, "\ncomponent  dim  Ind  End  blocks (d, simple dim)");
            for c in &e.components {
                let blocks: Vec<String> = c
                    .blocks
                    .iter()
                    .map(|b| format!("({}, {}{})", b.block.d, b.block.simple_dim, if b.constructed { "" } else { "*" }))
                    .collect();
                let _ = writeln!(
                    s,
                    "{:>9}  {:>3}  {:>3}  {:>3}  {}",
                    c.index,
                    c.dim,
                    c.induced_dim,
                    c.end_dim,
                    blocks.join(" ")
                );
            }
            let _ = writeln!(
                s,
                "simples {}  dims {:?}  sum of squares {}{}",
                e.simple_count,
                e.simple_dims,
                e.sum_of_squares,
                if e.all_constructed { "" } else { "  (* not constructed)" }
            );
        }
        for t in &self.timing {
            let _ = writeln!(s, "time {:<24} {:.3}s", t.stage, t.seconds);
        }
        let _ = writeln!(s, "\n{}", if self.passed { "all checks passed" } else { "verification FAILED" });
        s
    }
}

struct Collector {
    checks: Vec<SuiteCheck>,
    timing: Vec<Timing>,
    clock: Instant,
}

impl Collector {
    fn new() -> Collector {
        Collector { checks: Vec::new(), timing: Vec::new(), clock: Instant::now() }
    }

    fn add(&mut self, suite: &str, rep: Report) -> bool {
        let ok = rep.passed();
        self.checks.extend(rep.checks.into_iter().map(|check| SuiteCheck { suite: suite.to_string(), check }));
        ok
    }

    fn error(&mut self, suite: &str, e: impl std::fmt::Display) {
        self.checks.push(SuiteCheck { suite: suite.to_string(), check: Check::fail("completed", e.to_string()) });
    }

    fn lap(&mut self, stage: &str) {
        self.timing.push(Timing { stage: stage.to_string(), seconds: self.clock.elapsed().as_secs_f64() });
        self.clock = Instant::now();
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.check.passed)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

fn load_algebra(text: &str) -> Result<(WeakHopfAlgebra, Option<SVec>), CliError> {
    AlgebraFile::parse(text).and_then(|f| f.to_algebra()).map_err(|e| CliError::Parse(e.to_string()))
}

/// Runs the verification pipeline up to `depth` (0 = axioms, 1 = decompose,
/// 2 = enumerate).
fn pipeline(
    cli: &Cli,
    h: &WeakHopfAlgebra,
    r: Option<&SVec>,
    depth: u8,
    modules: Option<&str>,
    out: &mut RunReport,
) -> Result<(), CliError> {
    let mut col = Collector::new();
    let opts = SplitOptions {
        roots: wha_core::scalars::RootOptions {
            precision_bits: cli.precision,
            height_bound: cli.height_bound,
            ..Default::default()
        },
        seed: cli.seed,
        ..Default::default()
    };
    let user = match modules {
        Some(text) => ModulesFile::parse(text)
            .and_then(|m| m.to_modules(h.field()))
            .map_err(|e| CliError::Parse(e.to_string()))?,
        None => Vec::new(),
    };
    let wha_ok = col.add("weak Hopf", wha_verify(h));
    col.lap("weak Hopf axioms");
    let rm = match r {
        None if depth > 0 => {
            col.error("quasi-triangular", "the algebra file has no rmatrix");
            None
        }
        None => None,
        Some(r) => {
            let (rep, rm) = qt_verify(h, r);
            let ok = col.add("quasi-triangular", rep);
            col.lap("quasi-triangular axioms");
            rm.filter(|_| ok && wha_ok)
        }
    };
    if let Some(rm) = rm {
        braided_stages(h, &rm, depth, &opts, &user, &mut col, out);
    }
    out.passed = col.passed();
    out.checks = col.checks;
    if cli.timing {
        out.timing = col.timing;
    }
    Ok(())
}

fn braided_stages(
    h: &WeakHopfAlgebra,
    r: &RMatrix,
    depth: u8,
    opts: &SplitOptions,
    user: &[wha_core::comod::UserModule],
    col: &mut Collector,
    out: &mut RunReport,
) {
    let bg = match BraidedGroup::build(h, r) {
        Ok(bg) => bg,
        Err(e) => return col.error("braided group", e),
    };
    match braided_group_verify(h, &bg, r) {
        Ok(rep) => {
            col.add("braided group", rep);
        }
        Err(e) => col.error("braided group", e),
    }
    col.lap("braided group");
    if depth == 0 {
        return;
    }
    let comps = match decompose_braided_group(h, &bg, opts) {
        Ok(c) => c,
        Err(e) => return col.error("decomposition", e),
    };
    col.add("decomposition", verify_components(&bg, &comps));
    out.decomposition =
        Some(Decomposition { braided_dim: bg.dim(), component_dims: comps.iter().map(|c| c.space.dim()).collect() });
    col.lap("decomposition");
    if depth == 1 {
        return;
    }
    match enumerate_yd(h, &bg, r, &comps, opts, user) {
        Ok(en) => {
            out.enumeration = Some(EnumerationPayload {
                simple_count: en.simple_count(),
                simple_dims: en.simple_dims(),
                sum_of_squares: en.sum_of_squares(),
                all_constructed: en.all_constructed(),
                components: en.components.clone(),
            });
            col.add("enumeration", en.report);
        }
        Err(e) => col.error("enumeration", e),
    }
    col.lap("enumeration");
}

fn build_example(kind: ExampleKind, text: &str, field: Option<FieldSpec>) -> Result<Example, CliError> {
    let parse = |e: wha_core::Error| CliError::Parse(e.to_string());
    let make_field = |spec: FieldSpec| Field::new(spec).map_err(parse);
    match kind {
        ExampleKind::Group | ExampleKind::Double => {
            let f = GroupFile::parse(text).map_err(parse)?;
            f.table.validate().map_err(parse)?;
            let field = make_field(field.or(f.field).unwrap_or_else(|| splitting_field(&f.table)))?;
            if kind == ExampleKind::Group {
                build_group_algebra(&f.table, &field).map_err(parse)
            } else {
                build_drinfeld_double(&f.table, &field).map_err(parse)
            }
        }
        ExampleKind::Groupoid => {
            let f = GroupoidFile::parse(text).map_err(parse)?;
            f.table.validate().map_err(parse)?;
            let field = make_field(field.or(f.field).unwrap_or_else(|| groupoid_splitting_field(&f.table)))?;
            build_groupoid_algebra(&f.table, &field).map_err(parse)
        }
    }
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    /// The report (or algebra file for `example`).
    pub output: String,
    /// Human-facing diagnostics.
    pub diagnostics: String,
    /// False when the output went to `--out`.
    pub to_stdout: bool,
}

/// Parses `args` (including the program name) and runs the command. The
/// output is also written to `--out` when given.
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_PARSE, output: String::new(), diagnostics: text, to_stdout: true }
            } else {
                Outcome { code: EXIT_OK, output: text, diagnostics: String::new(), to_stdout: true }
            };
        }
    };
    match execute(&cli) {
        Ok((code, output, diagnostics)) => {
            if let Some(path) = &cli.out {
                if let Err(source) = fs::write(path, &output) {
                    let e = CliError::Io { path: path.display().to_string(), source };
                    return Outcome { code: e.exit_code(), output, diagnostics: e.to_string(), to_stdout: false };
                }
            }
            Outcome { code, output, diagnostics, to_stdout: cli.out.is_none() }
        }
        Err(e) => {
            Outcome { code: e.exit_code(), output: String::new(), diagnostics: format!("error: {e}\n"), to_stdout: true }
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, String, String), CliError> {
    let blank = |command: &str, digest: String| RunReport {
        schema_version: REPORT_SCHEMA,
        command: command.to_string(),
        input_sha256: digest,
        seed: cli.seed,
        precision: cli.precision,
        height_bound: cli.height_bound,
        passed: false,
        checks: Vec::new(),
        decomposition: None,
        enumeration: None,
        timing: Vec::new(),
    };
    let finish = |rep: RunReport| {
        let code = if rep.passed { EXIT_OK } else { EXIT_FAILED };
        let diag = rep.failures().map(|c| format!("FAIL [{}] {}\n", c.suite, c.check.name)).collect();
        (code, rep.render(cli.format), diag)
    };
    match &cli.command {
        Command::Verify { file } | Command::Decompose { file } => {
            let text = read(file)?;
            let (h, r) = load_algebra(&text)?;
            let (name, depth) = match cli.command {
                Command::Verify { .. } => ("verify", 0),
                _ => ("decompose", 1),
            };
            let mut rep = blank(name, digest(&[&text]));
            pipeline(cli, &h, r.as_ref(), depth, None, &mut rep)?;
            Ok(finish(rep))
        }
        Command::EnumerateYd { file, modules } => {
            let text = read(file)?;
            let mtext = modules.as_deref().map(read).transpose()?;
            let (h, r) = load_algebra(&text)?;
            let mut rep = blank("enumerate-yd", digest(&[&text, mtext.as_deref().unwrap_or("")]));
            pipeline(cli, &h, r.as_ref(), 2, mtext.as_deref(), &mut rep)?;
            Ok(finish(rep))
        }
        Command::Example { kind, table, field } => {
            let text = read(table)?;
            let ex = build_example(*kind, &text, *field)?;
            let mut rep = Report::new();
            rep.extend(wha_verify(&ex.algebra));
            rep.extend(qt_verify(&ex.algebra, &ex.r).0);
            let file = AlgebraFile::from_algebra(&ex.algebra, Some(&ex.r));
            let diag: String = rep.failures().map(|c| format!("FAIL {}\n", c.name)).collect();
            Ok((if rep.passed() { EXIT_OK } else { EXIT_FAILED }, file.to_json(), diag))
        }
    }
}
