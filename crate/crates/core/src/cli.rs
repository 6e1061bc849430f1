//! Command-line surface. Every subcommand prints `key<TAB>value` lines in a
//! fixed key order.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a well-formed input on
//! which the computation is undefined (singular form, sweep too large,
//! non-homology-sphere graph request).

use std::fmt::{self, Write as _};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use crate::acceptance;
use crate::brieskorn::{self, ExponentTriple};
use crate::enumerate::{self, EnumerateError, SweepMode};
use crate::frames;
use crate::graphfile::{self, GraphFile};
use crate::plumbing::{self, PlumbingError};
use crate::todd::{self, ChernVector, ToddConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "singlink",
    version,
    about = "Exact invariants of surface singularity links"
)]
pub struct Cli {
    /// Align values in columns instead of tab-separating them.
    #[arg(long, global = true)]
    pub human: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Todd polynomial T_k, optionally evaluated on Chern numbers.
    Todd(ToddArgs),
    /// Intersection form, definiteness and canonical cycle of a graph file.
    GraphCheck { file: PathBuf },
    /// Invariants of the Brieskorn–Pham germ x^a + y^b + z^c.
    Brieskorn(BrieskornArgs),
    /// Ê-invariant of the canonical frame, optionally twisted.
    Ehat(EhatArgs),
    /// Sweeps over weight or genus vectors of a graph.
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
    /// Run the embedded acceptance suite.
    Selftest,
}

#[derive(Debug, Args)]
pub struct ToddArgs {
    #[arg(long)]
    pub order: usize,
    /// Chern numbers, e.g. `c1=0,c2=9`; omitted classes are zero.
    #[arg(long)]
    pub eval: Option<String>,
    #[arg(long, default_value_t = todd::DEFAULT_MAX_GRADE)]
    pub max_grade: usize,
}

#[derive(Debug, Args)]
pub struct BrieskornArgs {
    #[arg(allow_negative_numbers = true)]
    pub a: i64,
    #[arg(allow_negative_numbers = true)]
    pub b: i64,
    #[arg(allow_negative_numbers = true)]
    pub c: i64,
    /// Write the star-shaped resolution graph to this path.
    #[arg(long)]
    pub emit_graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EhatArgs {
    #[arg(long)]
    pub mu: u64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub offset: i64,
}

#[derive(Debug, Subcommand)]
pub enum EnumerateCommand {
    /// Fraction of weight vectors in {-N..-1}^r giving a negative definite form.
    Weights {
        file: PathBuf,
        /// Most negative weight, -N.
        #[arg(long, allow_negative_numbers = true)]
        wmin: i64,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
    },
    /// Genus vectors in {0..gmax}^r with integral canonical cycle.
    Genera {
        file: PathBuf,
        #[arg(long)]
        gmax: u32,
    },
}

/// Ordered `key<TAB>value` lines.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct ResultRecord(Vec<(String, String)>);

impl ResultRecord {
    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.0.push((key.to_string(), value.to_string()));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.0
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, human: bool) -> String {
        let width = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.0 {
            if human {
                writeln!(out, "{k:<width$}  {v}").unwrap();
            } else {
                writeln!(out, "{k}\t{v}").unwrap();
            }
        }
        out
    }
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, message: impl fmt::Display) -> Self {
        Outcome {
            code,
            stdout,
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let human = cli.human;
    match &cli.command {
        Command::Todd(args) => cmd_todd(args, human),
        Command::GraphCheck { file } => cmd_graph_check(file, human),
        Command::Brieskorn(args) => cmd_brieskorn(args, human),
        Command::Ehat(args) => cmd_ehat(args, human),
        Command::Enumerate(EnumerateCommand::Weights {
            file,
            wmin,
            samples,
            seed,
        }) => cmd_enumerate_weights(file, *wmin, *samples, *seed, human),
        Command::Enumerate(EnumerateCommand::Genera { file, gmax }) => {
            cmd_enumerate_genera(file, *gmax, human)
        }
        Command::Selftest => cmd_selftest(),
    }
}

fn parse_eval(spec: &str, grade: usize) -> Result<ChernVector, String> {
    let mut values = vec![0i64; grade];
    for part in spec.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected `cI=VALUE`, got `{part}`"))?;
        let index: usize = key
            .strip_prefix('c')
            .and_then(|i| i.parse().ok())
            .ok_or_else(|| format!("bad Chern class name `{key}`"))?;
        if index == 0 || index > grade {
            return Err(format!("Chern class c{index} is outside c1..c{grade}"));
        }
        values[index - 1] = value
            .parse()
            .map_err(|_| format!("bad value `{value}` for {key}"))?;
    }
    Ok(ChernVector::new(values))
}

fn cmd_todd(args: &ToddArgs, human: bool) -> Outcome {
    let config = ToddConfig {
        max_grade: args.max_grade,
    };
    let poly = match config.todd_polynomial(args.order) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    let mut rec = ResultRecord::default();
    rec.push(&format!("T{}", args.order), &poly);
    if let Some(spec) = &args.eval {
        let chern = match parse_eval(spec, poly.grade()) {
            Ok(c) => c,
            Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
        };
        let value = todd::evaluate_genus(&poly, &chern).expect("length matches grade");
        rec.push("Td", value);
    }
    Outcome::ok(rec.render(human))
}

fn load_graph(file: &PathBuf) -> Result<GraphFile, Outcome> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        Outcome::fail(
            EXIT_USAGE,
            String::new(),
            format!("{}: {e}", file.display()),
        )
    })?;
    graphfile::parse(&text).map_err(|e| {
        Outcome::fail(
            EXIT_USAGE,
            String::new(),
            format!("{}: {e}", file.display()),
        )
    })
}

fn join_rationals(values: &[BigRational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Graph summary record; `Err` carries the partial record for a singular form.
pub fn graph_check_record(graph: &plumbing::PlumbingGraph) -> Result<ResultRecord, ResultRecord> {
    let m = plumbing::intersection_matrix(graph);
    let mut rec = ResultRecord::default();
    rec.push("r", graph.vertex_count());
    rec.push("edges", graph.edges().len());
    match plumbing::canonical_cycle(graph) {
        Ok(k) => {
            rec.push("det", plumbing::determinant(&m));
            rec.push("negative_definite", plumbing::is_negative_definite(&m));
            rec.push("numerically_gorenstein", k.integral);
            rec.push("K", join_rationals(&k.coefficients));
            rec.push("K2", &k.k_squared);
            rec.push("chi_top", plumbing::euler_char_exceptional(graph));
            Ok(rec)
        }
        Err(e) => {
            rec.push("error", e.to_string());
            rec.push("negative_definite", plumbing::is_negative_definite(&m));
            rec.push("chi_top", plumbing::euler_char_exceptional(graph));
            Err(rec)
        }
    }
}

fn cmd_graph_check(file: &PathBuf, human: bool) -> Outcome {
    let gf = match load_graph(file) {
        Ok(g) => g,
        Err(o) => return o,
    };
    match graph_check_record(&gf.graph) {
        Ok(rec) => Outcome::ok(rec.render(human)),
        Err(rec) => Outcome::fail(
            EXIT_DOMAIN,
            rec.render(human),
            PlumbingError::SingularIntersectionForm,
        ),
    }
}

pub fn brieskorn_record(t: &ExponentTriple) -> ResultRecord {
    let p = brieskorn::profile(t);
    let mut rec = ResultRecord::default();
    rec.push("mu", p.mu);
    rec.push("pg", p.p_g);
    rec.push("sigma", p.sigma);
    rec.push("chi", p.chi);
    rec.push("ehat", p.ehat);
    rec.push("e_r", p.e_r);
    rec.push("e_c", p.e_c);
    rec.push("rochlin", p.rochlin);
    match p.casson {
        Some(c) => rec.push("casson", c),
        None => rec.push("casson", "n/a"),
    }
    rec
}

fn cmd_brieskorn(args: &BrieskornArgs, human: bool) -> Outcome {
    let t = match ExponentTriple::new(args.a, args.b, args.c) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    let stdout = brieskorn_record(&t).render(human);
    if let Some(path) = &args.emit_graph {
        let graph = match brieskorn::seifert_graph(&t) {
            Ok(g) => g,
            Err(e) => return Outcome::fail(EXIT_DOMAIN, stdout, e),
        };
        let [a, b, c] = t.exponents();
        let file = GraphFile::new(Some(format!("brieskorn_{a}_{b}_{c}")), graph);
        if let Err(e) = std::fs::write(path, graphfile::emit(&file)) {
            return Outcome::fail(EXIT_USAGE, stdout, format!("{}: {e}", path.display()));
        }
    }
    Outcome::ok(stdout)
}

fn cmd_ehat(args: &EhatArgs, human: bool) -> Outcome {
    let rho = frames::canonical_frame("link", args.mu);
    let twisted = frames::act(&rho, args.offset);
    let bundle = frames::reduce(frames::ehat(&twisted).expect("Milnor-based frame"));
    let mut rec = ResultRecord::default();
    rec.push("ehat", bundle.ehat);
    rec.push("e_r", bundle.e_r);
    rec.push("e_c", bundle.e_c);
    Outcome::ok(rec.render(human))
}

fn cmd_enumerate_weights(
    file: &PathBuf,
    wmin: i64,
    samples: Option<u64>,
    seed: Option<u64>,
    human: bool,
) -> Outcome {
    if wmin > -1 {
        return Outcome::fail(
            EXIT_USAGE,
            String::new(),
            format!("--wmin must be at most -1, got {wmin}"),
        );
    }
    let gf = match load_graph(file) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let bound = wmin.unsigned_abs();
    let mode = match samples {
        Some(samples) => SweepMode::Sampled {
            samples,
            seed: seed.unwrap_or(0),
        },
        None => SweepMode::Exhaustive,
    };
    let rep = match enumerate::sweep_weights(&gf.graph, bound, mode) {
        Ok(r) => r,
        Err(e @ EnumerateError::TooLargeUseSampling { .. }) => {
            return Outcome::fail(EXIT_DOMAIN, String::new(), e)
        }
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    let mut rec = ResultRecord::default();
    rec.push("r", rep.vertex_count);
    rec.push("wmin", wmin);
    match rep.mode {
        SweepMode::Exhaustive => rec.push("mode", "exhaustive"),
        SweepMode::Sampled { samples, seed } => {
            rec.push("mode", "sampled");
            rec.push("samples", samples);
            rec.push("seed", seed);
        }
    }
    rec.push("total", rep.total);
    rec.push("negative_definite", rep.negative_definite);
    rec.push("fraction", rep.fraction());
    rec.push("dominant", rep.dominant);
    rec.push("dominant_negative_definite", rep.dominant_negative_definite);
    Outcome::ok(rec.render(human))
}

fn cmd_enumerate_genera(file: &PathBuf, gmax: u32, human: bool) -> Outcome {
    let gf = match load_graph(file) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut rec = ResultRecord::default();
    rec.push("r", gf.graph.vertex_count());
    rec.push("gmax", gmax);
    rec.push("condition", "numerically-gorenstein");
    match enumerate::gorenstein_genera(&gf.graph, gmax) {
        Ok(set) => {
            let list = set
                .solutions
                .iter()
                .map(|g| {
                    g.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(":")
                })
                .collect::<Vec<_>>()
                .join(",");
            rec.push("count", set.solutions.len());
            rec.push("solutions", list);
            rec.push("period", &set.lattice_period);
            Outcome::ok(rec.render(human))
        }
        Err(e @ (EnumerateError::TooLargeUseSampling { .. } | EnumerateError::Plumbing(_))) => {
            rec.push("error", &e);
            Outcome::fail(EXIT_DOMAIN, rec.render(human), e)
        }
        Err(e) => Outcome::fail(EXIT_USAGE, String::new(), e),
    }
}

fn cmd_selftest() -> Outcome {
    let results = acceptance::run_all();
    let mut out = String::new();
    for r in &results {
        writeln!(out, "{r}").unwrap();
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(
        out,
        "summary\t{} passed\t{failed} failed",
        results.len() - failed
    )
    .unwrap();
    if failed == 0 {
        Outcome::ok(out)
    } else {
        Outcome::fail(
            EXIT_USAGE,
            out,
            format!("{failed} acceptance criteria failed"),
        )
    }
}
