//! Command-line front end for `nilgraph-core`.
//!
//! [`run`] takes the full argument vector and two output streams and returns
//! the process exit code, so the binary is a thin wrapper and tests can drive
//! it in-process.

pub mod report;
pub mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nilgraph_core::derived::cover_from_independence;
use nilgraph_core::indep::independence_polynomial_bounded;
use nilgraph_core::{
    cover_poly_by_extraction, cut_polynomial_laurent, cut_polynomial_xor, enumerate_independent_sets,
    expected_random_cut, indep_poly_by_extraction, parse_dimacs, parse_edge_list, Error, Graph, Poly,
    DEFAULT_MAX_TERMS,
};

use report::{EnumerationReport, PolynomialReport, Report, Scalars};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_TOO_LARGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nilgraph", version, about = "Counting polynomials of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Independence polynomial.
    Indep {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = IndepMethod::Esp)]
        method: IndepMethod,
    },
    /// Clique polynomial (independence polynomial of the complement).
    Clique {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = IndepMethod::Esp)]
        method: IndepMethod,
    },
    /// Vertex-cover polynomial.
    Cover {
        #[command(flatten)]
        common: Common,
        /// `esp` reverses the independence polynomial.
        #[arg(long, value_enum, default_value_t = IndepMethod::Esp)]
        method: IndepMethod,
    },
    /// Bipartite-cut polynomial.
    Cut {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = CutMethod::Xor)]
        method: CutMethod,
    },
    /// List the independent sets of order k.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Cross-check every route against the brute-force oracles on random graphs.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=verify::MAX_N))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = verify::DEFAULT_WORK)]
        max_work: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<verify::Fault>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Edge list or DIMACS file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on live terms in intermediate polynomials.
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_work: usize,
    /// Report 0 ms so repeated runs print identical bytes.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum IndepMethod {
    Esp,
    Extraction,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CutMethod {
    Laurent,
    Xor,
}

impl IndepMethod {
    fn name(self) -> &'static str {
        match self {
            IndepMethod::Esp => "esp",
            IndepMethod::Extraction => "extraction",
        }
    }
}

impl CutMethod {
    fn name(self) -> &'static str {
        match self {
            CutMethod::Laurent => "laurent",
            CutMethod::Xor => "xor",
        }
    }
}

/// Maps a library error to an exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::WorkLimit { .. } | Error::TooLarge { .. } => EXIT_TOO_LARGE,
        _ => EXIT_INPUT,
    }
}

/// Parses `text` as DIMACS when it has a `p` line, as an edge list otherwise.
pub fn parse_graph(text: &str) -> nilgraph_core::Result<Graph> {
    let dimacs = text
        .lines()
        .any(|l| l.split_whitespace().next() == Some("p"));
    if dimacs {
        parse_dimacs(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

enum Failure {
    Io(io::Error),
    Lib(Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_graph(common: &Common, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let text = match &common.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_graph(&text)?)
}

fn elapsed_ms(start: Instant, common: &Common) -> u64 {
    if common.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    }
}

type Route = dyn Fn(&Graph, usize) -> nilgraph_core::Result<Poly>;

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let (common, name, method, compute): (Common, &str, &str, Box<Route>) = match cmd {
        Command::Verify {
            seed,
            count,
            n_max,
            format,
            max_work,
            inject_fault,
        } => {
            let summary = verify::run(&verify::Config {
                seed,
                count,
                n_max: n_max as usize,
                max_work,
                fault: inject_fault,
            });
            match format {
                Format::Text => out.write_all(summary.to_text().as_bytes())?,
                Format::Json => writeln!(out, "{}", summary.to_json())?,
            }
            return Ok(if summary.passed { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Enumerate { common, k } => {
            let g = read_graph(&common, stdin)?;
            let start = Instant::now();
            let sets = enumerate_independent_sets(&g, k)?;
            let rep = EnumerationReport {
                n: g.order(),
                m: g.size(),
                k,
                count: sets.len(),
                sets,
                ms: elapsed_ms(start, &common),
            };
            match common.format {
                Format::Text => out.write_all(rep.to_text().as_bytes())?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rep).expect("serializes"))?,
            }
            return Ok(EXIT_OK);
        }
        Command::Indep { common, method } => (
            common,
            "independence",
            method.name(),
            Box::new(move |g: &Graph, w: usize| indep_route(g, method, w)),
        ),
        Command::Clique { common, method } => (
            common,
            "clique",
            method.name(),
            Box::new(move |g: &Graph, w: usize| indep_route(&g.complement(), method, w)),
        ),
        Command::Cover { common, method } => (
            common,
            "vertex cover",
            method.name(),
            Box::new(move |g: &Graph, w: usize| match method {
                IndepMethod::Esp => Ok(cover_from_independence(
                    &independence_polynomial_bounded(g, w)?,
                    g.order(),
                )),
                IndepMethod::Extraction => cover_poly_by_extraction(g, w),
            }),
        ),
        Command::Cut { common, method } => (
            common,
            "cut",
            method.name(),
            Box::new(move |g: &Graph, w: usize| match method {
                CutMethod::Laurent => cut_polynomial_laurent(g, w),
                CutMethod::Xor => cut_polynomial_xor(g),
            }),
        ),
    };
    let g = read_graph(&common, stdin)?;
    let start = Instant::now();
    let poly: Poly = compute(&g, common.max_work)?;
    let scalars = scalars_for(name, &poly)?;
    let rep = Report {
        n: g.order(),
        m: g.size(),
        polynomial: PolynomialReport {
            name: name.to_string(),
            method: method.to_string(),
            coeffs: poly.to_decimal_strings(),
        },
        scalars,
        ms: elapsed_ms(start, &common),
    };
    match common.format {
        Format::Text => out.write_all(rep.to_text(!common.no_timing).as_bytes())?,
        Format::Json => writeln!(out, "{}", rep.to_json())?,
    }
    Ok(EXIT_OK)
}

fn indep_route(g: &Graph, method: IndepMethod, max_work: usize) -> nilgraph_core::Result<Poly> {
    match method {
        IndepMethod::Esp => independence_polynomial_bounded(g, max_work),
        IndepMethod::Extraction => indep_poly_by_extraction(g, max_work),
    }
}

fn scalars_for(name: &str, p: &Poly) -> nilgraph_core::Result<Scalars> {
    let top = p.degree().unwrap_or(0);
    let mut s = Scalars::default();
    match name {
        "independence" => {
            s.alpha = Some(top);
            // the first power of the vertex-monomial sum that vanishes
            s.eta = Some(top + 1);
        }
        "clique" => s.gamma = Some(top),
        "vertex cover" => s.beta = Some(p.low_degree().unwrap_or(0)),
        "cut" => s.expected_cut = Some(expected_random_cut(p)?.to_string()),
        _ => unreachable!("unknown polynomial {name}"),
    }
    Ok(s)
}
