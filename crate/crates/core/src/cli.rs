//! The `d2c` command-line front end.
//!
//! Exit codes: 0 YES (or found), 1 NO (or none), 2 input error, 3 brute-force
//! refusal, 4 usage error, 5 internal certificate failure. A file with several
//! graph6 records exits with the largest per-record code.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::d2c::{decide_d2c, verify_distinguishing, verify_verdict};
use crate::error::Error;
use crate::graph::{parse_edge_list, parse_graph6_lines, write_graph6, Graph, SubdivisionTag, TwoColoring};
use crate::iso::{are_isomorphic, canonical_form, has_color_preserving_nta, has_nta};
use crate::oracle::Oracle;
use crate::reductions::{cc_to_ga, ga_to_cc, CcToGaCase};

pub mod exit {
    pub const YES: i32 = 0;
    pub const NO: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const REFUSED: i32 = 3;
    pub const USAGE: i32 = 4;
    pub const INTERNAL: i32 = 5;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(
    name = "d2c",
    version,
    about = "Decide whether a graph has a proper distinguishing 2-coloring",
    after_help = "Graph files hold one graph6 record per line (graph6 size field up to n = 68719476735), \
                  or a single edge list with --format edgelist. Use - for stdin."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value = "graph6")]
    format: Format,

    /// Emit one JSON object per result instead of text.
    #[arg(long, global = true)]
    machine: bool,

    /// Largest n the brute-force oracle accepts.
    #[arg(long, global = true, default_value_t = crate::oracle::DEFAULT_THRESHOLD)]
    brute_threshold: usize,

    /// Re-verify every certificate before printing it.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide chi_D(G) <= 2 with a certificate.
    Decide { input: PathBuf },
    /// Decide chi_D(G) <= 2 by exhaustive search (small graphs only).
    Oracle { input: PathBuf },
    /// Check whether a coloring (one color per line) is proper and distinguishing.
    CheckColoring { graph: PathBuf, coloring: PathBuf },
    /// Build a connected graph that is not distinguishing-2-colorable iff the input has a nontrivial automorphism.
    ReduceGaToCc { input: PathBuf },
    /// Build a graph with a nontrivial automorphism iff the connected input is not distinguishing-2-colorable.
    ReduceCcToGa { input: PathBuf },
    /// Find an isomorphism between two graphs.
    Iso { first: PathBuf, second: PathBuf },
    /// Find a nontrivial automorphism.
    Auto { input: PathBuf },
    /// Print the canonical graph6 key.
    Canon { input: PathBuf },
}

/// Line number and parse result of one input graph.
type Record = (usize, Result<Graph, Error>);

/// Result of one command on one graph.
struct Report {
    code: i32,
    text: String,
    fields: Map<String, Value>,
}

impl Report {
    fn new(code: i32, text: impl Into<String>) -> Self {
        Report { code, text: text.into(), fields: Map::new() }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Refused { .. } => exit::REFUSED,
            Error::Internal(_) => exit::INTERNAL,
            _ => exit::INPUT,
        };
        Report::new(code, String::new()).with("error", e.to_string())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                exit::USAGE
            };
        }
    };
    let mut io = Io { stdin, out, err };
    cli.execute(&mut io)
}

impl Cli {
    fn name(&self) -> &'static str {
        match self.command {
            Command::Decide { .. } => "decide",
            Command::Oracle { .. } => "oracle",
            Command::CheckColoring { .. } => "check-coloring",
            Command::ReduceGaToCc { .. } => "reduce-ga-to-cc",
            Command::ReduceCcToGa { .. } => "reduce-cc-to-ga",
            Command::Iso { .. } => "iso",
            Command::Auto { .. } => "auto",
            Command::Canon { .. } => "canon",
        }
    }

    fn execute(&self, io: &mut Io) -> i32 {
        match &self.command {
            Command::Decide { input }
            | Command::Oracle { input }
            | Command::ReduceGaToCc { input }
            | Command::ReduceCcToGa { input }
            | Command::Auto { input }
            | Command::Canon { input } => {
                let records = match self.load(input, io) {
                    Ok(r) => r,
                    Err(e) => return self.emit(io, None, None, Report::error(&e)),
                };
                let many = records.len() > 1;
                let mut code = exit::YES;
                for (line, parsed) in records {
                    let started = Instant::now();
                    let report = match &parsed {
                        Ok(g) => self.per_graph(g),
                        Err(e) => Report::error(e),
                    };
                    let report = report.with("elapsed_us", started.elapsed().as_micros() as u64);
                    let graph = parsed.as_ref().ok().map(write_graph6);
                    code = code.max(self.emit(io, many.then_some(line), graph, report));
                }
                code
            }
            Command::CheckColoring { graph, coloring } => {
                let report = self.check_coloring(graph, coloring, io);
                self.emit(io, None, None, report)
            }
            Command::Iso { first, second } => {
                let report = self.iso(first, second, io);
                self.emit(io, None, None, report)
            }
        }
    }

    fn read(&self, path: &Path, io: &mut Io) -> Result<String, Error> {
        let mut text = String::new();
        let res = if path.as_os_str() == "-" {
            io.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Ok(text)
    }

    fn load(&self, path: &Path, io: &mut Io) -> Result<Vec<Record>, Error> {
        let text = self.read(path, io)?;
        let records = match self.format {
            Format::Graph6 => parse_graph6_lines(&text),
            Format::Edgelist => vec![(1, parse_edge_list(&text))],
        };
        if records.is_empty() {
            return Err(Error::InvalidInput(format!("{}: no graph found", path.display())));
        }
        Ok(records)
    }

    fn load_one(&self, path: &Path, io: &mut Io) -> Result<Graph, Error> {
        let mut records = self.load(path, io)?;
        if records.len() != 1 {
            return Err(Error::InvalidInput(format!("{}: expected exactly one graph", path.display())));
        }
        records.remove(0).1
    }

    fn per_graph(&self, g: &Graph) -> Report {
        let result = match &self.command {
            Command::Decide { .. } => self.decide(g),
            Command::Oracle { .. } => self.oracle(g),
            Command::ReduceGaToCc { .. } => self.reduce_ga_to_cc(g),
            Command::ReduceCcToGa { .. } => self.reduce_cc_to_ga(g),
            Command::Auto { .. } => Ok(self.auto(g)),
            Command::Canon { .. } => Ok(self.canon(g)),
            Command::CheckColoring { .. } | Command::Iso { .. } => unreachable!("not a per-graph command"),
        };
        result.unwrap_or_else(|e| Report::error(&e))
    }

    fn verified(&self, text: String, ok: bool) -> Result<(String, Option<bool>), Error> {
        if !self.verify {
            return Ok((text, None));
        }
        if !ok {
            return Err(Error::Internal(format!("certificate failed verification: {text}")));
        }
        Ok((format!("{text} verified"), Some(true)))
    }

    fn decide(&self, g: &Graph) -> Result<Report, Error> {
        let verdict = decide_d2c(g)?;
        let ok = self.verify && verify_verdict(g, &verdict)?;
        let (text, verified) = self.verified(verdict.to_string(), ok)?;
        let code = if verdict.is_yes() { exit::YES } else { exit::NO };
        let mut report = Report::new(code, text);
        if let Value::Object(fields) = serde_json::to_value(&verdict).expect("verdict serializes") {
            report.fields.extend(fields);
        }
        Ok(match verified {
            Some(v) => report.with("verified", v),
            None => report,
        })
    }

    fn oracle(&self, g: &Graph) -> Result<Report, Error> {
        let yes = Oracle::new(self.brute_threshold).chi_d_le_2(g)?;
        let (code, word) = if yes { (exit::YES, "YES") } else { (exit::NO, "NO") };
        Ok(Report::new(code, word).with("verdict", word))
    }

    fn reduce_ga_to_cc(&self, g: &Graph) -> Result<Report, Error> {
        let r = ga_to_cc(g)?;
        let g6 = write_graph6(&r.graph);
        let tags: Vec<String> = r
            .map
            .iter()
            .flat_map(|m| &m.tags)
            .map(|t| match *t {
                SubdivisionTag::Original(v) => format!("V{v}"),
                SubdivisionTag::EdgeVertex(u, v) => format!("E{u}-{v}"),
            })
            .collect();
        let map = if r.map.is_some() { format!("[{}]", tags.join(",")) } else { "none".into() };
        let text = format!("{g6}\ncase={} complemented={}\nmap={map}", r.case.tag(), r.complemented);
        let (text, verified) = self.verified(text, r.graph.is_connected())?;
        let report = Report::new(exit::YES, text)
            .with("output", g6)
            .with("case", r.case.tag())
            .with("complemented", r.complemented)
            .with("map", serde_json::to_value(&r.map).expect("map serializes"));
        Ok(match verified {
            Some(v) => report.with("verified", v),
            None => report,
        })
    }

    fn reduce_cc_to_ga(&self, g: &Graph) -> Result<Report, Error> {
        let r = cc_to_ga(g)?;
        let g6 = write_graph6(&r.graph);
        let gadget = match &r.gadget {
            Some(m) => format!(
                "a={} b={} c={} x=[{}]",
                m.a,
                m.b,
                m.c,
                m.x.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            ),
            None => "none".into(),
        };
        let text = format!("{g6}\ncase={}\ngadget={gadget}", r.case.tag());
        let ok = match (&r.gadget, r.case) {
            (Some(m), CcToGaCase::Balanced) => 2 * m.x.len() == m.source_n && r.graph.is_connected(),
            (None, _) => true,
            _ => false,
        };
        let (text, verified) = self.verified(text, ok)?;
        let report = Report::new(exit::YES, text)
            .with("output", g6)
            .with("case", r.case.tag())
            .with("gadget", serde_json::to_value(&r.gadget).expect("gadget serializes"));
        Ok(match verified {
            Some(v) => report.with("verified", v),
            None => report,
        })
    }

    fn auto(&self, g: &Graph) -> Report {
        match has_nta(g) {
            Some(p) => {
                let text = if self.verify { format!("{p} verified") } else { p.to_string() };
                Report::new(exit::YES, text).with("nta", p.images().to_vec())
            }
            None => Report::new(exit::NO, "NONE").with("nta", Value::Null),
        }
    }

    fn canon(&self, g: &Graph) -> Report {
        let cf = canonical_form(g, None);
        Report::new(exit::YES, cf.key.clone())
            .with("key", cf.key)
            .with("labeling", cf.labeling.images().to_vec())
    }

    fn iso(&self, first: &Path, second: &Path, io: &mut Io) -> Report {
        let (g1, g2) = match (self.load_one(first, io), self.load_one(second, io)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Report::error(&e),
        };
        match are_isomorphic(&g1, &g2) {
            Some(p) => {
                let text = if self.verify { format!("{p} verified") } else { p.to_string() };
                Report::new(exit::YES, text).with("iso", p.images().to_vec())
            }
            None => Report::new(exit::NO, "NONE").with("iso", Value::Null),
        }
    }

    fn check_coloring(&self, graph: &Path, coloring: &Path, io: &mut Io) -> Report {
        let mut run = || -> Result<Report, Error> {
            let g = self.load_one(graph, io)?;
            let c = parse_coloring(&self.read(coloring, io)?)?;
            let distinguishing = verify_distinguishing(&g, &c)?;
            if distinguishing {
                return Ok(Report::new(exit::YES, "DISTINGUISHING").with("distinguishing", true));
            }
            let report = Report::new(exit::NO, "").with("distinguishing", false);
            Ok(if !c.is_proper(&g) {
                Report { text: "NOT-DISTINGUISHING not-proper".into(), ..report }.with("proper", false)
            } else {
                let p = has_color_preserving_nta(&g, &c).expect("coloring is not distinguishing");
                Report { text: format!("NOT-DISTINGUISHING nta={p}"), ..report }
                    .with("proper", true)
                    .with("nta", p.images().to_vec())
            })
        };
        run().unwrap_or_else(|e| Report::error(&e))
    }

    /// Prints one report and returns its exit code.
    fn emit(&self, io: &mut Io, line: Option<usize>, graph: Option<String>, report: Report) -> i32 {
        if self.machine {
            let mut obj = Map::new();
            obj.insert("command".into(), json!(self.name()));
            if let Some(l) = line {
                obj.insert("line".into(), json!(l));
            }
            if let Some(g6) = graph {
                obj.insert("graph".into(), json!(g6));
            }
            obj.insert("exit".into(), json!(report.code));
            obj.extend(report.fields);
            let _ = writeln!(io.out, "{}", Value::Object(obj));
            return report.code;
        }
        let prefix = line.map(|l| format!("line {l}: ")).unwrap_or_default();
        if let Some(Value::String(msg)) = report.fields.get("error") {
            let _ = writeln!(io.err, "{prefix}error: {msg}");
        } else {
            let _ = writeln!(io.out, "{prefix}{}", report.text);
        }
        report.code
    }
}

/// One color (1 or 2) per line; line `i` colors vertex `i - 1`. Blank lines are ignored.
pub fn parse_coloring(text: &str) -> Result<TwoColoring, Error> {
    let mut colors = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        match l {
            "1" => colors.push(1),
            "2" => colors.push(2),
            _ => return Err(Error::Coloring { line: i + 1, msg: format!("expected 1 or 2, found {l:?}") }),
        }
    }
    TwoColoring::new(colors)
}
