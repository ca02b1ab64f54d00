//! The `loccol` command line.
//!
//! Exit codes: 0 success, 1 verification failure (a coloring that is not
//! locating, or a generated tree that fails its checks), 2 unreadable or
//! invalid input, 3 search limit reached (the known interval for `chi_L` is
//! printed on standard error).

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use locating::bounds::bound_table;
use locating::coloring::{color_codes, is_locating};
use locating::extremal::{build_extremal_tree, verify_tree};
use locating::io::{format_coloring_json, format_edge_list, format_labels_json, parse_coloring, parse_edge_list, to_dot};
use locating::solver::locating_chromatic_number;
use locating::trees::free_trees;
use locating::{Coloring, Error, Graph, SearchConfig};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "loccol", version, about = "Locating colorings and the locating chromatic number")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute chi_L of a connected graph and print a certificate coloring.
    Solve {
        /// Edge-list file; standard input when omitted or "-".
        input: Option<PathBuf>,
        /// Write the certificate coloring JSON here instead of standard output.
        #[arg(short = 'c', long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check whether a coloring is locating; exit 0 iff it is.
    Check {
        /// Edge-list file.
        graph: PathBuf,
        /// Coloring as JSON or "v c" lines.
        coloring: PathBuf,
    },
    /// Print the color code of every vertex.
    Codes {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build T_k with its locating k-coloring and write it to a directory.
    GenExtremal {
        k: usize,
        #[arg(short, long, default_value = ".")]
        out_dir: PathBuf,
        /// Also write a DOT drawing.
        #[arg(long)]
        dot: bool,
    },
    /// Tabulate the old and corrected degree bounds.
    Bounds {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Solve every tree on 2..=n vertices and tabulate (n, max degree, chi_L).
    Census {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Debug, Clone, Args)]
pub struct Limits {
    /// Give up after this many search nodes.
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Give up after this many seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Disable symmetry breaking.
    #[arg(long)]
    pub no_symmetry: bool,
}

impl Limits {
    fn config(&self) -> Result<SearchConfig, Failure> {
        let time_limit = match self.time_limit {
            None => None,
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(Failure::input(format!("time limit must be positive, got {s}"))),
        };
        Ok(SearchConfig {
            node_limit: self.node_limit,
            symmetry_breaking: !self.no_symmetry,
            time_limit,
        })
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure::input(format!("{}: {e}", path.display()))
    }

    fn in_file(path: &Path, e: Error) -> Self {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Verification(_) => EXIT_VERIFICATION,
            Error::ResourceLimit { .. } => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve {
            input,
            certificate,
            format,
            limits,
        } => solve(input.as_deref(), certificate.as_deref(), format, &limits, out, err),
        Command::Check { graph, coloring } => check(&graph, &coloring, out),
        Command::Codes {
            graph,
            coloring,
            format,
        } => codes(&graph, &coloring, format, out),
        Command::GenExtremal { k, out_dir, dot } => gen_extremal(k, &out_dir, dot, out),
        Command::Bounds { k_max, format } => bounds(k_max, format, out),
        Command::Census { n, format, limits } => census(n, format, &limits, out),
    }
}

fn require_format(format: Format, allowed: &[Format], subcommand: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(ToString::to_string).collect();
        Err(Failure::input(format!(
            "format {format} is not available for {subcommand}; use one of {}",
            names.join(", ")
        )))
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::io(p, e)),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::input(format!("standard input: {e}")))?;
    Ok(text)
}

fn load_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    let shown = path.unwrap_or(Path::new("-"));
    parse_edge_list(&text).map_err(|e| Failure::in_file(shown, e))
}

fn load_pair(graph: &Path, coloring: &Path) -> Result<(Graph, Coloring), Failure> {
    let g = load_graph(Some(graph))?;
    let text = read_text(Some(coloring))?;
    let f = parse_coloring(&text).map_err(|e| Failure::in_file(coloring, e))?;
    if f.len() != g.vertex_count() {
        return Err(Failure::input(format!(
            "coloring assigns {} vertices but the graph has {}",
            f.len(),
            g.vertex_count()
        )));
    }
    Ok((g, f))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::io(path, e))
}

fn solve(
    input: Option<&Path>,
    certificate: Option<&Path>,
    format: Format,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    require_format(format, &[Format::Text, Format::Json], "solve")?;
    let cfg = limits.config()?;
    let g = load_graph(input)?;
    let start = Instant::now();
    let result = locating_chromatic_number(&g, &cfg)?;
    let elapsed = start.elapsed();
    writeln!(
        err,
        "nodes explored: {}, lower bound: {} ({}), elapsed: {elapsed:.2?}",
        result.nodes_explored, result.lower_bound, result.lower_bound_used
    )?;
    let cert = format_coloring_json(&result.certificate);
    if let Some(path) = certificate {
        write_file(path, &format!("{cert}\n"))?;
    }
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "chi_l": result.chi_l,
                "certificate": {"k": result.certificate.k(), "colors": result.certificate.colors()},
                "lower_bound": result.lower_bound,
                "lower_bound_used": result.lower_bound_used.to_string(),
                "nodes_explored": result.nodes_explored,
            });
            writeln!(out, "{doc}")?;
        }
        _ => {
            writeln!(out, "chi_L = {}", result.chi_l)?;
            if certificate.is_none() {
                writeln!(out, "{cert}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn check(graph: &Path, coloring: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let (g, f) = load_pair(graph, coloring)?;
    let verdict = is_locating(&g, &f)?;
    writeln!(out, "{verdict}")?;
    Ok(if verdict.is_locating() { EXIT_OK } else { EXIT_VERIFICATION })
}

fn codes(graph: &Path, coloring: &Path, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let (g, f) = load_pair(graph, coloring)?;
    let codes = color_codes(&g, &f)?;
    match format {
        Format::Text => {
            for (v, code) in codes.iter().enumerate() {
                writeln!(out, "{v} {} {code}", f.color(v))?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = codes
                .iter()
                .enumerate()
                .map(|(v, code)| serde_json::json!({"vertex": v, "color": f.color(v), "code": code.as_slice()}))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
        Format::Csv => {
            let dims: Vec<String> = (1..=f.k()).map(|j| format!("d{j}")).collect();
            writeln!(out, "vertex,color,{}", dims.join(","))?;
            for (v, code) in codes.iter().enumerate() {
                let cells: Vec<String> = code.as_slice().iter().map(ToString::to_string).collect();
                writeln!(out, "{v},{},{}", f.color(v), cells.join(","))?;
            }
        }
        Format::Dot => write!(out, "{}", to_dot(&g, Some(&f), None, Some(&codes)))?,
    }
    Ok(EXIT_OK)
}

fn gen_extremal(k: usize, dir: &Path, dot: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let tree = build_extremal_tree(k)?;
    let report = verify_tree(&tree)?;
    fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    let stem = format!("T_{k}");
    let paths = [
        (dir.join(format!("{stem}.edges")), format_edge_list(&tree.graph)),
        (dir.join(format!("{stem}.labels.json")), format_labels_json(&tree.labels) + "\n"),
        (dir.join(format!("{stem}.coloring.json")), format_coloring_json(&tree.coloring) + "\n"),
    ];
    for (path, contents) in &paths {
        write_file(path, contents)?;
    }
    let mut written: Vec<&PathBuf> = paths.iter().map(|(p, _)| p).collect();
    let dot_path = dir.join(format!("{stem}.dot"));
    if dot {
        let labels: Vec<String> = tree.labels.iter().map(ToString::to_string).collect();
        let codes = color_codes(&tree.graph, &tree.coloring)?;
        write_file(&dot_path, &to_dot(&tree.graph, Some(&tree.coloring), Some(&labels), Some(&codes)))?;
        written.push(&dot_path);
    }
    writeln!(out, "{report}")?;
    for path in written {
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(EXIT_OK)
}

fn bounds(k_max: usize, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    require_format(format, &[Format::Csv, Format::Text], "bounds")?;
    if k_max < 3 {
        return Err(Failure::input(format!("--k-max must be at least 3, got {k_max}")));
    }
    let rows = bound_table(k_max)?;
    let argmax = |a: &[usize]| a.iter().map(ToString::to_string).collect::<Vec<_>>().join(";");
    if format == Format::Csv {
        writeln!(out, "k,old_bound,new_bound,lemma_argmax")?;
        for r in &rows {
            writeln!(out, "{},{},{},{}", r.k, r.old_bound, r.new_bound, argmax(&r.lemma_argmax))?;
        }
    } else {
        writeln!(out, "{:>3} {:>20} {:>20} {:>8}", "k", "old_bound", "new_bound", "argmax")?;
        for r in &rows {
            writeln!(out, "{:>3} {:>20} {:>20} {:>8}", r.k, r.old_bound, r.new_bound, argmax(&r.lemma_argmax))?;
        }
    }
    Ok(EXIT_OK)
}

fn census(n: usize, format: Format, limits: &Limits, out: &mut dyn Write) -> Result<i32, Failure> {
    require_format(format, &[Format::Text, Format::Csv], "census")?;
    if n < 2 {
        return Err(Failure::input(format!("census needs n >= 2, got {n}")));
    }
    let cfg = limits.config()?;
    let trees: Vec<(usize, Graph)> = (2..=n).flat_map(|m| free_trees(m).into_iter().map(move |t| (m, t))).collect();
    let solved: Vec<(usize, usize, usize)> = trees
        .par_iter()
        .map(|(m, t)| {
            let chi = locating_chromatic_number(t, &cfg)?.chi_l;
            Ok((*m, t.max_degree()?, chi))
        })
        .collect::<Result<_, Error>>()?;
    let mut table: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for row in solved {
        *table.entry(row).or_default() += 1;
    }
    if format == Format::Csv {
        writeln!(out, "n,max_degree,chi_l,trees")?;
        for ((m, delta, chi), count) in &table {
            writeln!(out, "{m},{delta},{chi},{count}")?;
        }
    } else {
        writeln!(out, "{:>3} {:>10} {:>6} {:>6}", "n", "max_degree", "chi_L", "trees")?;
        for ((m, delta, chi), count) in &table {
            writeln!(out, "{m:>3} {delta:>10} {chi:>6} {count:>6}")?;
        }
    }
    Ok(EXIT_OK)
}
