use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use invcayley::export::{export, Format};
use invcayley::invariants::compute_report;
use invcayley::oracle::{
    growth_scan, strictly_increasing, verify, verify_grid, RingFamily, Status,
};
use invcayley::poly::{involutions_bruteforce, involutions_closed_form};
use invcayley::ring::{involutions_zn, involutions_zn_bruteforce};
use invcayley::{build_cayley_graph, Limits, PolyRingSpec};

const EXIT_FAIL: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_IO: u8 = 4;
const EXIT_USAGE: u8 = 64;

/// Involutory Cayley graphs of Z_n and Z_n[x] truncated at degree d.
#[derive(Debug, Parser)]
#[command(name = "invcayley", version)]
struct Cli {
    #[command(flatten)]
    caps: Caps,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Caps {
    /// Largest ring (vertex count) that may be built.
    #[arg(long, global = true, env = "INVCAYLEY_VERTEX_CAP", default_value_t = Limits::default().vertex_cap,
          value_parser = clap::value_parser!(u64).range(1..))]
    vertex_cap: u64,
    #[arg(long, global = true, env = "INVCAYLEY_EDGE_CAP", default_value_t = Limits::default().edge_cap,
          value_parser = clap::value_parser!(u64).range(1..))]
    edge_cap: u64,
    /// Largest ring scanned exhaustively for involutions.
    #[arg(long, global = true, env = "INVCAYLEY_BRUTE_FORCE_CAP", default_value_t = Limits::default().brute_force_cap,
          value_parser = clap::value_parser!(u64).range(1..))]
    brute_force_cap: u64,
    /// Largest component handed to the exact independence solver (at most 64).
    #[arg(long, global = true, env = "INVCAYLEY_EXACT_SOLVER_CAP", default_value_t = Limits::default().exact_solver_cap,
          value_parser = clap::value_parser!(u64).range(1..=64))]
    exact_solver_cap: u64,
    #[arg(long, global = true, env = "INVCAYLEY_PLANARITY_EDGE_CAP", default_value_t = Limits::default().planarity_edge_cap,
          value_parser = clap::value_parser!(u64).range(1..))]
    planarity_edge_cap: u64,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            vertex_cap: self.vertex_cap,
            edge_cap: self.edge_cap,
            brute_force_cap: self.brute_force_cap,
            exact_solver_cap: self.exact_solver_cap,
            planarity_edge_cap: self.planarity_edge_cap,
            ..Limits::default()
        }
    }
}

#[derive(Debug, Args)]
struct RingArgs {
    /// Modulus n >= 2.
    #[arg(long)]
    n: u64,
    /// Truncation degree d: polynomials of degree at most d.
    #[arg(long, default_value_t = 0)]
    degree: u32,
    /// zn-power-series runs the same computation as zn-poly.
    #[arg(long, default_value = "zn-poly")]
    ring: RingFamily,
}

impl RingArgs {
    fn spec(&self) -> Result<PolyRingSpec> {
        Ok(PolyRingSpec::new(self.n, self.degree)?)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the involutions (square roots of one).
    Inv {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        degree: Option<u32>,
        /// Also scan the whole ring and report agreement.
        #[arg(long)]
        brute: bool,
    },
    /// Build the graph and export it.
    Build {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "dot")]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute every invariant and print the report as JSON.
    Invariants {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare computed invariants with the closed-form predictions.
    Verify {
        #[arg(long, required_unless_present = "grid", conflicts_with = "grid")]
        n: Option<u64>,
        #[arg(long, default_value_t = 0, conflicts_with = "grid")]
        degree: u32,
        /// A grid of specs, e.g. "2..12 x 0..2" (inclusive ranges).
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value = "zn-poly")]
        ring: RingFamily,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Component and involution counts for d = 0..=d-max.
    Scan {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        d_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn parse_range<T: std::str::FromStr + PartialOrd + Copy>(s: &str) -> Result<(T, T), Usage> {
    let bad = || {
        Usage(format!(
            "bad range `{s}` (expected `a..b` or a single number)"
        ))
    };
    let (lo, hi) = match s.trim().split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: T = lo.parse().map_err(|_| bad())?;
    let hi: T = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

type GridRanges = ((u64, u64), (u32, u32));

/// `"2..12 x 0..2"` into inclusive `(n, d)` ranges.
fn parse_grid(s: &str) -> Result<GridRanges, Usage> {
    let (ns, ds) = s
        .split_once('x')
        .ok_or_else(|| Usage(format!("bad grid `{s}` (expected `n1..n2 x d1..d2`)")))?;
    Ok((parse_range(ns)?, parse_range(ds)?))
}

/// Writes through a temporary file in the destination directory, then renames.
fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .map_err(|e| e.error)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn emit(out: Option<&Path>, contents: &str) -> Result<()> {
    match out {
        Some(path) => write_atomically(path, contents),
        None => {
            std::io::stdout().write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

fn note_ring(ring: RingFamily) {
    if ring == RingFamily::ZnPowerSeries {
        eprintln!("note: Z_n[[x]] truncated at degree d is computed on the Z_n[x] code path");
    }
}

fn cmd_inv(n: u64, degree: Option<u32>, brute: bool, limits: &Limits) -> Result<u8> {
    let mut agree = true;
    match degree {
        None => {
            let inv = involutions_zn(n)?;
            let values: Vec<String> = inv.iter().map(|u| u.value().to_string()).collect();
            println!("{} (count {})", values.join(" "), inv.len());
            if brute {
                agree = involutions_zn_bruteforce(n, limits.zn_brute_force_cap)? == inv;
            }
        }
        Some(d) => {
            let spec = PolyRingSpec::new(n, d)?;
            let inv = involutions_closed_form(spec, limits)?;
            for f in &inv {
                println!("{f}");
            }
            println!("(count {})", inv.len());
            if brute {
                agree = involutions_bruteforce(spec, limits)? == inv;
            }
        }
    }
    if brute {
        println!("agreement: {agree}");
    }
    Ok(if agree { 0 } else { EXIT_FAIL })
}

fn cmd_verify(
    n: Option<u64>,
    degree: u32,
    grid: Option<&str>,
    ring: RingFamily,
    report: Option<&Path>,
    json: bool,
    limits: &Limits,
) -> Result<u8> {
    note_ring(ring);
    let (overall, text) = match grid {
        Some(g) => {
            let ((n1, n2), (d1, d2)) = parse_grid(g)?;
            if n1 < 2 {
                return Err(Usage(format!("grid moduli must be at least 2, got {n1}")).into());
            }
            let r = verify_grid(n1..=n2, d1..=d2, ring, limits)?;
            if !json {
                for spec in &r.reports {
                    let failing: Vec<&str> = spec
                        .results
                        .iter()
                        .filter(|c| c.status != Status::Pass)
                        .map(|c| c.invariant)
                        .collect();
                    let line = format!(
                        "{} n={} d={} {}",
                        status_str(spec.overall),
                        spec.spec.n,
                        spec.spec.d,
                        failing.join(" ")
                    );
                    println!("{}", line.trim_end());
                }
            }
            (r.overall, serde_json::to_string_pretty(&r)?)
        }
        None => {
            let n = n.ok_or_else(|| Usage("--n or --grid is required".into()))?;
            let r = verify(PolyRingSpec::new(n, degree)?, ring, limits)?;
            if !json {
                for c in &r.results {
                    println!(
                        "{:<7} {}: predicted {}, computed {}",
                        status_str(c.status),
                        c.invariant,
                        c.predicted,
                        c.computed
                    );
                }
            }
            (r.overall, r.to_json())
        }
    };
    let text = text + "\n";
    if json {
        print!("{text}");
    } else {
        println!("overall: {}", status_str(overall));
    }
    if let Some(path) = report {
        write_atomically(path, &text)?;
    }
    Ok(overall.exit_code() as u8)
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIPPED",
    }
}

fn cmd_scan(n: u64, d_max: u32, out: Option<&Path>, limits: &Limits) -> Result<u8> {
    let rows = growth_scan(n, d_max, limits)?;
    let comps: Vec<u64> = rows.iter().map(|r| r.component_count).collect();
    let increasing = strictly_increasing(&comps);
    match out {
        Some(path) => write_atomically(path, &(serde_json::to_string_pretty(&rows)? + "\n"))?,
        None => {
            println!("d\tcomponents\tpredicted\tinvolutions\tindependent_set");
            for r in &rows {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.d,
                    r.component_count,
                    r.predicted_component_count,
                    r.inv_count,
                    r.independent_set_lower_bound
                );
            }
        }
    }
    println!("components strictly increasing: {increasing}");
    let matches = rows
        .iter()
        .all(|r| r.component_count == r.predicted_component_count);
    Ok(if increasing && matches { 0 } else { EXIT_FAIL })
}

fn run(cli: Cli) -> Result<u8> {
    let limits = cli.caps.limits();
    match cli.command {
        Command::Inv { n, degree, brute } => cmd_inv(n, degree, brute, &limits),
        Command::Build { ring, format, out } => {
            note_ring(ring.ring);
            let g = build_cayley_graph(ring.spec()?, &limits)?;
            emit(out.as_deref(), &export(&g, format))?;
            Ok(0)
        }
        Command::Invariants { ring, out } => {
            note_ring(ring.ring);
            let g = build_cayley_graph(ring.spec()?, &limits)?;
            let report = compute_report(&g, &limits);
            emit(out.as_deref(), &(report.to_json() + "\n"))?;
            Ok(if report.skipped.is_empty() {
                0
            } else {
                EXIT_RESOURCE
            })
        }
        Command::Verify {
            n,
            degree,
            grid,
            ring,
            report,
            json,
        } => cmd_verify(
            n,
            degree,
            grid.as_deref(),
            ring,
            report.as_deref(),
            json,
            &limits,
        ),
        Command::Scan { n, d_max, out } => cmd_scan(n, d_max, out.as_deref(), &limits),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<invcayley::Error>() {
        return if e.is_resource() {
            EXIT_RESOURCE
        } else {
            EXIT_DOMAIN
        };
    }
    if err.downcast_ref::<Usage>().is_some() {
        return EXIT_USAGE;
    }
    if err.chain().any(|c| c.is::<std::io::Error>()) {
        return EXIT_IO;
    }
    EXIT_DOMAIN
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!(
                "{}",
                rendered.lines().next().unwrap_or("error: invalid usage")
            );
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let msg: Vec<String> = err.chain().map(ToString::to_string).collect();
            eprintln!("error: {}", msg.join(": "));
            ExitCode::from(exit_code_for(&err))
        }
    }
}
