//! Command-line front end for wythoff-core.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use wythoff_core::bitcore::nim_sum;
use wythoff_core::game::{
    apply_move, beatty_p_positions, solve_box_with_budget, GameSpec, Position,
};
use wythoff_core::oracle::{check_oracle_dim, is_p_position, winning_move};
use wythoff_core::service::{serve, AppState, SessionStore};
use wythoff_core::sponge::{
    box_count, decompose, generate_level_with_budget, write_points, ExportFormat,
};
use wythoff_core::{Budget, Error};

#[derive(Parser)]
#[command(
    name = "wythoff",
    version,
    about = "n-heap Wythoff's game: oracle, solver and sponge tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print P or N for a position of the canonical odd-n game.
    Verdict {
        #[arg(long)]
        pos: Position,
        #[arg(long)]
        json: bool,
    },
    /// Print the constructed winning move, or "P-position".
    Move {
        #[arg(long)]
        pos: Position,
        #[arg(long)]
        json: bool,
    },
    /// Retrograde analysis of the box [0,bound)^n; writes CSV.
    Solve {
        /// Game spec as JSON: {"n": 3, "vectors": [[1,0,0], ...]}.
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        spec: Option<PathBuf>,
        /// Use the canonical game on n heaps instead of a spec file.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Compare the Nim-sum oracle with the retrograde solver on a box.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare the golden-ratio pairs with the solver for the two-heap game.
    VerifyClassic {
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Export the sponge level P_m^(n) as CSV, PLY or JSON.
    Sponge {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "csv")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize the split of P_m into translates of P_{m-1}.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print (m, count, slope) rows for levels 0..=max-m.
    Dimension {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::from_env();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result =
        run(cli.command, budget, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, budget: Budget, out: &mut impl Write) -> Outcome {
    match command {
        Command::Verdict { pos, json } => {
            let is_p = is_p_position(&pos)?;
            let verdict = if is_p { "P" } else { "N" };
            if json {
                let s = nim_sum(&pos)?;
                writeln!(
                    out,
                    "{}",
                    json!({ "pos": pos, "verdict": verdict, "nim_sum": s })
                )?;
            } else {
                writeln!(out, "{verdict}")?;
            }
        }
        Command::Move { pos, json } => {
            if is_p_position(&pos)? {
                if json {
                    writeln!(out, "{}", json!({ "pos": pos, "is_p": true, "move": null }))?;
                } else {
                    writeln!(out, "P-position")?;
                }
            } else {
                let mv = winning_move(&pos)?;
                let result = apply_move(&pos, &mv)?;
                if json {
                    let body = json!({ "pos": pos, "is_p": false, "move": mv, "result": result });
                    writeln!(out, "{body}")?;
                } else {
                    let heap = mv.vector.unit_heap().map_or(0, |i| i + 1);
                    writeln!(out, "remove {} from heap {heap}: {pos} -> {result}", mv.k)?;
                }
            }
        }
        Command::Solve {
            spec,
            n,
            bound,
            out: path,
            json,
        } => {
            let spec = match (spec, n) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    GameSpec::from_json(&text)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                }
                (None, Some(n)) => GameSpec::canonical(n)?,
                (None, None) => unreachable!("clap requires --spec or --n"),
            };
            let table = solve_box_with_budget(&spec, bound, budget)?;
            match path {
                Some(path) => {
                    table.write_csv(BufWriter::new(create(&path)?))?;
                    let p = table.p_count();
                    if json {
                        let body = json!({
                            "positions": table.len(),
                            "p_positions": p,
                            "out": path.display().to_string(),
                        });
                        writeln!(out, "{body}")?;
                    } else {
                        writeln!(
                            out,
                            "solved {} positions: {p} P, {} N -> {}",
                            table.len(),
                            table.len() - p,
                            path.display()
                        )?;
                    }
                }
                None => table.write_csv(&mut *out)?,
            }
        }
        Command::Verify { n, bound, json } => {
            check_oracle_dim(n)?;
            let table = solve_box_with_budget(&GameSpec::canonical(n)?, bound, budget)?;
            let mut p_count = 0;
            let mut counterexample = None;
            for (pos, verdict) in table.iter() {
                let solver_p = verdict == wythoff_core::Verdict::P;
                if solver_p != is_p_position(&pos)? {
                    counterexample = Some((pos, verdict));
                    break;
                }
                p_count += usize::from(solver_p);
            }
            match counterexample {
                None => {
                    if json {
                        let body = json!({ "pass": true, "positions": table.len(), "p_positions": p_count });
                        writeln!(out, "{body}")?;
                    } else {
                        writeln!(
                            out,
                            "PASS ({} positions matched, {p_count} P-positions)",
                            table.len()
                        )?;
                    }
                }
                Some((pos, verdict)) => {
                    if json {
                        let body =
                            json!({ "pass": false, "counterexample": pos, "solver": verdict });
                        writeln!(out, "{body}")?;
                    } else {
                        let oracle = if verdict == wythoff_core::Verdict::P {
                            "N"
                        } else {
                            "P"
                        };
                        writeln!(
                            out,
                            "FAIL at {pos}: solver says {verdict}, oracle says {oracle}"
                        )?;
                    }
                    return Err(Failure::Check);
                }
            }
        }
        Command::VerifyClassic { bound, json } => {
            let table = solve_box_with_budget(&GameSpec::classic(), bound, budget)?;
            let solver: Vec<Position> = table.p_positions().collect();
            let beatty = beatty_p_positions(bound);
            let mismatch = first_difference(&solver, &beatty);
            if json {
                let body = json!({
                    "pass": mismatch.is_none(),
                    "p_positions": solver.len(),
                    "counterexample": mismatch,
                });
                writeln!(out, "{body}")?;
            } else {
                match &mismatch {
                    None => writeln!(out, "PASS ({} P-positions matched)", solver.len())?,
                    Some(pos) => writeln!(
                        out,
                        "FAIL at {pos}: solver says {}, golden-ratio pairs say {}",
                        if solver.contains(pos) { "P" } else { "N" },
                        if beatty.contains(pos) { "P" } else { "N" },
                    )?,
                }
            }
            if mismatch.is_some() {
                return Err(Failure::Check);
            }
        }
        Command::Sponge {
            n,
            m,
            format,
            out: path,
        } => {
            let level = generate_level_with_budget(n, m, budget)?;
            match path {
                Some(path) => {
                    write_points(&level, format, BufWriter::new(create(&path)?))?;
                    writeln!(out, "wrote {} points to {}", level.len(), path.display())?;
                }
                None => write_points(&level, format, &mut *out)?,
            }
        }
        Command::Decompose { n, m, json } => {
            let level = generate_level_with_budget(n, m, budget)?;
            let lower = generate_level_with_budget(n, m.saturating_sub(1), budget)?;
            let parts = decompose(&level)?;
            let rows: Vec<_> = parts
                .iter()
                .map(|(v, part)| (v, part.len(), part == &lower))
                .collect();
            let all_match = rows.iter().all(|r| r.2) && rows.len() as u128 == 1u128 << (n - 1);
            if json {
                let parts: Vec<_> = rows
                    .iter()
                    .map(|(v, len, eq)| json!({ "v": v, "points": len, "equals_lower_level": eq }))
                    .collect();
                let body = json!({ "n": n, "m": m, "points": level.len(), "parts": parts, "pass": all_match });
                writeln!(out, "{body}")?;
            } else {
                writeln!(
                    out,
                    "P_{m}^({n}): {} points = {} translates of P_{}^({n})",
                    level.len(),
                    rows.len(),
                    m - 1
                )?;
                for (v, len, eq) in &rows {
                    let verdict = if *eq { "matches" } else { "DIFFERS FROM" };
                    writeln!(out, "  v = {v}: {len} points, {verdict} P_{}^({n})", m - 1)?;
                }
            }
            if !all_match {
                return Err(Failure::Check);
            }
        }
        Command::Dimension { n, max_m, json } => {
            let levels = (0..=max_m)
                .map(|m| generate_level_with_budget(n, m, budget))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = box_count(&levels)?;
            if json {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|r| json!({ "m": r.m, "count": r.count, "slope": r.slope.map(|s| s.to_string()) }))
                    .collect();
                writeln!(out, "{}", serde_json::Value::from(rows))?;
            } else {
                writeln!(out, "m\tcount\tslope")?;
                for r in &rows {
                    let slope = r.slope.map_or_else(|| "-".to_string(), |s| s.to_string());
                    writeln!(out, "{}\t{}\t{slope}", r.m, r.count)?;
                }
            }
        }
        Command::Serve { port } => {
            let runtime = tokio::runtime::Runtime::new()?;
            let state = AppState::new(SessionStore::default(), budget);
            runtime.block_on(serve(port, state))?;
        }
    }
    Ok(())
}

fn create(path: &Path) -> Result<File, Failure> {
    File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// First position, in lexicographic order, in exactly one of two sorted lists.
fn first_difference(a: &[Position], b: &[Position]) -> Option<Position> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => return Some(a[i].clone()),
            std::cmp::Ordering::Greater => return Some(b[j].clone()),
        }
    }
    a.get(i).or_else(|| b.get(j)).cloned()
}
