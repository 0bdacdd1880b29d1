use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use periplectic::algebra::Expression;
use periplectic::cells::murphy::MurphyTower;
use periplectic::cells::{bratteli_dot, bratteli_edges, bratteli_row, content_vector, CellModule};
use periplectic::field::Field;
use periplectic::partitions::Partition;
use periplectic::suites::{self, Suite, SuiteOptions};
use periplectic::{repthy, schurweyl, with_field, Error};

#[derive(Parser)]
#[command(name = "periplectic", version, about = "Computations in the periplectic Brauer algebra")]
struct Cli {
    /// Seed for randomized steps (trace-method test words).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 lets rayon decide.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Field characteristic: 0 for ℚ, or a supported prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product `lhs · rhs` in A_n; operands are JSON term lists or paths to them.
    Multiply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Rows 1..=K of the Bratteli diagram.
    Bratteli {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Dimensions, Gram rank, paths and Murphy basis of W_n(λ).
    Cell {
        #[arg(long)]
        n: usize,
        /// Partition as a JSON list, e.g. `[2,1]`.
        #[arg(long)]
        lambda: String,
    },
    /// Decomposition matrix [W(λ) : L(μ)].
    Decomp {
        #[arg(long)]
        n: usize,
    },
    /// Cartan matrix of A_n and of its cover.
    Cartan {
        #[arg(long)]
        n: usize,
    },
    /// Blocks of A_n.
    Blocks {
        #[arg(long)]
        n: usize,
    },
    /// Run a named verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Tensor-space checks on V^{⊗n}, V = k^{m|m}.
    Schurweyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        check: bool,
        /// Also run the composition oracle over all i + j, j + k ≤ MAX.
        #[arg(long)]
        max: Option<usize>,
    },
}

fn load(arg: &str) -> Result<Value, Error> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Invalid(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn partition(arg: &str) -> Result<Partition, Error> {
    let parts: Vec<usize> = serde_json::from_str(arg).map_err(|e| Error::Parse(e.to_string()))?;
    Partition::new(parts).map_err(Error::Parse)
}

/// Largest `n` accepted by the module-theoretic commands; override with `PERIPLECTIC_MAX_N`.
fn max_n() -> usize {
    std::env::var("PERIPLECTIC_MAX_N").ok().and_then(|v| v.parse().ok()).unwrap_or(6)
}

fn check_n(cmd: &Command) -> Result<(), Error> {
    let n = match cmd {
        Command::Multiply { n, .. } | Command::Schurweyl { n, .. } => {
            return if *n == 0 { Err(Error::Invalid("n must be positive".into())) } else { Ok(()) }
        }
        Command::Bratteli { .. } => return Ok(()),
        Command::Cell { n, .. } | Command::Decomp { n } | Command::Cartan { n } | Command::Blocks { n } | Command::Verify { n, .. } => *n,
    };
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if n > max_n() {
        return Err(Error::Budget(format!("n = {n} exceeds the limit {} (set PERIPLECTIC_MAX_N to raise it)", max_n())));
    }
    Ok(())
}

fn run<F: Field>(cmd: &Command, seed: u64) -> Result<(Value, bool), Error> {
    check_n(cmd)?;
    let out = match cmd {
        Command::Multiply { n, lhs, rhs } => {
            let a = Expression::<F>::from_json(&load(lhs)?, *n, *n)?;
            let b = Expression::<F>::from_json(&load(rhs)?, *n, *n)?;
            json!(a.mul(&b))
        }
        Command::Bratteli { rows, .. } => {
            // rows are numbered from 1; an edge `(k, a, b)` joins entry `a` of row `k` to entry `b` of row `k + 1`
            let r: Vec<Vec<Partition>> = (1..=*rows).map(bratteli_row).collect();
            let edges: Vec<(usize, usize, usize)> = (1..*rows).flat_map(|k| bratteli_edges(k).into_iter().map(move |(a, b)| (k, a, b))).collect();
            json!({ "rows": r, "edges": edges })
        }
        Command::Cell { n, lambda } => {
            let shape = partition(lambda)?;
            let cell = CellModule::<F>::new(*n, &shape)?;
            let gram_rank = cell.gram().rank();
            let mut tower = MurphyTower::<F>::new();
            let mb = tower.basis(*n, &shape)?;
            let vectors: Vec<Vec<String>> =
                (0..mb.vectors.rows()).map(|r| (0..mb.vectors.cols()).map(|c| mb.vectors[(r, c)].to_string()).collect()).collect();
            json!({
                "n": n,
                "shape": shape,
                "dim": cell.dim(),
                "gram_rank": gram_rank,
                "simple_dim": gram_rank,
                "paths": mb.paths.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "contents": mb.paths.iter().map(content_vector).collect::<Vec<_>>(),
                "murphy": vectors,
            })
        }
        Command::Decomp { n } => json!(repthy::decomposition_matrix(&repthy::ModuleData::<F>::new(*n)?, seed)?),
        Command::Cartan { n } => {
            let d = repthy::decomposition_matrix(&repthy::ModuleData::<F>::new(*n)?, seed)?;
            json!({ "algebra": repthy::cartan_matrix(&d), "cover": repthy::cover_cartan_matrix(&d) })
        }
        Command::Blocks { n } => json!(repthy::summary::<F>(*n, seed)?.blocks),
        Command::Verify { suite, n, m } => {
            let r = suites::run::<F>(*suite, *n, SuiteOptions { seed, m: *m })?;
            let pass = r.pass;
            return Ok((json!(r), pass));
        }
        Command::Schurweyl { n, m, check, max } => {
            if F::characteristic() != 0 {
                return Err(Error::UnsupportedCharacteristic(F::characteristic()));
            }
            let mut out = json!({ "n": n, "m": m, "rank": schurweyl::faithfulness_rank(*n, *m)? });
            let mut pass = true;
            if *check {
                let checks = suites::schurweyl_checks(*n, *m)?;
                pass &= checks.iter().all(|c| c.holds);
                out["checks"] = json!(checks);
            }
            if let Some(max) = max {
                let (pairs, failures) = schurweyl::composition_oracle(*m, *max);
                pass &= failures.is_empty();
                out["composition"] = json!({ "pairs": pairs, "failures": failures });
            }
            out["pass"] = json!(pass);
            return Ok((out, pass));
        }
    };
    Ok((out, true))
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": "usage", "message": e.kind().to_string(), "detail": e.to_string() }));
            return ExitCode::from(2);
        }
    };
    if cli.threads > 0 {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    if let Command::Bratteli { rows, dot: true } = cli.command {
        let _ = write!(std::io::stdout().lock(), "{}", bratteli_dot(rows));
        return ExitCode::SUCCESS;
    }
    let result = match with_field!(cli.characteristic, F => run::<F>(&cli.command, cli.seed)) {
        Ok(r) => r,
        Err(p) => return fail(&Error::UnsupportedCharacteristic(p)),
    };
    match result {
        Ok((value, pass)) => {
            // A closed pipe downstream is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&value).expect("json"));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(&e),
    }
}
