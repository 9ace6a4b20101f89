//! `monohier` command-line front end.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use monohier::fock::{gaussian_moment, partition_sum_moment};
use monohier::partitions::{count_onc_blocks, count_onc_by_enumeration, SupportProfile};
use monohier::scalar::parse_rational;
use monohier::spectra::{atoms, clt_moment, density, poisson_series, support_edge};
use monohier::states::{evaluate_word, MomentPoly, ProductSpace, Registry, SymbolicMarginals, Word, DEFAULT_MAX_BASIS};
use monohier::verify::{self, Suite, VerifyConfig};
use monohier::{Level, Rational};

use output::{emit, Cell, Format, Table};

const MAX_ENUMERATION_N: usize = 12;
const MAX_MOMENT_ORDER: usize = 10;
const TABLE_LEVELS: &str = "1,2,3,4,inf";

#[derive(Parser)]
#[command(name = "monohier", version, about = "Monotone hierarchy: partitions, limit laws, Fock moments and product states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recurrence,
    Enumeration,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Rewrite,
    Representation,
}

#[derive(Subcommand)]
enum Command {
    /// Count ordered non-crossing partitions by number of blocks.
    Enumerate {
        #[arg(long)]
        m: Level,
        #[arg(long)]
        n: usize,
        /// Count pair partitions only.
        #[arg(long)]
        pairs: bool,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Even central limit moments as exact fractions.
    Moments {
        /// Comma-separated levels.
        #[arg(long, default_value = TABLE_LEVELS)]
        m: String,
        #[arg(long, default_value_t = MAX_MOMENT_ORDER)]
        max_order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Density of the central limit law on a uniform grid.
    Density {
        #[arg(long)]
        m: Level,
        #[arg(long, default_value_t = 401)]
        points: usize,
        #[arg(long, default_value_t = 0.5)]
        margin: f64,
        /// Also write the atoms table here.
        #[arg(long)]
        atoms_out: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Atoms of the central limit law.
    Atoms {
        #[arg(long)]
        m: Level,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Poisson moments, as polynomial coefficients or at a given λ.
    Poisson {
        #[arg(long)]
        m: Level,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Evaluate at this rational intensity instead of listing coefficients.
        #[arg(long)]
        lambda: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Vacuum moment of Gaussian operators with interval test functions.
    FockMoment {
        #[arg(long)]
        m: Level,
        /// Comma-separated intervals `s:t`.
        #[arg(long)]
        profile: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Value of a word under the product state.
    StateEval {
        #[arg(long)]
        m: Level,
        #[arg(long)]
        word: String,
        /// JSON marginals; without it the value is symbolic in the moments.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Engine::Rewrite)]
        engine: Engine,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run cross-route verification suites and write a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 6)]
        len: usize,
        #[arg(long, default_value_t = 200)]
        profiles: usize,
        #[arg(long)]
        parallel: bool,
        /// Include wall-clock times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_levels(text: &str) -> anyhow::Result<Vec<Level>> {
    text.split(',').map(|s| s.parse::<Level>().map_err(anyhow::Error::from)).collect()
}

fn max_basis() -> anyhow::Result<usize> {
    match std::env::var("MONOHIER_MAX_BASIS") {
        Ok(v) => v.trim().parse().with_context(|| format!("MONOHIER_MAX_BASIS: invalid value `{v}`")),
        Err(_) => Ok(DEFAULT_MAX_BASIS),
    }
}

/// Returns whether the command succeeded; errors map to exit code 2.
fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Enumerate { m, n, pairs, method, output } => {
            if n == 0 || n > MAX_ENUMERATION_N {
                bail!("--n must be in 1..={MAX_ENUMERATION_N}");
            }
            if pairs && n % 2 == 1 {
                bail!("--pairs needs an even --n");
            }
            let counts = match method {
                Method::Enumeration => count_onc_by_enumeration(n, m, pairs),
                Method::Recurrence if pairs => {
                    let mut c = vec![Default::default(); n + 1];
                    c[n / 2] = monohier::partitions::count_onc_pairs(n / 2, m);
                    c
                }
                Method::Recurrence => (0..=n).map(|q| if q == 0 { Default::default() } else { count_onc_blocks(n, q, m) }).collect(),
            };
            let mut table = Table::new(&["n", "m", "q", "count"]);
            for (q, c) in counts.iter().enumerate().skip(1) {
                if pairs && q != n / 2 {
                    continue;
                }
                table.push(vec![n.into(), m.to_string().into(), q.into(), c.to_string().into()]);
            }
            emit(&table.render(output.format), output.out.as_deref())?;
        }
        Command::Moments { m, max_order, output } => {
            if max_order > MAX_MOMENT_ORDER {
                bail!("--max-order must be at most {MAX_MOMENT_ORDER}");
            }
            let mut table = Table::new(&["m", "n", "moment_num", "moment_den"]);
            for level in parse_levels(&m)? {
                for n in (2..=max_order).step_by(2) {
                    let q = clt_moment(level, n);
                    table.push(vec![level.to_string().into(), n.into(), q.numer().to_string().into(), q.denom().to_string().into()]);
                }
            }
            emit(&table.render(output.format), output.out.as_deref())?;
        }
        Command::Density { m, points, margin, atoms_out, output } => {
            if points < 2 {
                bail!("--points must be at least 2");
            }
            if !(margin.is_finite() && margin >= 0.0) {
                bail!("--margin must be a non-negative number");
            }
            let edge = support_edge(m) + margin;
            let mut table = Table::new(&["m", "x", "f"]);
            for i in 0..points {
                let x = -edge + 2.0 * edge * i as f64 / (points - 1) as f64;
                table.push(vec![m.to_string().into(), x.into(), density(m, x).into()]);
            }
            emit(&table.render(output.format), output.out.as_deref())?;
            if let Some(path) = atoms_out {
                emit(&atoms_table(m)?.render(output.format), Some(&path))?;
            }
        }
        Command::Atoms { m, output } => {
            emit(&atoms_table(m)?.render(output.format), output.out.as_deref())?;
        }
        Command::Poisson { m, max_order, lambda, output } => {
            if max_order > MAX_MOMENT_ORDER {
                bail!("--max-order must be at most {MAX_MOMENT_ORDER}");
            }
            let series = poisson_series(m, max_order)?;
            let table = match lambda {
                Some(text) => {
                    let l = parse_rational(&text).with_context(|| format!("--lambda: invalid rational `{text}`"))?;
                    let mut t = Table::new(&["m", "n", "lambda", "moment"]);
                    for (n, p) in series.moments().iter().enumerate() {
                        t.push(vec![m.to_string().into(), n.into(), fraction(&l).into(), fraction(&p.eval(&l)).into()]);
                    }
                    t
                }
                None => {
                    let mut t = Table::new(&["m", "n", "q", "coefficient"]);
                    for n in 0..=max_order {
                        for q in 0..=n {
                            let c = series.table_entry(n, q);
                            t.push(vec![m.to_string().into(), n.into(), q.into(), fraction(&c).into()]);
                        }
                    }
                    t
                }
            };
            emit(&table.render(output.format), output.out.as_deref())?;
        }
        Command::FockMoment { m, profile, output } => {
            let p = SupportProfile::parse(&profile)?;
            let value: Rational = gaussian_moment(m, &p);
            let check = partition_sum_moment(m, &p)?;
            let mut table = Table::new(&["m", "profile", "moment"]);
            table.push(vec![m.to_string().into(), profile.trim().into(), fraction(&value).into()]);
            emit(&table.render(output.format), output.out.as_deref())?;
            if check != value {
                eprintln!("partition formula disagrees: {}", fraction(&check));
                return Ok(false);
            }
        }
        Command::StateEval { m, word, config, engine, output } => {
            let w = Word::parse(&word)?;
            let value = match config {
                None => {
                    if matches!(engine, Engine::Representation) {
                        bail!("--engine representation needs --config");
                    }
                    let sym = w.map(|c| MomentPoly::constant(c.clone()));
                    evaluate_word(&sym, m, &SymbolicMarginals)?.to_string()
                }
                Some(path) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
                    let reg = Registry::from_json(&text)?;
                    let q = match engine {
                        Engine::Rewrite => evaluate_word(&w, m, &reg)?,
                        Engine::Representation => {
                            let bound = (m == Level::FREE).then_some(w.len().div_ceil(2));
                            ProductSpace::build(m, &reg, bound, max_basis()?)?.vacuum_moment(&w)?
                        }
                    };
                    fraction(&q)
                }
            };
            let mut table = Table::new(&["m", "word", "value"]);
            table.push(vec![m.to_string().into(), word.trim().into(), value.into()]);
            emit(&table.render(output.format), output.out.as_deref())?;
        }
        Command::Verify { suite, seed, max_k, len, profiles, parallel, timings, out } => {
            let suites = Suite::parse(&suite).with_context(|| format!("unknown suite `{suite}`"))?;
            let config = VerifyConfig { seed, max_k, len, profiles, parallel, timings };
            let checks = verify::run(&suites, &config);
            let passed = checks.iter().all(|c| c.passed);
            for c in &checks {
                eprintln!("{} {}/{}: {}", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.name, c.detail);
            }
            let report = serde_json::json!({
                "seed": seed,
                "suite": suite,
                "passed": passed,
                "checks": checks,
            });
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            emit(&text, out.as_deref())?;
            return Ok(passed);
        }
    }
    Ok(true)
}

fn atoms_table(m: Level) -> anyhow::Result<Table> {
    let mut table = Table::new(&["m", "location", "mass"]);
    for a in atoms(m)? {
        table.push(vec![m.to_string().into(), Cell::Float(a.location), Cell::Float(a.mass)]);
    }
    Ok(table)
}
