//! `eulerian-gamma`: permutation statistics, rix-factorizations, bijections,
//! γ-coefficient tables and the exhaustive verification harness.

mod render;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use eulerian_gamma::engine::{self, VerificationReport};
use eulerian_gamma::{actions, bijections, rixfact, Action, Error, Permutation};

const DEFAULT_MAX_N: usize = 9;
const HARD_MAX_N: usize = 12;
const MAX_N_ENV: &str = "EULERIAN_GAMMA_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "eulerian-gamma", version, about = "Exact gamma-positivity computations on permutations")]
struct Cli {
    /// Enumeration ceiling (1..=12). Defaults to $EULERIAN_GAMMA_MAX_N, capped at 12, or 9.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(1..=HARD_MAX_N as i64))]
    max_n: Option<u8>,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    output: Option<Format>,

    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Display polynomials grouped by powers of t.
    #[arg(long, global = true)]
    group_by_t: bool,

    /// Report elapsed_ms as 0 so that verification output is byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Basic,
    Derangement,
    Cyc,
    Sw3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Map {
    Phi,
    PhiInv,
    F,
    FInv,
    Scf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ActionArg {
    Mfs,
    Restricted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every statistic of a permutation (digits, or comma-separated).
    Stats { perm: String },
    /// gamma-coefficients of one family at size n.
    Gamma {
        #[arg(value_enum)]
        family: Family,
        n: usize,
    },
    /// A_n(t, r, q), optionally with r specialized.
    Eulerian {
        n: usize,
        #[arg(long)]
        r: Option<i64>,
    },
    /// Run registered checks ("all" for every one).
    Verify {
        #[arg(required = true)]
        checks: Vec<String>,
    },
    /// List registered check identifiers.
    Checks,
    /// Apply a bijection.
    Map {
        #[arg(value_enum)]
        map: Map,
        perm: String,
    },
    /// Orbit under the MFS or restricted MFS action, sorted.
    Orbit {
        #[arg(long, value_enum, default_value = "mfs")]
        action: ActionArg,
        perm: String,
    },
    /// The rix-factorization.
    Rixfact { perm: String },
}

/// Failure classes mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInDomain(_) | Error::MismatchAgainstDirect { .. } | Error::NotExpandable { .. } => {
                Failure::Domain(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn resolve_max_n(flag: Option<u8>) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n as usize);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n.min(HARD_MAX_N)),
            _ => Err(Failure::Usage(format!("{MAX_N_ENV}={v:?} is not a positive integer"))),
        },
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn within(n: usize, max_n: usize) -> Result<(), Failure> {
    if n > max_n {
        Err(Failure::Usage(format!("n = {n} exceeds the enumeration ceiling {max_n} (see --max-n)")))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let max_n = resolve_max_n(cli.max_n)?;
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let out = cli.output;
    match cli.command {
        Command::Stats { perm } => {
            let p = parse_perm(&perm)?;
            render::stats(&eulerian_gamma::perm::statistics(&p), out.unwrap_or(Format::Json));
        }
        Command::Gamma { family, n } => {
            within(n, max_n)?;
            let g = match family {
                Family::Basic => engine::gamma_basic(n),
                Family::Derangement => engine::gamma_derangement(n),
                Family::Cyc => engine::cyc_gamma(n),
                Family::Sw3 => engine::sw3_gamma(n),
            }?;
            render::gamma(family, n, &g, out.unwrap_or(Format::Text));
        }
        Command::Eulerian { n, r } => {
            within(n, max_n)?;
            let mut a = engine::basic_eulerian(n)?;
            if let Some(r) = r {
                a = a.substitute(eulerian_gamma::Var::R, r);
            }
            render::poly(&a, cli.group_by_t, out.unwrap_or(Format::Text));
        }
        Command::Verify { checks } => {
            let ids: Vec<&str> = if checks.iter().any(|c| c == "all") {
                engine::check_ids().collect()
            } else {
                checks.iter().map(String::as_str).collect()
            };
            let specs = ids.iter().map(|id| engine::lookup(id)).collect::<Result<Vec<_>, _>>()?;
            let mut reports: Vec<VerificationReport> = specs
                .par_iter()
                .map(|spec| {
                    let (lo, hi) = spec.sizes(max_n);
                    spec.run_range(lo, hi)
                })
                .collect();
            if cli.no_timing {
                reports.iter_mut().for_each(|r| r.elapsed_ms = 0);
            }
            render::reports(&reports, out.unwrap_or(Format::Json));
            return Ok(reports.iter().all(|r| r.passed));
        }
        Command::Checks => render::checks(out.unwrap_or(Format::Text)),
        Command::Map { map, perm } => {
            let p = parse_perm(&perm)?;
            let image = match map {
                Map::Phi => bijections::phi(&p).to_string(),
                Map::PhiInv => bijections::phi_inv(&p).to_string(),
                Map::F => bijections::f_map(&p)?.to_string(),
                Map::FInv => bijections::f_inv(&p)?.to_string(),
                Map::Scf => bijections::scf(&p).to_string(),
            };
            render::mapped(&p, map.to_possible_value().expect("named").get_name(), &image, out.unwrap_or(Format::Text));
        }
        Command::Orbit { action, perm } => {
            let p = parse_perm(&perm)?;
            let action = match action {
                ActionArg::Mfs => Action::Mfs,
                ActionArg::Restricted => Action::Restricted,
            };
            let o: BTreeSet<Permutation> = actions::orbit(&p, action);
            render::orbit(&o, out.unwrap_or(Format::Text));
        }
        Command::Rixfact { perm } => {
            let p = parse_perm(&perm)?;
            render::rixfact(&rixfact::rix_factorize(&p)?, out.unwrap_or(Format::Text));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
