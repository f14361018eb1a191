//! The `descartes` command-line tool.
//!
//! Subcommands: `verify`, `solve-m`, `pairs`, `m-candidates`, `oracle`,
//! `prove`. Every subcommand supports `--format text` (line-oriented, stable)
//! and `--format structured` (JSON with all integers as decimal strings), and
//! an optional `--out FILE` redirecting the document to a file.
//!
//! Exit codes are part of the interface: 0 for success or an established
//! verdict, 1 for a negative mathematical result (not a Descartes pair, no
//! solution, a failed verdict), 2 for usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde_json::{json, Value};

use crate::arith::{factorize, sigma, Factorization, Integer};
use crate::lemmas::{
    lemma2_filter, lemma4_check, lemma5_check, lemma6_check, lemma9_admissible, LemmaVerdict,
};
use crate::pair::{is_descartes_pair, solve_m};
use crate::replay::{
    emit_transcript, replay_lemma10, replay_lemma9, replay_theorem1, OutputFormat, Transcript,
};
use crate::search::{pair_search, enumerate_m_candidates, SearchConstraint};
use crate::sieve::{brute_force_oracle_with, OracleConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the oracle's default sieve segment size.
pub const SEGMENT_SIZE_ENV: &str = "DESCARTES_SEGMENT_SIZE";

#[derive(Parser)]
#[command(
    name = "descartes",
    about = "Exact verification, search, and proof replay for cube-free Descartes numbers",
    version
)]
struct Cli {
    /// Write the output document to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Check sigma(k)*(m+1) = 2*k*m and report all admissibility verdicts.
    Verify {
        /// k as an integer or factored literal (e.g. 3^2*7^2*11^2*13^2).
        k: String,
        /// m as a positive integer.
        m: String,
    },
    /// Solve the defining equation for m given odd k.
    SolveM {
        /// k as an integer or factored literal.
        k: String,
    },
    /// Enumerate prime pairs (p, q) with k = base * p^2 * q^2 admissible.
    Pairs(PairsArgs),
    /// Enumerate cube-free m with fixed prime support and a mod-12 residue.
    MCandidates(MCandidatesArgs),
    /// Sweep the defining equation over every odd k up to a limit.
    Oracle(OracleArgs),
    /// Replay a proof and emit its transcript.
    Prove {
        #[arg(value_enum)]
        target: ProveTarget,
    },
}

#[derive(Args)]
struct PairsArgs {
    /// Fixed factored part of k (odd, cube-free), e.g. 3^2*5^2*31^2.
    #[arg(long)]
    base: String,
    /// Lower bound on m.
    #[arg(long = "m-min")]
    m_min: u64,
    /// Required residue of the free primes mod 3.
    #[arg(long)]
    residue: Option<u32>,
    /// Comma-separated primes that must not appear.
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<u64>,
    /// Also apply the residue-count and cube-free filters.
    #[arg(long = "apply-filters")]
    apply_filters: bool,
}

#[derive(Args)]
struct MCandidatesArgs {
    /// Comma-separated primes that must divide m.
    #[arg(long, value_delimiter = ',', required = true)]
    require: Vec<u64>,
    /// Exact number of distinct prime factors of m.
    #[arg(long)]
    omega: usize,
    /// Required residue of m mod 12.
    #[arg(long = "residue-12", default_value_t = 1)]
    residue_12: u32,
}

#[derive(Args)]
struct OracleArgs {
    /// Sweep all odd k up to this limit (inclusive).
    #[arg(long = "k-limit")]
    k_limit: u64,
    /// Values per sieve segment (default 2^20; DESCARTES_SEGMENT_SIZE overrides).
    #[arg(long = "segment-size")]
    segment_size: Option<u64>,
    /// Worker threads for segment processing.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProveTarget {
    Lemma9,
    Lemma10,
    Theorem1,
    All,
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let format = cli.format;
    let result = match &cli.command {
        Command::Verify { k, m } => cmd_verify(k, m, format),
        Command::SolveM { k } => cmd_solve_m(k, format),
        Command::Pairs(args) => cmd_pairs(args, format),
        Command::MCandidates(args) => cmd_m_candidates(args, format),
        Command::Oracle(args) => cmd_oracle(args, format),
        Command::Prove { target } => cmd_prove(*target, format),
    };
    match result {
        Ok((document, code)) => {
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, document) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => print!("{document}"),
            }
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn parse_k(s: &str) -> Result<Factorization, String> {
    Factorization::parse(s).map_err(|e| e.to_string())
}

fn parse_positive_int(s: &str) -> Result<Integer, String> {
    let n: Integer = s
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse {s:?} as an integer"))?;
    if n < Integer::one() {
        return Err(format!("{n} is not a positive integer"));
    }
    Ok(n)
}

fn verdict_json(v: &LemmaVerdict) -> Value {
    json!({
        "holds": v.holds,
        "witness": v.witness.as_ref().map(|w| w.to_string()),
    })
}

fn verdict_text(v: &LemmaVerdict) -> String {
    match &v.witness {
        Some(w) => format!("fails ({w})"),
        None => "holds".into(),
    }
}

fn cmd_verify(k_str: &str, m_str: &str, format: Format) -> Result<(String, i32), String> {
    let k = parse_k(k_str)?;
    let m_value = parse_positive_int(m_str)?;
    let m = factorize(&m_value).map_err(|e| e.to_string())?;

    let s = sigma(&k);
    let (kv, mv) = (k.value(), m.value());
    let lhs = &s * (&mv + Integer::one());
    let rhs = Integer::from(2) * &kv * &mv;
    let is_pair = is_descartes_pair(&k, &m);
    let n = k.mul(&m);

    let cube_free = n.is_cube_free();
    let l2 = lemma2_filter(&k);
    // lemma 4 applies to the squarefree kernel s with k = s^2
    let kernel: Option<Factorization> = if !k.is_one() && k.factors().iter().all(|(_, e)| *e == 2)
    {
        let pairs: Vec<(Integer, u32)> =
            k.factors().iter().map(|(p, _)| (p.clone(), 1)).collect();
        Factorization::new(pairs).ok()
    } else {
        None
    };
    let l4 = kernel
        .as_ref()
        .map(|s| lemma4_check(s).map_err(|e| e.to_string()))
        .transpose()?;
    let l5 = lemma5_check(&k, &m);
    let l6 = lemma6_check(&k, &m);
    let l9 = lemma9_admissible(&mv);

    let code = if is_pair { EXIT_OK } else { EXIT_NEGATIVE };
    match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "k = {k} = {kv}");
            let _ = writeln!(out, "m = {m} = {mv}");
            let _ = writeln!(out, "sigma(k) = {s}");
            let _ = writeln!(out, "sigma(k) * (m + 1) = {lhs}");
            let _ = writeln!(out, "2 * k * m          = {rhs}");
            let _ = writeln!(out, "equation: {}", if lhs == rhs { "holds" } else { "fails" });
            let _ = writeln!(out, "cube-free(k * m): {}", if cube_free { "yes" } else { "no" });
            let _ = writeln!(
                out,
                "lemma 2 (3 | k, exactly two primes of k are 1 mod 3): {}",
                verdict_text(&l2)
            );
            let _ = writeln!(
                out,
                "lemma 4 (sigma(s^2) free of primes 2 mod 3): {}",
                match &l4 {
                    Some(v) => verdict_text(v),
                    None => "not applicable (k is not s^2)".into(),
                }
            );
            let _ = writeln!(
                out,
                "lemma 5 (m = 1 mod 12, gcd(k, m) = 1): {}",
                verdict_text(&l5)
            );
            let _ = writeln!(out, "lemma 6 (k = s^2, m | sigma(k)): {}", verdict_text(&l6));
            let _ = writeln!(
                out,
                "lemma 9 (m >= 49, m = 1 mod 12, m composite): {}",
                verdict_text(&l9)
            );
            let _ = writeln!(
                out,
                "{}",
                if is_pair { "DESCARTES PAIR" } else { "NOT A DESCARTES PAIR" }
            );
            Ok((out, code))
        }
        Format::Structured => {
            let doc = json!({
                "k": kv.to_string(),
                "k_factored": k.to_string(),
                "m": mv.to_string(),
                "m_factored": m.to_string(),
                "sigma_k": s.to_string(),
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "equation_holds": lhs == rhs,
                "is_descartes_pair": is_pair,
                "cube_free": cube_free,
                "lemma2": verdict_json(&l2),
                "lemma4": l4.as_ref().map(verdict_json),
                "lemma5": verdict_json(&l5),
                "lemma6": verdict_json(&l6),
                "lemma9": verdict_json(&l9),
            });
            Ok((pretty(&doc), code))
        }
    }
}

fn cmd_solve_m(k_str: &str, format: Format) -> Result<(String, i32), String> {
    let k = parse_k(k_str)?;
    let m = solve_m(&k).map_err(|e| e.to_string())?;
    let code = if m.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
    match format {
        Format::Text => {
            let out = match &m {
                Some(m) => format!("{m}\n"),
                None => "none\n".into(),
            };
            Ok((out, code))
        }
        Format::Structured => {
            let doc = json!({
                "k": k.value().to_string(),
                "m": m.as_ref().map(|m| m.to_string()),
            });
            Ok((pretty(&doc), code))
        }
    }
}

fn cmd_pairs(args: &PairsArgs, format: Format) -> Result<(String, i32), String> {
    let base = parse_k(&args.base)?;
    let mut constraint =
        SearchConstraint::new(base.clone(), args.m_min).map_err(|e| e.to_string())?;
    if let Some(r) = args.residue {
        constraint = constraint.with_residue_mod3(r);
    }
    constraint = constraint.with_excluded(&args.exclude);
    let mut pairs = pair_search(&constraint).map_err(|e| e.to_string())?;
    if args.apply_filters {
        pairs.retain(|&(p, q)| {
            let extra = Factorization::from_pairs(&[(p, 2), (q, 2)])
                .expect("search output primes are valid");
            let k = base.mul(&extra);
            k.is_cube_free() && lemma2_filter(&k).holds
        });
    }
    match format {
        Format::Text => {
            let mut out = String::new();
            for (p, q) in &pairs {
                let _ = writeln!(out, "{p} {q}");
            }
            Ok((out, EXIT_OK))
        }
        Format::Structured => {
            let doc = json!({
                "base": base.value().to_string(),
                "base_factored": base.to_string(),
                "m_min": args.m_min.to_string(),
                "residue_mod3": args.residue.map(|r| r.to_string()),
                "excluded_primes": args.exclude.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "filters_applied": args.apply_filters,
                "pairs": pairs
                    .iter()
                    .map(|(p, q)| json!([p.to_string(), q.to_string()]))
                    .collect::<Vec<_>>(),
            });
            Ok((pretty(&doc), EXIT_OK))
        }
    }
}

fn cmd_m_candidates(args: &MCandidatesArgs, format: Format) -> Result<(String, i32), String> {
    let candidates = enumerate_m_candidates(&args.require, args.omega, args.residue_12)
        .map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for m in &candidates {
                let _ = writeln!(out, "{m}");
            }
            Ok((out, EXIT_OK))
        }
        Format::Structured => {
            let doc = json!({
                "required_primes": args.require.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "omega_m": args.omega.to_string(),
                "mod12_residue": args.residue_12.to_string(),
                "candidates": candidates.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            });
            Ok((pretty(&doc), EXIT_OK))
        }
    }
}

fn cmd_oracle(args: &OracleArgs, format: Format) -> Result<(String, i32), String> {
    if args.k_limit < 1 {
        return Err("--k-limit must be >= 1".into());
    }
    let default_segment = OracleConfig::default().segment_size;
    let segment_size = match args.segment_size {
        Some(s) => s,
        None => match std::env::var(SEGMENT_SIZE_ENV) {
            Ok(v) => v
                .parse()
                .map_err(|_| format!("{SEGMENT_SIZE_ENV}={v:?} is not a valid segment size"))?,
            Err(_) => default_segment,
        },
    };
    let cfg = OracleConfig {
        segment_size,
        workers: args.workers.max(1),
    };
    let start = Instant::now();
    let hits = brute_force_oracle_with(args.k_limit, &cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    match format {
        Format::Text => {
            let mut out = String::new();
            for pair in &hits {
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    pair.k().value(),
                    pair.m().value(),
                    pair.n_value()
                );
            }
            let _ = writeln!(
                out,
                "hits: {}  k-limit: {}  elapsed: {:.3}s",
                hits.len(),
                args.k_limit,
                elapsed.as_secs_f64()
            );
            Ok((out, EXIT_OK))
        }
        Format::Structured => {
            let doc = json!({
                "k_limit": args.k_limit.to_string(),
                "segment_size": cfg.segment_size.to_string(),
                "workers": cfg.workers,
                "hits": hits
                    .iter()
                    .map(|p| json!({
                        "k": p.k().value().to_string(),
                        "m": p.m().value().to_string(),
                        "n": p.n_value().to_string(),
                    }))
                    .collect::<Vec<_>>(),
                "count": hits.len(),
                "elapsed_ms": elapsed.as_millis() as u64,
            });
            Ok((pretty(&doc), EXIT_OK))
        }
    }
}

fn cmd_prove(target: ProveTarget, format: Format) -> Result<(String, i32), String> {
    let transcripts: Vec<Transcript> = match target {
        ProveTarget::Lemma9 => vec![replay_lemma9().map_err(|e| e.to_string())?],
        ProveTarget::Lemma10 => vec![replay_lemma10().map_err(|e| e.to_string())?],
        ProveTarget::Theorem1 => vec![replay_theorem1().map_err(|e| e.to_string())?],
        ProveTarget::All => vec![
            replay_lemma9().map_err(|e| e.to_string())?,
            replay_lemma10().map_err(|e| e.to_string())?,
            replay_theorem1().map_err(|e| e.to_string())?,
        ],
    };
    let all_established = transcripts.iter().all(|t| t.established());
    let code = if all_established { EXIT_OK } else { EXIT_NEGATIVE };
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            for (i, t) in transcripts.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&emit_transcript(t, OutputFormat::Text));
            }
            out
        }
        Format::Structured => {
            if transcripts.len() == 1 {
                emit_transcript(&transcripts[0], OutputFormat::Structured)
            } else {
                let mut s = serde_json::to_string_pretty(&transcripts)
                    .expect("transcripts serialize");
                s.push('\n');
                s
            }
        }
    };
    Ok((out, code))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("document serializes");
    s.push('\n');
    s
}
