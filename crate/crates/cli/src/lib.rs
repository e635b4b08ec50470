//! The `mahonian` command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on any
//! usage or input error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mahonian_core::bijections::{self, Bijection};
use mahonian_core::partitions::{
    canonical_word, enumerate_partitions, mahonian_word, standard_arcs,
};
use mahonian_core::qpoly::{carlitz_stirling, johnson_stirling};
use mahonian_core::verify::{
    self, distribution, find_remark_counterexample, joint_distribution, DomainDescriptor, Remark,
    Statistic, TailScope, VerificationReport,
};
use mahonian_core::words::{self, enumerate_words, Letter};
use mahonian_core::{Error, Multiset, Permutation, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mahonian",
    version,
    about = "Mahonian statistics on words and set partitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate statistics on a word.
    Stats {
        word: String,
        /// One statistic; all of them when omitted.
        #[arg(long)]
        stat: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection or operator to a word.
    Map {
        /// foata, foata-d, han-z, psi-m, rawlings, han-den, csz-phi,
        /// carlitz-psi, theta, jump
        bijection: String,
        word: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Letter index for `theta`.
        #[arg(long)]
        i: Option<Letter>,
        /// Letter for `jump`.
        #[arg(long)]
        x: Option<Letter>,
        /// With han-den, also print the dominated cycles.
        #[arg(long)]
        show_cycles: bool,
        #[arg(long)]
        json: bool,
    },
    /// List words or set partitions.
    Enum {
        #[command(subcommand)]
        what: EnumWhat,
    },
    /// Distribution of a statistic over a domain.
    Dist(DistArgs),
    /// A q-Stirling number of the second kind.
    Qstirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// The eight Mahonian statistics on the 15 words of P_M, M = {1,1,2,2,3,3}.
    Table3 {
        #[arg(long)]
        json: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumWhat {
    Words {
        /// Multiplicities, e.g. 2,2,1.
        #[arg(long)]
        multiset: String,
        /// Keep only words with this tail permutation.
        #[arg(long)]
        tail: Option<String>,
    },
    Partitions {
        n: usize,
        #[arg(long)]
        blocks: Option<usize>,
        #[arg(long, value_enum, default_value_t = Repr::Mahonian)]
        repr: Repr,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Repr {
    Mahonian,
    Canonical,
    Block,
    Arcs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StirlingKind {
    Carlitz,
    Johnson,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DomainKind {
    /// P_M (increasing tail).
    Pm,
    /// S_M^tau (needs --tail).
    Smtau,
    /// Pi_{n,m} (needs -n and -m).
    Pinm,
    /// S_M, all words.
    Sm,
    /// Pi_n (needs -n).
    Pin,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long)]
    stat: String,
    /// A second statistic for a joint (t, q) distribution.
    #[arg(long)]
    joint: Option<String>,
    #[arg(long, value_enum)]
    domain: DomainKind,
    #[arg(long)]
    multiset: Option<String>,
    #[arg(long)]
    tail: Option<String>,
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(short = 'm')]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Theorem1,
    Theorem2,
    Theorem3,
    Corollary,
    Invariance,
    Remarks,
    Transport,
    Lemmas,
}

/// Parse `args` (including the program name), run, and write the payload to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(s) => f.write_str(s),
            CliError::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_word(s: &str) -> CliResult<Word> {
    Ok(s.parse::<Word>()?)
}

fn parse_multiset(s: &str) -> CliResult<Multiset> {
    let m: Multiset = s.parse()?;
    m.require_full_support()?;
    Ok(m)
}

fn json_line(out: &mut dyn Write, v: &Value) -> CliResult<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(v).expect("values serialize")
    )?;
    Ok(())
}

/// Every statistic, in table order.
fn all_stats(d: Option<usize>, r: Option<usize>) -> Vec<Statistic> {
    let d = d.unwrap_or(2);
    let r = r.unwrap_or(2);
    vec![
        Statistic::Inv,
        Statistic::Maj,
        Statistic::MajD(d),
        Statistic::Z,
        Statistic::RMaj(r),
        Statistic::Den,
        Statistic::Mak,
        Statistic::Mad,
        Statistic::Des,
        Statistic::Exc,
        Statistic::Mstc,
    ]
}

fn execute(cmd: Command, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Stats {
            word,
            stat,
            d,
            r,
            json,
        } => {
            let w = parse_word(&word)?;
            let stats = match stat {
                Some(name) => vec![Statistic::from_name(&name, d, r)?],
                None => {
                    if d == Some(0) || r == Some(0) {
                        return Err(CliError::Usage("--d and --r must be at least 1".into()));
                    }
                    all_stats(d, r)
                }
            };
            if json {
                let obj: serde_json::Map<String, Value> = stats
                    .iter()
                    .map(|s| (s.to_string(), json!(s.eval(&w))))
                    .collect();
                json_line(out, &json!({ "word": w.to_string(), "stats": obj }))?;
            } else if stats.len() == 1 {
                writeln!(out, "{}", stats[0].eval(&w))?;
            } else {
                let head: Vec<String> = stats.iter().map(Statistic::to_string).collect();
                let vals: Vec<String> = stats.iter().map(|s| s.eval(&w).to_string()).collect();
                writeln!(out, "word\t{}", head.join("\t"))?;
                writeln!(out, "{w}\t{}", vals.join("\t"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Map {
            bijection,
            word,
            d,
            r,
            i,
            x,
            show_cycles,
            json,
        } => {
            let w = parse_word(&word)?;
            let mut cycles = None;
            let image: Word = match bijection.as_str() {
                "theta" => {
                    let i = i.ok_or_else(|| CliError::Usage("theta needs --i".into()))?;
                    if i == 0 {
                        return Err(CliError::Usage("--i must be at least 1".into()));
                    }
                    Word::new(bijections::theta(&w, i))?
                }
                "jump" => {
                    let x = x.ok_or_else(|| CliError::Usage("jump needs --x".into()))?;
                    Word::new(bijections::jump(&w, x))?
                }
                "carlitz-psi" => bijections::carlitz_psi(&w)?.into_word(),
                "han-den" => {
                    let (img, cyc) = bijections::han_den(&w);
                    cycles = Some(cyc.to_string());
                    img
                }
                name => {
                    let param = if name == "rawlings" { r } else { d };
                    Bijection::from_name(name, param)?.apply(&w)
                }
            };
            if json {
                let mut v =
                    json!({ "map": bijection, "word": w.to_string(), "image": image.to_string() });
                if let (true, Some(c)) = (show_cycles, &cycles) {
                    v["cycles"] = json!(c);
                }
                json_line(out, &v)?;
            } else {
                writeln!(out, "{image}")?;
                if let (true, Some(c)) = (show_cycles, &cycles) {
                    writeln!(out, "{c}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Enum { what } => {
            match what {
                EnumWhat::Words { multiset, tail } => {
                    let m: Multiset = multiset.parse()?;
                    match tail {
                        Some(t) => {
                            let tau: Permutation = t.parse()?;
                            for w in words::enumerate_with_tail(&m, &tau)? {
                                writeln!(out, "{w}")?;
                            }
                        }
                        None => {
                            for w in enumerate_words(&m) {
                                writeln!(out, "{w}")?;
                            }
                        }
                    }
                }
                EnumWhat::Partitions { n, blocks, repr } => {
                    if blocks.is_some_and(|m| m > n) {
                        return Err(CliError::Usage("--blocks must not exceed N".into()));
                    }
                    for p in enumerate_partitions(n, blocks) {
                        let line = match repr {
                            Repr::Mahonian => mahonian_word(&p).to_string(),
                            Repr::Canonical => canonical_word(&p).to_string(),
                            Repr::Block => p.to_string(),
                            Repr::Arcs => standard_arcs(&p).to_string(),
                        };
                        writeln!(out, "{line}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Dist(a) => dist(a, out),
        Command::Qstirling { kind, n, m, json } => {
            let p = match kind {
                StirlingKind::Carlitz => carlitz_stirling(n, m),
                StirlingKind::Johnson => johnson_stirling(n, m),
            };
            if json {
                json_line(out, &serde_json::to_value(&p).expect("serializes"))?;
            } else {
                writeln!(out, "{p}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Table3 { json } => {
            table3(out, json)?;
            Ok(EXIT_OK)
        }
        Command::Verify { claim, max_n, json } => verify_cmd(claim, max_n, json, out),
    }
}

fn dist(a: DistArgs, out: &mut dyn Write) -> CliResult<i32> {
    let need_multiset = || {
        a.multiset
            .as_deref()
            .ok_or_else(|| CliError::Usage("this domain needs --multiset".into()))
            .and_then(parse_multiset)
    };
    let need_n = || {
        a.n.ok_or_else(|| CliError::Usage("this domain needs -n".into()))
    };
    let domain = match a.domain {
        DomainKind::Pm => DomainDescriptor::IncreasingTail {
            multiset: need_multiset()?,
        },
        DomainKind::Sm => DomainDescriptor::AllWords {
            multiset: need_multiset()?,
        },
        DomainKind::Smtau => {
            let t = a
                .tail
                .as_deref()
                .ok_or_else(|| CliError::Usage("smtau needs --tail".into()))?;
            let tau: Permutation = t.parse()?;
            DomainDescriptor::fixed_tail(need_multiset()?, &tau)
        }
        DomainKind::Pin => DomainDescriptor::Partitions { n: need_n()? },
        DomainKind::Pinm => {
            let m = a.m.ok_or_else(|| CliError::Usage("pinm needs -m".into()))?;
            DomainDescriptor::PartitionsNM { n: need_n()?, m }
        }
    };
    let s1 = Statistic::from_name(&a.stat, a.d, a.r)?;
    match &a.joint {
        Some(second) => {
            let s2 = Statistic::from_name(second, a.d, a.r)?;
            let p = joint_distribution((s1, s2), &domain)?;
            if a.json {
                json_line(
                    out,
                    &json!({ "statistics": [s1.to_string(), s2.to_string()], "domain": domain, "distribution": p }),
                )?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        None => {
            let p = distribution(s1, &domain)?;
            if a.json {
                json_line(
                    out,
                    &json!({ "statistic": s1.to_string(), "domain": domain, "distribution": p }),
                )?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Column order of the table.
pub const TABLE3_STATS: [Statistic; 8] = Statistic::MAHONIAN;

fn table3(out: &mut dyn Write, json: bool) -> CliResult<()> {
    let m = Multiset::new(vec![2, 2, 2]);
    let rows: Vec<(Word, Vec<u64>)> = words::enumerate_increasing_tail(&m)?
        .map(|w| {
            let vals = TABLE3_STATS.iter().map(|s| s.eval(&w)).collect();
            (w, vals)
        })
        .collect();
    if json {
        let arr: Vec<Value> = rows
            .iter()
            .map(|(w, vals)| {
                let mut obj = serde_json::Map::new();
                obj.insert("word".into(), json!(w.to_string()));
                for (s, v) in TABLE3_STATS.iter().zip(vals) {
                    obj.insert(s.to_string(), json!(v));
                }
                Value::Object(obj)
            })
            .collect();
        json_line(out, &Value::Array(arr))?;
    } else {
        let head: Vec<String> = TABLE3_STATS.iter().map(Statistic::to_string).collect();
        writeln!(out, "word\t{}", head.join("\t"))?;
        for (w, vals) in rows {
            let cells: Vec<String> = vals.iter().map(u64::to_string).collect();
            writeln!(out, "{w}\t{}", cells.join("\t"))?;
        }
    }
    Ok(())
}

fn verify_cmd(claim: Claim, max_n: usize, json: bool, out: &mut dyn Write) -> CliResult<i32> {
    let reports: Vec<VerificationReport> = match claim {
        Claim::Theorem1 => verify::sweep_theorem1(max_n),
        Claim::Theorem2 => verify::sweep_theorem2(max_n),
        Claim::Theorem3 => verify::sweep_theorem3(max_n),
        Claim::Corollary => verify::sweep_corollary(max_n),
        Claim::Invariance => verify::sweep_invariance(max_n),
        Claim::Transport => verify::transport_suite(max_n),
        Claim::Lemmas => {
            let mut r = verify::lemma_suite_han_z(max_n, (max_n as Letter).min(5));
            r.extend(verify::lemma_suite_psi(max_n));
            r
        }
        Claim::Remarks => vec![
            find_remark_counterexample(Remark::One, max_n, TailScope::Consecutive)?,
            find_remark_counterexample(Remark::Two, max_n, TailScope::Consecutive)?,
        ],
    };
    if json {
        json_line(
            out,
            &serde_json::to_value(&reports).expect("reports serialize"),
        )?;
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
    }
    Ok(if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}
