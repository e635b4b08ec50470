//! Distributions over finite word domains and exhaustive equidistribution
//! checks.
//!
//! Every check enumerates its domain completely. Sweeps run their cells in
//! parallel but collect results in enumeration order, so reports and
//! witnesses do not depend on scheduling.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::{self, Bijection};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, mahonian_word};
use crate::qpoly::{johnson_stirling, QPoly, TQPoly};
use crate::stats::{self, lehmer_code, mak_mad};
use crate::words::{
    self, consecutive_permutations, enumerate_words, format_letters, is_consecutive,
    permutations_of, Letter, Multiset, Permutation, Word,
};

/// A word statistic, with its parameter where it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Inv,
    Maj,
    Des,
    MajD(usize),
    Z,
    RMaj(usize),
    Den,
    Exc,
    Mak,
    Mad,
    Mstc,
}

const NOT_DEFINED: &str =
    "is not implemented: no closed-form definition is available to implement it from";

impl Statistic {
    /// The eight Mahonian statistics, with `d = r = 2`.
    pub const MAHONIAN: [Statistic; 8] = [
        Statistic::Inv,
        Statistic::Maj,
        Statistic::MajD(2),
        Statistic::Z,
        Statistic::RMaj(2),
        Statistic::Den,
        Statistic::Mak,
        Statistic::Mad,
    ];

    /// Build from a CLI name. `d` and `r` default to 2.
    pub fn from_name(name: &str, d: Option<usize>, r: Option<usize>) -> Result<Self> {
        let s = match name.to_ascii_lowercase().as_str() {
            "inv" => Statistic::Inv,
            "maj" => Statistic::Maj,
            "des" => Statistic::Des,
            "majd" | "maj-d" | "maj_d" => Statistic::MajD(d.unwrap_or(2)),
            "z" => Statistic::Z,
            "rmaj" | "r-maj" => Statistic::RMaj(r.unwrap_or(2)),
            "den" => Statistic::Den,
            "exc" => Statistic::Exc,
            "mak" => Statistic::Mak,
            "mad" => Statistic::Mad,
            "mstc" => Statistic::Mstc,
            "stat" => return Err(Error::UnsupportedStatistic(format!("STAT {NOT_DEFINED}"))),
            "stc" => return Err(Error::UnsupportedStatistic(format!("stc {NOT_DEFINED}"))),
            other => {
                return Err(Error::UnsupportedStatistic(format!(
                    "unknown statistic {other:?}"
                )))
            }
        };
        if matches!(s, Statistic::MajD(0) | Statistic::RMaj(0)) {
            return Err(Error::Parameter(format!(
                "{name} parameter must be at least 1"
            )));
        }
        Ok(s)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Statistic::Inv => "inv",
            Statistic::Maj => "maj",
            Statistic::Des => "des",
            Statistic::MajD(_) => "majd",
            Statistic::Z => "z",
            Statistic::RMaj(_) => "rmaj",
            Statistic::Den => "den",
            Statistic::Exc => "exc",
            Statistic::Mak => "mak",
            Statistic::Mad => "mad",
            Statistic::Mstc => "mstc",
        }
    }

    pub fn eval(&self, w: &[Letter]) -> u64 {
        match *self {
            Statistic::Inv => stats::inv(w),
            Statistic::Maj => stats::maj(w),
            Statistic::Des => stats::des(w),
            Statistic::MajD(d) => stats::maj_d(w, d).expect("d >= 1"),
            Statistic::Z => stats::z_index(w),
            Statistic::RMaj(r) => stats::r_maj(w, r).expect("r >= 1"),
            Statistic::Den => stats::exc_den(w).den,
            Statistic::Exc => stats::exc_den(w).exc,
            Statistic::Mak => stats::mak(w),
            Statistic::Mad => stats::mad(w),
            Statistic::Mstc => stats::mstc(w),
        }
    }
}

impl fmt::Display for Statistic {
    /// Table-style labels: `INV`, `MAJ_2`, `2-MAJ`, `des`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Inv => f.write_str("INV"),
            Statistic::Maj => f.write_str("MAJ"),
            Statistic::Des => f.write_str("des"),
            Statistic::MajD(d) => write!(f, "MAJ_{d}"),
            Statistic::Z => f.write_str("Z"),
            Statistic::RMaj(r) => write!(f, "{r}-MAJ"),
            Statistic::Den => f.write_str("DEN"),
            Statistic::Exc => f.write_str("exc"),
            Statistic::Mak => f.write_str("MAK"),
            Statistic::Mad => f.write_str("MAD"),
            Statistic::Mstc => f.write_str("mstc"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    /// `name` or `name:param`, e.g. `majd:3`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, p)) => {
                let v: usize = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad parameter in {s:?}")))?;
                Statistic::from_name(name, Some(v), Some(v))
            }
            None => Statistic::from_name(s, None, None),
        }
    }
}

/// The four Euler-Mahonian pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiStatistic {
    DesMaj,
    MstcInv,
    ExcDen,
    DesMak,
}

impl BiStatistic {
    pub const ALL: [BiStatistic; 4] = [
        BiStatistic::DesMaj,
        BiStatistic::MstcInv,
        BiStatistic::ExcDen,
        BiStatistic::DesMak,
    ];

    pub fn eval(&self, w: &[Letter]) -> (u64, u64) {
        match self {
            BiStatistic::DesMaj => {
                let d = stats::descents(w);
                (d.des, d.maj)
            }
            BiStatistic::MstcInv => (stats::mstc(w), stats::inv(w)),
            BiStatistic::ExcDen => {
                let e = stats::exc_den(w);
                (e.exc, e.den)
            }
            BiStatistic::DesMak => {
                let m = mak_mad(w);
                (m.des, m.mak)
            }
        }
    }
}

impl fmt::Display for BiStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BiStatistic::DesMaj => "(des,MAJ)",
            BiStatistic::MstcInv => "(mstc,INV)",
            BiStatistic::ExcDen => "(exc,DEN)",
            BiStatistic::DesMak => "(des,MAK)",
        })
    }
}

/// A finite set of words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DomainDescriptor {
    /// `S_M`.
    AllWords { multiset: Multiset },
    /// `S_M^tau`.
    FixedTail { multiset: Multiset, tail: Word },
    /// `P_M`.
    IncreasingTail { multiset: Multiset },
    /// Mahonian words of all partitions of `[n]`.
    #[serde(rename = "partitions-n")]
    Partitions { n: usize },
    /// Mahonian words of the partitions of `[n]` into `m` blocks.
    #[serde(rename = "partitions-n-m")]
    PartitionsNM { n: usize, m: usize },
    /// A union of domains swept by a suite, described in words.
    Sweep { max_n: usize, scope: String },
}

impl DomainDescriptor {
    pub fn fixed_tail(multiset: Multiset, tail: &Permutation) -> Self {
        DomainDescriptor::FixedTail {
            multiset,
            tail: tail.as_word().clone(),
        }
    }

    /// The words of the domain in lexicographic order (partition domains
    /// follow the partition enumeration order).
    pub fn words(&self) -> Result<Vec<Word>> {
        match self {
            DomainDescriptor::AllWords { multiset } => Ok(enumerate_words(multiset).collect()),
            DomainDescriptor::FixedTail { multiset, tail } => {
                let tail = Permutation::try_from(tail.clone())?;
                Ok(words::enumerate_with_tail(multiset, &tail)?.collect())
            }
            DomainDescriptor::IncreasingTail { multiset } => {
                Ok(words::enumerate_increasing_tail(multiset)?.collect())
            }
            DomainDescriptor::Partitions { n } => Ok(enumerate_partitions(*n, None)
                .map(|p| mahonian_word(&p))
                .collect()),
            DomainDescriptor::PartitionsNM { n, m } => {
                if m > n {
                    return Err(Error::Parameter(format!("need m <= n, got n={n}, m={m}")));
                }
                Ok(enumerate_partitions(*n, Some(*m))
                    .map(|p| mahonian_word(&p))
                    .collect())
            }
            DomainDescriptor::Sweep { .. } => Err(Error::Domain(
                "a sweep descriptor does not name a single domain".into(),
            )),
        }
    }
}

impl fmt::Display for DomainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainDescriptor::AllWords { multiset } => write!(f, "S_M M={multiset}"),
            DomainDescriptor::FixedTail { multiset, tail } => {
                write!(f, "S_M^tau M={multiset} tau={tail}")
            }
            DomainDescriptor::IncreasingTail { multiset } => write!(f, "P_M M={multiset}"),
            DomainDescriptor::Partitions { n } => write!(f, "Pi_n n={n}"),
            DomainDescriptor::PartitionsNM { n, m } => write!(f, "Pi_n,m n={n} m={m}"),
            DomainDescriptor::Sweep { max_n, scope } => write!(f, "{scope}, n<={max_n}"),
        }
    }
}

/// A univariate or bivariate distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Distribution {
    Univariate(QPoly),
    Bivariate(TQPoly),
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Univariate(p) => p.fmt(f),
            Distribution::Bivariate(p) => p.fmt(f),
        }
    }
}

/// What made a check fail, or what a counterexample search found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub domain: DomainDescriptor,
    /// The statistics or maps involved.
    pub statistics: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.domain, self.statistics.join(" vs "))?;
        if let Some(w) = &self.word {
            write!(f, " word={w}")?;
        }
        for (k, v) in &self.values {
            write!(f, " {k}={v}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub domain: DomainDescriptor,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default)]
    pub polynomials: BTreeMap<String, Distribution>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict}\t{}\t{}", self.claim, self.domain)?;
        if let Some(w) = &self.witness {
            write!(f, "\twitness: {w}")?;
        }
        Ok(())
    }
}

fn tally<K: Ord>(words: &[Word], f: impl Fn(&[Letter]) -> K) -> BTreeMap<K, i64> {
    let mut c = BTreeMap::new();
    for w in words {
        *c.entry(f(w)).or_insert(0) += 1;
    }
    c
}

fn qpoly_of(c: &BTreeMap<u64, i64>) -> QPoly {
    let mut p = QPoly::zero();
    for (&k, &v) in c {
        p.add_term(k as usize, v);
    }
    p
}

fn tqpoly_of(c: &BTreeMap<(u64, u64), i64>) -> TQPoly {
    let mut p = TQPoly::zero();
    for (&(t, q), &v) in c {
        p.add_term(t as u32, q as u32, v);
    }
    p
}

pub fn distribution_on(stat: Statistic, words: &[Word]) -> QPoly {
    qpoly_of(&tally(words, |w| stat.eval(w)))
}

pub fn joint_distribution_on(pair: BiStatistic, words: &[Word]) -> TQPoly {
    tqpoly_of(&tally(words, |w| pair.eval(w)))
}

/// Generating polynomial of `stat` over the domain.
pub fn distribution(stat: Statistic, dom: &DomainDescriptor) -> Result<QPoly> {
    Ok(distribution_on(stat, &dom.words()?))
}

/// Generating polynomial in `t^a q^b` of a pair of statistics.
pub fn joint_distribution(pair: (Statistic, Statistic), dom: &DomainDescriptor) -> Result<TQPoly> {
    let words = dom.words()?;
    Ok(tqpoly_of(&tally(&words, |w| {
        (pair.0.eval(w), pair.1.eval(w))
    })))
}

/// For two keyed tallies that differ, the first differing key and the
/// lexicographically least word carrying it under either statistic.
fn mismatch_witness<K: Ord + Copy + fmt::Debug>(
    domain: &DomainDescriptor,
    words: &[Word],
    labels: [String; 2],
    fa: impl Fn(&[Letter]) -> K,
    fb: impl Fn(&[Letter]) -> K,
) -> Witness {
    let ca = tally(words, &fa);
    let cb = tally(words, &fb);
    let key = ca
        .keys()
        .chain(cb.keys())
        .copied()
        .filter(|k| ca.get(k) != cb.get(k))
        .min()
        .expect("tallies differ");
    let word = words
        .iter()
        .filter(|w| fa(w) == key || fb(w) == key)
        .min()
        .cloned();
    let mut values = BTreeMap::new();
    if let Some(w) = &word {
        values.insert(labels[0].clone(), format!("{:?}", fa(w)));
        values.insert(labels[1].clone(), format!("{:?}", fb(w)));
    }
    let detail = format!(
        "value {key:?} occurs {} times under {} and {} times under {}",
        ca.get(&key).unwrap_or(&0),
        labels[0],
        cb.get(&key).unwrap_or(&0),
        labels[1]
    );
    Witness {
        domain: domain.clone(),
        statistics: labels.to_vec(),
        word,
        values,
        detail,
    }
}

fn compare_univariate(
    claim: &str,
    domain: DomainDescriptor,
    words: &[Word],
    stats: &[Statistic],
    reference: Option<(String, QPoly)>,
) -> VerificationReport {
    let dists: Vec<QPoly> = stats.iter().map(|&s| distribution_on(s, words)).collect();
    let mut polynomials = BTreeMap::new();
    for (s, p) in stats.iter().zip(&dists) {
        polynomials.insert(s.to_string(), Distribution::Univariate(p.clone()));
    }
    let (ref_label, ref_poly) = match reference {
        Some((label, p)) => {
            polynomials.insert(label.clone(), Distribution::Univariate(p.clone()));
            (label, p)
        }
        None => (stats[0].to_string(), dists[0].clone()),
    };
    let bad = stats.iter().zip(&dists).find(|(_, p)| **p != ref_poly);
    let witness = bad.map(
        |(&s, p)| match stats.iter().position(|t| t.to_string() == ref_label) {
            Some(i) => {
                let base = stats[i];
                mismatch_witness(
                    &domain,
                    words,
                    [base.to_string(), s.to_string()],
                    |w| base.eval(w),
                    |w| s.eval(w),
                )
            }
            None => Witness {
                domain: domain.clone(),
                statistics: vec![ref_label.clone(), s.to_string()],
                word: None,
                values: BTreeMap::new(),
                detail: format!("{ref_label} = {ref_poly} but {s} gives {p}"),
            },
        },
    );
    VerificationReport {
        claim: claim.to_string(),
        domain,
        pass: witness.is_none(),
        witness,
        polynomials,
    }
}

fn compare_bivariate(
    claim: &str,
    domain: DomainDescriptor,
    words: &[Word],
    pairs: &[BiStatistic],
) -> VerificationReport {
    let dists: Vec<TQPoly> = pairs
        .iter()
        .map(|&p| joint_distribution_on(p, words))
        .collect();
    let polynomials = pairs
        .iter()
        .zip(&dists)
        .map(|(p, d)| (p.to_string(), Distribution::Bivariate(d.clone())))
        .collect();
    let witness = pairs
        .iter()
        .zip(&dists)
        .find(|(_, d)| **d != dists[0])
        .map(|(&p, _)| {
            let base = pairs[0];
            mismatch_witness(
                &domain,
                words,
                [base.to_string(), p.to_string()],
                |w| base.eval(w),
                |w| p.eval(w),
            )
        });
    VerificationReport {
        claim: claim.to_string(),
        domain,
        pass: witness.is_none(),
        witness,
        polynomials,
    }
}

/// The eight Mahonian statistics agree on `P_M`; `MAJ_d` and `r-MAJ` are
/// also checked for every `d, r` in `1..=n`.
pub fn check_theorem1(m: &Multiset) -> Result<VerificationReport> {
    m.require_full_support()?;
    let domain = DomainDescriptor::IncreasingTail {
        multiset: m.clone(),
    };
    let words = domain.words()?;
    let n = m.size();
    let mut stats = Statistic::MAHONIAN.to_vec();
    stats.extend((1..=n).filter(|&d| d != 2).map(Statistic::MajD));
    stats.extend((1..=n).filter(|&r| r != 2).map(Statistic::RMaj));
    Ok(compare_univariate("theorem1", domain, &words, &stats, None))
}

/// The four Euler-Mahonian pairs agree on `P_M`.
pub fn check_theorem2(m: &Multiset) -> Result<VerificationReport> {
    m.require_full_support()?;
    let domain = DomainDescriptor::IncreasingTail {
        multiset: m.clone(),
    };
    let words = domain.words()?;
    Ok(compare_bivariate(
        "theorem2",
        domain,
        &words,
        &BiStatistic::ALL,
    ))
}

/// `INV`, `MAJ`, `MAJ_d` (all `d <= n`) and `Z` agree on `S_M^tau` for
/// consecutive `tau`.
pub fn check_theorem3(m: &Multiset, tau: &Permutation) -> Result<VerificationReport> {
    m.require_full_support()?;
    if !is_consecutive(tau) {
        return Err(Error::Precondition(format!("{tau} is not consecutive")));
    }
    let domain = DomainDescriptor::fixed_tail(m.clone(), tau);
    let words = domain.words()?;
    let mut stats = vec![Statistic::Inv, Statistic::Maj, Statistic::Z];
    stats.extend((1..=m.size()).map(Statistic::MajD));
    Ok(compare_univariate("theorem3", domain, &words, &stats, None))
}

/// Johnson's q-Stirling number against each Mahonian statistic over `Pi_{n,m}`.
pub fn check_corollary(n: usize, m: usize) -> Result<VerificationReport> {
    if m > n {
        return Err(Error::Precondition(format!(
            "need m <= n, got n={n}, m={m}"
        )));
    }
    let domain = DomainDescriptor::PartitionsNM { n, m };
    let words = domain.words()?;
    let johnson = johnson_stirling(n, m);
    Ok(compare_univariate(
        "corollary",
        domain,
        &words,
        &Statistic::MAHONIAN,
        Some(("johnson".to_string(), johnson)),
    ))
}

/// The bijection maps `S_M^tau` injectively onto itself.
///
/// `tau` must be consecutive for `foata`, `foata-d` and `han-z`, and
/// increasing for the others.
pub fn check_invariance(
    b: Bijection,
    m: &Multiset,
    tau: &Permutation,
) -> Result<VerificationReport> {
    m.require_full_support()?;
    if tau.len() != m.num_letters() {
        return Err(Error::Dimension {
            expected: m.num_letters(),
            found: tau.len(),
        });
    }
    if b.preserves_consecutive_tails() {
        if !is_consecutive(tau) {
            return Err(Error::Precondition(format!(
                "{b} needs a consecutive tail, got {tau}"
            )));
        }
    } else if **tau != *Permutation::identity(tau.len()) {
        return Err(Error::Precondition(format!(
            "{b} needs the increasing tail, got {tau}"
        )));
    }
    let domain = DomainDescriptor::fixed_tail(m.clone(), tau);
    let words = domain.words()?;
    let members: HashSet<&Word> = words.iter().collect();
    let mut seen: BTreeMap<Word, Word> = BTreeMap::new();
    let mut witness = None;
    for w in &words {
        let image = b.apply(w);
        let problem = if !members.contains(&image) {
            Some("image leaves the domain".to_string())
        } else {
            seen.get(&image)
                .map(|prev| format!("image already hit by {prev}"))
        };
        if let Some(detail) = problem {
            let mut values = BTreeMap::new();
            values.insert("image".to_string(), image.to_string());
            witness = Some(Witness {
                domain: domain.clone(),
                statistics: vec![b.to_string()],
                word: Some(w.clone()),
                values,
                detail,
            });
            break;
        }
        seen.insert(image, w.clone());
    }
    Ok(VerificationReport {
        claim: format!("invariance {b}"),
        domain,
        pass: witness.is_none(),
        witness,
        polynomials: BTreeMap::new(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Remark {
    /// Some Mahonian statistic outside `INV, MAJ, MAJ_d, Z` differs from
    /// `INV` on some `S_M^tau`.
    One,
    /// Two Euler-Mahonian pairs differ on some `S_M^tau`.
    Two,
}

impl FromStr for Remark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "remark-1" | "remark1" | "1" => Ok(Remark::One),
            "remark-2" | "remark2" | "2" => Ok(Remark::Two),
            other => Err(Error::Parse(format!("unknown remark {other:?}"))),
        }
    }
}

impl fmt::Display for Remark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Remark::One => "remark-1",
            Remark::Two => "remark-2",
        })
    }
}

/// Which tail permutations a counterexample search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailScope {
    Consecutive,
    IncreasingOnly,
}

/// Search every full-support `M` with `2 <= |M| <= max_n` and every tail
/// in scope for a domain where the remark's statistics disagree.
///
/// Cells are visited by `n`, then `M` in composition order, then `tau` in
/// lexicographic order; the first disagreeing cell is the witness. The
/// report passes iff a witness is found.
pub fn find_remark_counterexample(
    which: Remark,
    max_n: usize,
    scope: TailScope,
) -> Result<VerificationReport> {
    if max_n < 2 {
        return Err(Error::Precondition("the search needs max_n >= 2".into()));
    }
    let scope_text = match scope {
        TailScope::Consecutive => "full-support M, consecutive tau",
        TailScope::IncreasingOnly => "full-support M, increasing tau",
    };
    let claim = which.to_string();
    for n in 2..=max_n {
        let cells: Vec<(Multiset, Permutation)> = Multiset::compositions(n)
            .into_iter()
            .flat_map(|m| {
                let taus = match scope {
                    TailScope::Consecutive => consecutive_permutations(m.num_letters()),
                    TailScope::IncreasingOnly => vec![Permutation::identity(m.num_letters())],
                };
                taus.into_iter().map(move |t| (m.clone(), t))
            })
            .collect();
        let found = cells
            .par_iter()
            .map(|(m, tau)| {
                let domain = DomainDescriptor::fixed_tail(m.clone(), tau);
                let words = domain.words().expect("valid cell");
                let report = match which {
                    Remark::One => compare_univariate(
                        &claim,
                        domain,
                        &words,
                        &[
                            Statistic::Inv,
                            Statistic::RMaj(2),
                            Statistic::Den,
                            Statistic::Mak,
                            Statistic::Mad,
                        ],
                        None,
                    ),
                    Remark::Two => remark_two_cell(&claim, domain, &words),
                };
                (!report.pass).then_some(report)
            })
            .find_first(Option::is_some)
            .flatten();
        if let Some(mut report) = found {
            report.pass = true;
            return Ok(report);
        }
    }
    Ok(VerificationReport {
        claim,
        domain: DomainDescriptor::Sweep {
            max_n,
            scope: scope_text.to_string(),
        },
        pass: false,
        witness: None,
        polynomials: BTreeMap::new(),
    })
}

// first pair (i < j) in list order with differing joint distributions
fn remark_two_cell(claim: &str, domain: DomainDescriptor, words: &[Word]) -> VerificationReport {
    let all = BiStatistic::ALL;
    let dists: Vec<TQPoly> = all
        .iter()
        .map(|&p| joint_distribution_on(p, words))
        .collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if dists[i] != dists[j] {
                return compare_bivariate(claim, domain, words, &[all[i], all[j]]);
            }
        }
    }
    compare_bivariate(claim, domain, words, &all)
}

fn sweep<C: Sync, F>(cells: Vec<C>, f: F) -> Vec<VerificationReport>
where
    F: Fn(&C) -> VerificationReport + Sync + Send,
{
    cells.par_iter().map(f).collect()
}

fn compositions_up_to(max_n: usize) -> Vec<Multiset> {
    (1..=max_n).flat_map(Multiset::compositions).collect()
}

/// [`check_theorem1`] for every full-support `M` with `1 <= |M| <= max_n`.
pub fn sweep_theorem1(max_n: usize) -> Vec<VerificationReport> {
    sweep(compositions_up_to(max_n), |m| {
        check_theorem1(m).expect("full support")
    })
}

pub fn sweep_theorem2(max_n: usize) -> Vec<VerificationReport> {
    sweep(compositions_up_to(max_n), |m| {
        check_theorem2(m).expect("full support")
    })
}

/// [`check_theorem3`] for every full-support `M` and every consecutive `tau`.
pub fn sweep_theorem3(max_n: usize) -> Vec<VerificationReport> {
    let cells: Vec<(Multiset, Permutation)> = compositions_up_to(max_n)
        .into_iter()
        .flat_map(|m| {
            consecutive_permutations(m.num_letters())
                .into_iter()
                .map(move |t| (m.clone(), t))
        })
        .collect();
    sweep(cells, |(m, t)| {
        check_theorem3(m, t).expect("consecutive tail")
    })
}

/// [`check_corollary`] for all `0 <= m <= n <= max_n`.
pub fn sweep_corollary(max_n: usize) -> Vec<VerificationReport> {
    let cells: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|n| (0..=n).map(move |m| (n, m)))
        .collect();
    sweep(cells, |&(n, m)| check_corollary(n, m).expect("m <= n"))
}

/// [`check_invariance`] for all seven maps (`d`, `r` over `1..=n`) on every
/// full-support `M` with `|M| <= max_n` and every admissible tail.
pub fn sweep_invariance(max_n: usize) -> Vec<VerificationReport> {
    let mut cells = Vec::new();
    for m in compositions_up_to(max_n) {
        let n = m.size();
        let k = m.num_letters();
        let mut maps = vec![
            Bijection::Foata,
            Bijection::HanZ,
            Bijection::PsiM,
            Bijection::HanDen,
            Bijection::CszPhi,
        ];
        maps.extend((1..=n).map(Bijection::FoataD));
        maps.extend((1..=n).map(Bijection::Rawlings));
        for b in maps {
            let taus = if b.preserves_consecutive_tails() {
                consecutive_permutations(k)
            } else {
                vec![Permutation::identity(k)]
            };
            for t in taus {
                cells.push((b, m.clone(), t));
            }
        }
    }
    sweep(cells, |(b, m, t)| {
        check_invariance(*b, m, t).expect("admissible cell")
    })
}

/// A property checked word by word; `None` means it holds.
type WordCheck<'a> = Box<dyn Fn(&Word) -> Option<BTreeMap<String, String>> + Sync + Send + 'a>;

fn check_each(
    claim: &str,
    domain: DomainDescriptor,
    words: &[Word],
    f: WordCheck,
) -> VerificationReport {
    let bad = words
        .par_iter()
        .find_map_first(|w| f(w).map(|v| (w.clone(), v)));
    let witness = bad.map(|(w, values)| Witness {
        domain: domain.clone(),
        statistics: vec![claim.to_string()],
        word: Some(w),
        values,
        detail: "property fails".to_string(),
    });
    VerificationReport {
        claim: claim.to_string(),
        domain,
        pass: witness.is_none(),
        witness,
        polynomials: BTreeMap::new(),
    }
}

fn vals(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Every word over a full-support multiset of size `1..=max_n`, by size,
/// then multiset, then lexicographically.
pub fn all_full_support_words(max_n: usize) -> Vec<Word> {
    compositions_up_to(max_n)
        .iter()
        .flat_map(enumerate_words)
        .collect()
}

/// The statistic identities carried by each bijection, on every word over a
/// full-support multiset with `|M| <= max_n`. The Carlitz map is checked on
/// permutations.
pub fn transport_suite(max_n: usize) -> Vec<VerificationReport> {
    let words = all_full_support_words(max_n);
    let perms: Vec<Word> = (1..=max_n)
        .flat_map(permutations_of)
        .map(Permutation::into_word)
        .collect();
    let dom = |scope: &str| DomainDescriptor::Sweep {
        max_n,
        scope: scope.to_string(),
    };
    let words_scope = "all words over full-support M";

    let mut out = vec![
        check_each(
            "MAJ(w) = INV(foata(w))",
            dom(words_scope),
            &words,
            Box::new(|w| {
                let img = bijections::foata(w);
                let (a, b) = (stats::maj(w), stats::inv(&img));
                (a != b).then(|| {
                    vals(&[
                        ("MAJ", a.to_string()),
                        ("INV o F", b.to_string()),
                        ("image", img.to_string()),
                    ])
                })
            }),
        ),
        check_each(
            "MAJ_d(w) = INV(foata_d(w)) for d <= n",
            dom(words_scope),
            &words,
            Box::new(|w| {
                (1..=w.len()).find_map(|d| {
                    let img = bijections::foata_d(w, d).expect("d >= 1");
                    let (a, b) = (stats::maj_d(w, d).expect("d >= 1"), stats::inv(&img));
                    (a != b).then(|| {
                        vals(&[
                            ("d", d.to_string()),
                            ("MAJ_d", a.to_string()),
                            ("INV o F_d", b.to_string()),
                        ])
                    })
                })
            }),
        ),
        check_each(
            "MAJ(w) = Z(han_z(w))",
            dom(words_scope),
            &words,
            Box::new(|w| {
                let img = bijections::han_z(w);
                let (a, b) = (stats::maj(w), stats::z_index(&img));
                (a != b).then(|| vals(&[("MAJ", a.to_string()), ("Z o H_Z", b.to_string())]))
            }),
        ),
        check_each(
            "(mstc, INV)(w) = (des, MAJ)(psi_m(w))",
            dom(words_scope),
            &words,
            Box::new(|w| {
                let img = bijections::psi_m(w);
                let a = (stats::mstc(w), stats::inv(w));
                let d = stats::descents(&img);
                let b = (d.des, d.maj);
                (a != b).then(|| {
                    vals(&[
                        ("(mstc,INV)", format!("{a:?}")),
                        ("(des,MAJ) o Psi_M", format!("{b:?}")),
                    ])
                })
            }),
        ),
        check_each(
            "(exc, DEN)(w) = (des, MAJ)(han_den(w))",
            dom(words_scope),
            &words,
            Box::new(|w| {
                let (img, _) = bijections::han_den(w);
                let e = stats::exc_den(w);
                let d = stats::descents(&img);
                let (a, b) = ((e.exc, e.den), (d.des, d.maj));
                (a != b).then(|| {
                    vals(&[
                        ("(exc,DEN)", format!("{a:?}")),
                        ("(des,MAJ) o H_DEN", format!("{b:?}")),
                    ])
                })
            }),
        ),
        check_each(
            "(des, MAK, MAD)(w) = (exc, DEN, INV)(csz_phi(w))",
            dom(words_scope),
            &words,
            Box::new(|w| {
                let img = bijections::csz_phi(w);
                let m = mak_mad(w);
                let e = stats::exc_den(&img);
                let (a, b) = ((m.des, m.mak, m.mad), (e.exc, e.den, stats::inv(&img)));
                (a != b).then(|| {
                    vals(&[
                        ("(des,MAK,MAD)", format!("{a:?}")),
                        ("(exc,DEN,INV) o Phi", format!("{b:?}")),
                    ])
                })
            }),
        ),
        check_each(
            "INV(w) = r-MAJ(rawlings(w, r)) for r <= n",
            dom(words_scope),
            &words,
            Box::new(|w| {
                (1..=w.len()).find_map(|r| {
                    let img = bijections::rawlings(w, r).expect("r >= 1");
                    let (a, b) = (stats::inv(w), stats::r_maj(&img, r).expect("r >= 1"));
                    (a != b).then(|| {
                        vals(&[
                            ("r", r.to_string()),
                            ("INV", a.to_string()),
                            ("r-MAJ o R", b.to_string()),
                        ])
                    })
                })
            }),
        ),
        check_each(
            "(eul(I(p)), INV(p)) = (des, MAJ)(carlitz_psi(p))",
            dom("permutations"),
            &perms,
            Box::new(|p| {
                let img = bijections::carlitz_psi(p).expect("permutation");
                let code = lehmer_code(p).expect("permutation");
                let a = (stats::eul(&code), stats::inv(p));
                let d = stats::descents(&img);
                let b = (d.des, d.maj);
                (a != b).then(|| {
                    vals(&[
                        ("(eul o I,INV)", format!("{a:?}")),
                        ("(des,MAJ) o Psi", format!("{b:?}")),
                    ])
                })
            }),
        ),
    ];
    out.shrink_to_fit();
    out
}

/// All words of length `1..=max_n` over `[m]`, any content.
fn words_over(max_n: usize, m: Letter) -> Vec<Word> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut cur = vec![1; n];
        loop {
            out.push(Word::from_vec(cur.clone()));
            let Some(i) = cur.iter().rposition(|&x| x < m) else {
                break;
            };
            cur[i] += 1;
            for x in &mut cur[i + 1..] {
                *x = 1;
            }
        }
    }
    out
}

fn last_in(w: &[Letter], a: &[Letter]) -> Option<Letter> {
    w.iter().rev().copied().find(|x| a.contains(x))
}

/// Nonempty subsets of `lo..=hi`, as sorted vectors.
fn subsets(lo: Letter, hi: Letter) -> Vec<Vec<Letter>> {
    if hi < lo {
        return Vec::new();
    }
    let span = (hi - lo + 1) as usize;
    (1u32..1 << span)
        .map(|mask| {
            (0..span)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| lo + b as Letter)
                .collect()
        })
        .collect()
}

/// The three properties of `theta_{(m-2)!}` and `phi_x` used to show that
/// Han's map keeps consecutive tails, on all words of length `<= max_n`
/// over `[m]` for `2 <= m <= max_m`:
///
/// * if `w_i = m` then `c_i = m`, otherwise `c_i + 1` lies in
///   `{w_{i-1}, ..., w_n, m}` (with `w_0 = m`), where `c = theta_{(m-2)!}(w)`;
/// * `Last_{A-1}(c) = Last_A(w) - 1` for `A` inside `[2, m-1]` meeting `w`;
/// * `Last_A(phi_x(w)) = Last_A(w)` for `A` inside `[1, x-1]` meeting `w`.
pub fn lemma_suite_han_z(max_n: usize, max_m: Letter) -> Vec<VerificationReport> {
    let mut cells: Vec<(Letter, Vec<Word>)> = Vec::new();
    for m in 2..=max_m {
        cells.push((m, words_over(max_n, m)));
    }
    let dom = |m: Letter| DomainDescriptor::Sweep {
        max_n,
        scope: format!("all words over [{m}]"),
    };
    let mut out = Vec::new();
    for (m, words) in &cells {
        let m = *m;
        out.push(check_each(
            "theta_(m-2)! moves each letter to a letter of its suffix minus one",
            dom(m),
            words,
            Box::new(move |w| {
                let c = bijections::theta_factorial(w, m - 2);
                (0..w.len()).find_map(|i| {
                    let ok = if w[i] == m {
                        c[i] == m
                    } else {
                        let prev = if i == 0 { m } else { w[i - 1] };
                        let target = c[i] + 1;
                        prev == target || target == m || w[i..].contains(&target)
                    };
                    (!ok)
                        .then(|| vals(&[("i", (i + 1).to_string()), ("theta", format_letters(&c))]))
                })
            }),
        ));
        out.push(check_each(
            "Last_(A-1)(theta_(m-2)!(w)) = Last_A(w) - 1",
            dom(m),
            words,
            Box::new(move |w| {
                let c = bijections::theta_factorial(w, m - 2);
                subsets(2, m - 1).into_iter().find_map(|a| {
                    let la = last_in(w, &a)?;
                    let shifted: Vec<Letter> = a.iter().map(|x| x - 1).collect();
                    let lc = last_in(&c, &shifted);
                    (lc != Some(la - 1)).then(|| {
                        vals(&[
                            ("A", format!("{a:?}")),
                            ("theta", format_letters(&c)),
                            ("Last", format!("{lc:?}")),
                        ])
                    })
                })
            }),
        ));
        out.push(check_each(
            "Last_A(phi_x(w)) = Last_A(w) for max A < x",
            dom(m),
            words,
            Box::new(move |w| {
                (2..=m).find_map(|x| {
                    let p = bijections::phi(w, x, m).expect("letters in [m]");
                    subsets(1, x - 1).into_iter().find_map(|a| {
                        let la = last_in(w, &a)?;
                        let lp = last_in(&p, &a);
                        (lp != Some(la)).then(|| {
                            vals(&[
                                ("x", x.to_string()),
                                ("A", format!("{a:?}")),
                                ("phi", format_letters(&p)),
                            ])
                        })
                    })
                })
            }),
        ));
    }
    out
}

/// Properties of the Carlitz insertion map behind `psi_m`:
///
/// * if `c_i >= c_{i+1} >= ... >= c_{i+s}` in `I(p)`, then `i + s` is not
///   immediately followed by `i` in `carlitz_psi(p)` (checked on all
///   permutations of size `<= max_n`; `s = 1` is the first case);
/// * `Des(istd_M(Psi(std w))) = Des(Psi(std w))` on all words over
///   full-support multisets of size `<= max_n`.
pub fn lemma_suite_psi(max_n: usize) -> Vec<VerificationReport> {
    let perms: Vec<Word> = (1..=max_n)
        .flat_map(permutations_of)
        .map(Permutation::into_word)
        .collect();
    let words = all_full_support_words(max_n);
    let adjacent = |s_max: Option<usize>| -> WordCheck {
        Box::new(move |p: &Word| {
            let code = lehmer_code(p).expect("permutation");
            let c = code.entries();
            let img = bijections::carlitz_psi(p).expect("permutation");
            let n = p.len();
            let mut pos = vec![0usize; n + 1];
            for (k, &x) in img.iter().enumerate() {
                pos[x as usize] = k;
            }
            for i in 1..n {
                let mut s = 1;
                while i + s <= n && c[i + s - 2] >= c[i + s - 1] {
                    if s_max.is_none_or(|mx| s <= mx) && pos[i + s] + 1 == pos[i] {
                        return Some(vals(&[
                            ("i", i.to_string()),
                            ("s", s.to_string()),
                            ("code", code.to_string()),
                            ("Psi", img.to_string()),
                        ]));
                    }
                    s += 1;
                }
            }
            None
        })
    };
    let dom = |scope: &str| DomainDescriptor::Sweep {
        max_n,
        scope: scope.to_string(),
    };
    vec![
        check_each(
            "c_i >= c_(i+1) => i+1 is not immediately followed by i in Psi(p)",
            dom("permutations"),
            &perms,
            adjacent(Some(1)),
        ),
        check_each(
            "c_i >= ... >= c_(i+s) => i+s is not immediately followed by i in Psi(p)",
            dom("permutations"),
            &perms,
            adjacent(None),
        ),
        check_each(
            "Des(istd_M(Psi(std w))) = Des(Psi(std w))",
            dom("all words over full-support M"),
            &words,
            Box::new(|w| {
                let p = bijections::carlitz_psi(&words::std(w)).expect("permutation");
                let img = words::istd(&w.content(), &p).expect("same size");
                let (a, b) = (stats::descent_set(&img), stats::descent_set(&p));
                (a != b).then(|| vals(&[("Psi(std w)", p.to_string()), ("istd", img.to_string())]))
            }),
        ),
    ]
}
