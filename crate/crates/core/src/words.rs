//! Letters, multisets, words and permutations.
//!
//! Letters are positive integers. Documentation refers to positions
//! 1-based, as in the usual combinatorial notation: position `i` of a word
//! is the slice element at index `i - 1`. Every public function that
//! returns a position set (descents, excedances, ...) returns 1-based
//! positions.
//!
//! Enumeration order is part of the API: [`enumerate_words`] and
//! [`enumerate_with_tail`] yield words in lexicographic order.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of a word.
pub type Letter = u32;

/// Multiplicity vector `(k_1, ..., k_m)`: `k_i` copies of letter `i`.
///
/// Zero multiplicities are allowed; theorem-level entry points check
/// [`Multiset::has_full_support`] themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multiset {
    mults: Vec<usize>,
}

impl Multiset {
    pub fn new(mults: Vec<usize>) -> Self {
        Multiset { mults }
    }

    /// `{1^1, 2^1, ..., n^1}`.
    pub fn permutation(n: usize) -> Self {
        Multiset { mults: vec![1; n] }
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Number of letters `m` in the alphabet `[m]`.
    pub fn num_letters(&self) -> usize {
        self.mults.len()
    }

    /// `n = k_1 + ... + k_m`.
    pub fn size(&self) -> usize {
        self.mults.iter().sum()
    }

    pub fn has_full_support(&self) -> bool {
        self.mults.iter().all(|&k| k >= 1)
    }

    pub fn require_full_support(&self) -> Result<()> {
        if self.has_full_support() {
            Ok(())
        } else {
            Err(Error::MalformedMultiset(format!(
                "multiplicities {self} contain a zero"
            )))
        }
    }

    /// Letter content of a word, over the alphabet `[max letter]`.
    pub fn content_of(w: &[Letter]) -> Self {
        let m = w.iter().copied().max().unwrap_or(0) as usize;
        let mut mults = vec![0; m];
        for &x in w {
            mults[x as usize - 1] += 1;
        }
        Multiset { mults }
    }

    /// The nondecreasing word `1^{k_1} 2^{k_2} ... m^{k_m}`.
    pub fn sorted_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        for (i, &k) in self.mults.iter().enumerate() {
            letters.extend(std::iter::repeat_n(i as Letter + 1, k));
        }
        Word(letters)
    }

    /// `n! / (k_1! ... k_m!)`, the number of words with this content.
    pub fn multinomial(&self) -> u128 {
        let mut total = 0u128;
        let mut acc = 1u128;
        for &k in &self.mults {
            for j in 1..=k as u128 {
                total += 1;
                acc = acc * total / j;
            }
        }
        acc
    }

    /// All full-support multisets of size `n`, i.e. the compositions of `n`,
    /// in lexicographic order of their multiplicity vectors.
    pub fn compositions(n: usize) -> Vec<Multiset> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Multiset>) {
            if rest == 0 {
                out.push(Multiset::new(prefix.clone()));
                return;
            }
            for k in 1..=rest {
                prefix.push(k);
                rec(rest - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mults.iter().map(|k| k.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Multiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Multiset::default());
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Multiset::new)
    }
}

/// A finite word over positive-integer letters.
///
/// Text form: a digit string such as `331322112441` when every letter is at
/// most 9, otherwise comma-separated integers. A one-letter word whose letter
/// exceeds 9 is written with a trailing comma (`12,`) so that it parses back.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Domain("letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    /// Caller guarantees every letter is positive.
    pub(crate) fn from_vec(letters: Vec<Letter>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    pub fn content(&self) -> Multiset {
        Multiset::content_of(&self.0)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl TryFrom<Vec<Letter>> for Word {
    type Error = Error;

    fn try_from(v: Vec<Letter>) -> Result<Self> {
        Word::new(v)
    }
}

/// Renders a letter sequence in the word text form.
pub fn format_letters(w: &[Letter]) -> String {
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| char::from(b'0' + *x as u8)).collect()
    } else if w.len() == 1 {
        format!("{},", w[0])
    } else {
        let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') {
            s.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<Letter>()
                        .map_err(|_| Error::Parse(format!("bad letter {p:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Error::Parse(format!("bad letter {c:?} in {s:?}"))),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word using each of `1..=n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if !is_permutation(&letters) {
            return Err(Error::Domain(format!(
                "{} is not a permutation",
                format_letters(&letters)
            )));
        }
        Ok(Permutation(Word(letters)))
    }

    pub(crate) fn from_vec(letters: Vec<Letter>) -> Self {
        debug_assert!(is_permutation(&letters));
        Permutation(Word(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Word((1..=n as Letter).collect()))
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl Deref for Permutation {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w: Word = s.parse()?;
        Permutation::new(w.into_vec())
    }
}

impl TryFrom<Word> for Permutation {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        Permutation::new(w.into_vec())
    }
}

pub fn is_permutation(w: &[Letter]) -> bool {
    let n = w.len();
    let mut seen = vec![false; n];
    for &x in w {
        let x = x as usize;
        if x == 0 || x > n || seen[x - 1] {
            return false;
        }
        seen[x - 1] = true;
    }
    true
}

/// An ordered pair of equal-length words, written top over bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biword {
    top: Vec<Letter>,
    bottom: Vec<Letter>,
}

impl Biword {
    pub fn new(top: Vec<Letter>, bottom: Vec<Letter>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Dimension {
                expected: top.len(),
                found: bottom.len(),
            });
        }
        Ok(Biword { top, bottom })
    }

    pub fn top(&self) -> &[Letter] {
        &self.top
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// True when the top row is the nondecreasing rearrangement of the bottom row.
    pub fn is_two_line(&self) -> bool {
        let mut sorted = self.bottom.clone();
        sorted.sort_unstable();
        sorted == self.top
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}|{})",
            format_letters(&self.top),
            format_letters(&self.bottom)
        )
    }
}

/// Two-line notation: the sorted rearrangement of `w` over `w` itself.
pub fn two_line(w: &[Letter]) -> Biword {
    let mut top = w.to_vec();
    top.sort_unstable();
    Biword {
        top,
        bottom: w.to_vec(),
    }
}

/// Subword of last occurrences of each letter.
///
/// Fails when the content of `w` skips a letter below its maximum.
pub fn tail_permutation(w: &[Letter]) -> Result<Permutation> {
    let content = Multiset::content_of(w);
    content.require_full_support()?;
    Ok(Permutation::from_vec(tail_letters(
        w,
        content.num_letters(),
    )))
}

/// Last-occurrence subword without the full-support check.
pub(crate) fn tail_letters(w: &[Letter], m: usize) -> Vec<Letter> {
    let mut seen = vec![false; m + 1];
    let mut rev = Vec::with_capacity(m);
    for &x in w.iter().rev() {
        if !seen[x as usize] {
            seen[x as usize] = true;
            rev.push(x);
        }
    }
    rev.reverse();
    rev
}

/// True when `w` has tail permutation `12...m` (every last occurrence in order).
pub fn has_increasing_tail(w: &[Letter]) -> bool {
    let m = w.iter().copied().max().unwrap_or(0) as usize;
    tail_letters(w, m)
        .iter()
        .enumerate()
        .all(|(i, &x)| x as usize == i + 1)
        && Multiset::content_of(w).has_full_support()
}

/// Every prefix of `p` is a set of consecutive integers.
pub fn is_consecutive(p: &[Letter]) -> bool {
    let Some(&first) = p.first() else {
        return true;
    };
    let (mut lo, mut hi) = (first, first);
    for (i, &x) in p.iter().enumerate().skip(1) {
        lo = lo.min(x);
        hi = hi.max(x);
        if (hi - lo) as usize != i {
            return false;
        }
    }
    true
}

/// All consecutive permutations of `[m]` in lexicographic order.
///
/// There are `2^(m-1)` of them for `m >= 1`.
pub fn consecutive_permutations(m: usize) -> Vec<Permutation> {
    if m == 0 {
        return vec![Permutation::identity(0)];
    }
    let mut out = Vec::new();
    for start in 1..=m as Letter {
        // grow the interval one step at a time, either downwards or upwards
        let mut stack = vec![(vec![start], start, start)];
        while let Some((p, lo, hi)) = stack.pop() {
            if p.len() == m {
                out.push(Permutation::from_vec(p));
                continue;
            }
            if (hi as usize) < m {
                let mut q = p.clone();
                q.push(hi + 1);
                stack.push((q, lo, hi + 1));
            }
            if lo > 1 {
                let mut q = p;
                q.push(lo - 1);
                stack.push((q, lo - 1, hi));
            }
        }
    }
    out.sort();
    out
}

/// Iterator over the rearrangements of a multiset in lexicographic order.
#[derive(Debug, Clone)]
pub struct Words {
    next: Option<Vec<Letter>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word(current))
    }
}

/// In-place lexicographic successor; returns false at the last arrangement.
fn next_permutation(v: &mut [Letter]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All words with content `m`, in lexicographic order.
///
/// The empty multiset yields the empty word once.
pub fn enumerate_words(m: &Multiset) -> Words {
    Words {
        next: Some(m.sorted_word().into_vec()),
    }
}

/// Words with content `m` and tail permutation `tail`, in lexicographic order.
///
/// With `tail = 12...m` this is the set of Mahonian words of type `m`.
pub fn enumerate_with_tail(m: &Multiset, tail: &Permutation) -> Result<impl Iterator<Item = Word>> {
    m.require_full_support()?;
    if tail.len() != m.num_letters() {
        return Err(Error::Dimension {
            expected: m.num_letters(),
            found: tail.len(),
        });
    }
    if !is_permutation(tail) {
        return Err(Error::Domain(format!("{tail} is not a permutation")));
    }
    let mut rank = vec![0; m.num_letters() + 1];
    for (r, &x) in tail.iter().enumerate() {
        rank[x as usize] = r;
    }
    let mut out = Vec::new();
    let mut left = m.mults().to_vec();
    let mut prefix = Vec::with_capacity(m.size());
    with_tail_rec(&mut left, &rank, tail, &mut prefix, &mut out);
    Ok(out.into_iter())
}

// Depth-first in lexicographic order. The last copy of a letter may be
// placed only once every letter before it in the tail is used up.
fn with_tail_rec(
    left: &mut [usize],
    rank: &[usize],
    tail: &[Letter],
    prefix: &mut Vec<Letter>,
    out: &mut Vec<Word>,
) {
    if left.iter().all(|&k| k == 0) {
        out.push(Word(prefix.clone()));
        return;
    }
    for j in 0..left.len() {
        if left[j] == 0 {
            continue;
        }
        let x = j as Letter + 1;
        if left[j] == 1
            && tail[..rank[x as usize]]
                .iter()
                .any(|&y| left[y as usize - 1] > 0)
        {
            continue;
        }
        left[j] -= 1;
        prefix.push(x);
        with_tail_rec(left, rank, tail, prefix, out);
        prefix.pop();
        left[j] += 1;
    }
}

/// Words with content `m` whose last occurrences appear in the order `1, 2, ..., m`.
pub fn enumerate_increasing_tail(m: &Multiset) -> Result<impl Iterator<Item = Word>> {
    enumerate_with_tail(m, &Permutation::identity(m.num_letters()))
}

/// Standardization: the permutation ordering positions by letter, ties left to right.
pub fn std(w: &[Letter]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut p = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        p[i] = rank as Letter + 1;
    }
    Permutation::from_vec(p)
}

/// Inverse standardization with respect to `m`: ranks `1..=k_1` become letter 1,
/// the next `k_2` ranks become letter 2, and so on.
pub fn istd(m: &Multiset, p: &[Letter]) -> Result<Word> {
    if p.len() != m.size() {
        return Err(Error::Dimension {
            expected: m.size(),
            found: p.len(),
        });
    }
    if !is_permutation(p) {
        return Err(Error::Domain(format!(
            "{} is not a permutation",
            format_letters(p)
        )));
    }
    let mut letter_of = Vec::with_capacity(p.len());
    for (i, &k) in m.mults().iter().enumerate() {
        letter_of.extend(std::iter::repeat_n(i as Letter + 1, k));
    }
    Ok(Word(p.iter().map(|&x| letter_of[x as usize - 1]).collect()))
}

/// All permutations of `[m]` in lexicographic order.
pub fn permutations_of(m: usize) -> Vec<Permutation> {
    enumerate_words(&Multiset::permutation(m))
        .map(|w| Permutation::from_vec(w.into_vec()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strings(it: impl Iterator<Item = Word>) -> Vec<String> {
        it.map(|w| w.to_string()).collect()
    }

    #[test]
    fn enumerates_two_by_two() {
        let m = Multiset::new(vec![2, 2]);
        assert_eq!(
            strings(enumerate_words(&m)),
            ["1122", "1212", "1221", "2112", "2121", "2211"]
        );
    }

    #[test]
    fn enumerates_singleton_and_empty() {
        assert_eq!(strings(enumerate_words(&Multiset::new(vec![1]))), ["1"]);
        assert_eq!(strings(enumerate_words(&Multiset::default())), [""]);
    }

    #[test]
    fn enumerates_2_1_1() {
        let all: Vec<_> = strings(enumerate_words(&Multiset::new(vec![2, 1, 1])));
        assert_eq!(all.len(), 12);
        assert_eq!(all.first().unwrap(), "1123");
        assert_eq!(all.last().unwrap(), "3211");
    }

    #[test]
    fn multinomial_matches_count() {
        for m in (0..=6).flat_map(Multiset::compositions) {
            assert_eq!(enumerate_words(&m).count() as u128, m.multinomial(), "{m}");
        }
    }

    #[test]
    fn tail_permutations() {
        assert_eq!(
            tail_permutation(&w("331322112441")).unwrap().to_string(),
            "3241"
        );
        assert_eq!(tail_permutation(&w("123")).unwrap().to_string(), "123");
        assert_eq!(tail_permutation(&w("2112")).unwrap().to_string(), "12");
        assert!(matches!(
            tail_permutation(&w("313")),
            Err(Error::MalformedMultiset(_))
        ));
    }

    #[test]
    fn consecutive() {
        assert!(is_consecutive(&w("54362718")));
        assert!(!is_consecutive(&w("54236718")));
        assert!(is_consecutive(&w("123456")));
        for m in 1..=7 {
            let all = consecutive_permutations(m);
            assert_eq!(all.len(), 1 << (m - 1));
            assert!(all.iter().all(|p| is_consecutive(p)));
        }
    }

    #[test]
    fn with_tail() {
        let m = Multiset::new(vec![2, 2]);
        let t21: Permutation = "21".parse().unwrap();
        let t12: Permutation = "12".parse().unwrap();
        assert_eq!(
            strings(enumerate_with_tail(&m, &t21).unwrap()),
            ["1221", "2121", "2211"]
        );
        assert_eq!(
            strings(enumerate_with_tail(&m, &t12).unwrap()),
            ["1122", "1212", "2112"]
        );
        assert_eq!(
            strings(enumerate_with_tail(&Multiset::new(vec![1, 1]), &t12).unwrap()),
            ["12"]
        );
        assert!(matches!(
            enumerate_with_tail(&m, &"123".parse().unwrap()).map(|_| ()),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn tails_partition_the_domain() {
        for n in 1..=7 {
            for m in Multiset::compositions(n) {
                let total: usize = crate::words::permutations_of(m.num_letters())
                    .iter()
                    .map(|t| enumerate_with_tail(&m, t).unwrap().count())
                    .sum();
                assert_eq!(total as u128, m.multinomial());
            }
        }
    }

    #[test]
    fn standardization() {
        assert_eq!(std(&w("32112133")).to_string(), "64125378");
        assert_eq!(std(&w("213123")).to_string(), "315246");
        assert_eq!(std(&w("4213")).to_string(), "4213");
        assert_eq!(std(&[]).len(), 0);
    }

    #[test]
    fn inverse_standardization() {
        let m = Multiset::new(vec![2, 2, 2]);
        assert_eq!(istd(&m, &w("513246")).unwrap().to_string(), "312123");
        assert_eq!(
            istd(&Multiset::new(vec![2, 2]), &w("3142"))
                .unwrap()
                .to_string(),
            "2121"
        );
        assert_eq!(
            istd(&Multiset::new(vec![4]), &w("3142"))
                .unwrap()
                .to_string(),
            "1111"
        );
        assert!(matches!(istd(&m, &w("123")), Err(Error::Dimension { .. })));
    }

    #[test]
    fn istd_inverts_std() {
        for n in 0..=7 {
            for m in Multiset::compositions(n) {
                for word in enumerate_words(&m) {
                    assert_eq!(istd(&m, &std(&word)).unwrap(), word);
                }
            }
        }
    }

    #[test]
    fn two_line_rows() {
        let b = two_line(&w("124324"));
        assert_eq!(format_letters(b.top()), "122344");
        assert_eq!(format_letters(b.bottom()), "124324");
        assert!(b.is_two_line());
        let b = two_line(&w("5311244323"));
        assert_eq!(format_letters(b.top()), "1122333445");
        let s = two_line(&w("1123"));
        assert_eq!(s.top(), s.bottom());
    }

    #[test]
    fn word_text_forms() {
        assert_eq!(w("331322112441").to_string(), "331322112441");
        let big = Word::new(vec![1, 12, 3]).unwrap();
        assert_eq!(big.to_string(), "1,12,3");
        assert_eq!(big.to_string().parse::<Word>().unwrap(), big);
        let single = Word::new(vec![12]).unwrap();
        assert_eq!(single.to_string().parse::<Word>().unwrap(), single);
        assert!("1203".parse::<Word>().is_err());
        assert!("12a".parse::<Word>().is_err());
        assert_eq!(
            "2,2,2".parse::<Multiset>().unwrap(),
            Multiset::new(vec![2, 2, 2])
        );
        assert_eq!(Multiset::new(vec![2, 2, 2]).to_string(), "2,2,2");
    }

    #[test]
    fn compositions_count() {
        for n in 1..=8 {
            assert_eq!(Multiset::compositions(n).len(), 1 << (n - 1));
        }
        assert_eq!(Multiset::compositions(0), vec![Multiset::default()]);
    }

    #[test]
    fn tail_generation_matches_filtering() {
        for n in 1..=6 {
            for m in Multiset::compositions(n) {
                let k = m.num_letters();
                for tau in permutations_of(k) {
                    let fast: Vec<Word> = enumerate_with_tail(&m, &tau).unwrap().collect();
                    let slow: Vec<Word> = enumerate_words(&m)
                        .filter(|w| tail_letters(w, k) == tau.to_vec())
                        .collect();
                    assert_eq!(fast, slow, "M={m} tau={tau}");
                }
            }
        }
    }
}
