//! Word statistics: inversions, descents and the major index family,
//! the z-index, Denert's statistic, the Lehmer-code route to `mstc`, and
//! the descent-block statistics MAK and MAD.
//!
//! Every statistic is zero on the empty word. Position sets are 1-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{self, two_line, Letter};

/// Number of pairs `i < j` with `w_i > w_j`.
pub fn inv(w: &[Letter]) -> u64 {
    let mut count = 0;
    for (i, &a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|&&b| a > b).count() as u64;
    }
    count
}

/// Weak inversions: pairs `i < j` with `w_i >= w_j`.
pub fn imv(w: &[Letter]) -> u64 {
    let mut count = 0;
    for (i, &a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|&&b| a >= b).count() as u64;
    }
    count
}

/// 1-based descent positions `i` with `w_i > w_{i+1}`.
pub fn descent_set(w: &[Letter]) -> Vec<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Descent set together with `des` and `maj`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descents {
    pub set: Vec<usize>,
    pub des: u64,
    pub maj: u64,
}

pub fn descents(w: &[Letter]) -> Descents {
    let set = descent_set(w);
    Descents {
        des: set.len() as u64,
        maj: set.iter().map(|&i| i as u64).sum(),
        set,
    }
}

pub fn des(w: &[Letter]) -> u64 {
    w.windows(2).filter(|p| p[0] > p[1]).count() as u64
}

pub fn maj(w: &[Letter]) -> u64 {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Parameter(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `MAJ_d`: inversions at distance less than `d` plus the positions `i`
/// with `w_i > w_{i+d}`.
pub fn maj_d(w: &[Letter], d: usize) -> Result<u64> {
    require_positive("d", d)?;
    let n = w.len();
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n.min(i + d) {
            if w[i] > w[j] {
                total += 1;
            }
        }
        if i + d < n && w[i] > w[i + d] {
            total += i as u64 + 1;
        }
    }
    Ok(total)
}

/// Sum over letter pairs `a < b` of the major index of the subword on `{a, b}`.
pub fn z_index(w: &[Letter]) -> u64 {
    let m = w.iter().copied().max().unwrap_or(0);
    let mut total = 0;
    let mut sub = Vec::with_capacity(w.len());
    for a in 1..=m {
        for b in a + 1..=m {
            sub.clear();
            sub.extend(w.iter().copied().filter(|&x| x == a || x == b));
            total += maj(&sub);
        }
    }
    total
}

/// `r`-descent positions: `w_i >= w_{i+1} + r`.
pub fn r_descent_set(w: &[Letter], r: usize) -> Vec<usize> {
    let r = r as u64;
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] as u64 >= p[1] as u64 + r)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Number of `r`-inversions: pairs `i < j` with `w_i - r < w_j < w_i`.
pub fn r_inv_count(w: &[Letter], r: usize) -> u64 {
    let r = r as i64;
    let mut count = 0;
    for (i, &a) in w.iter().enumerate() {
        let a = a as i64;
        count += w[i + 1..]
            .iter()
            .filter(|&&b| a - r < b as i64 && (b as i64) < a)
            .count() as u64;
    }
    count
}

/// Rawlings' `r`-major index.
pub fn r_maj(w: &[Letter], r: usize) -> Result<u64> {
    require_positive("r", r)?;
    let des_sum: u64 = r_descent_set(w, r).iter().map(|&i| i as u64).sum();
    Ok(r_inv_count(w, r) + des_sum)
}

/// Excedance count and Denert's statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExcDen {
    pub exc: u64,
    pub den: u64,
}

/// Excedance tops and the remaining letters, each in word order.
pub fn excedance_split(w: &[Letter]) -> (Vec<usize>, Vec<Letter>, Vec<Letter>) {
    let bw = two_line(w);
    let mut places = Vec::new();
    let mut tops = Vec::new();
    let mut rest = Vec::new();
    for (i, (&a, &x)) in bw.top().iter().zip(bw.bottom()).enumerate() {
        if x > a {
            places.push(i + 1);
            tops.push(x);
        } else {
            rest.push(x);
        }
    }
    (places, tops, rest)
}

pub fn exc_den(w: &[Letter]) -> ExcDen {
    let (places, tops, rest) = excedance_split(w);
    let place_sum: u64 = places.iter().map(|&i| i as u64).sum();
    ExcDen {
        exc: places.len() as u64,
        den: place_sum + imv(&tops) + inv(&rest),
    }
}

/// Inversion table of a permutation: entry `i` counts the letters `j < i`
/// standing to the right of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LehmerCode(Vec<u32>);

impl LehmerCode {
    /// Checks `0 <= c_i <= i - 1`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        for (i, &c) in entries.iter().enumerate() {
            if c as usize > i {
                return Err(Error::Domain(format!(
                    "code entry c_{} = {c} exceeds {i}",
                    i + 1
                )));
            }
        }
        Ok(LehmerCode(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn lehmer_code(p: &[Letter]) -> Result<LehmerCode> {
    if !words::is_permutation(p) {
        return Err(Error::Domain(format!(
            "{} is not a permutation",
            words::format_letters(p)
        )));
    }
    Ok(lehmer_code_unchecked(p))
}

pub(crate) fn lehmer_code_unchecked(p: &[Letter]) -> LehmerCode {
    let mut code = vec![0u32; p.len()];
    for (pos, &x) in p.iter().enumerate() {
        code[x as usize - 1] = p[pos + 1..].iter().filter(|&&y| y < x).count() as u32;
    }
    LehmerCode(code)
}

/// The Eulerian statistic on inversion tables: walk the entries, bumping a
/// running value whenever an entry exceeds it.
pub fn eul(code: &LehmerCode) -> u64 {
    let mut value = 0u64;
    for &c in code.0.iter().skip(1) {
        if c as u64 > value {
            value += 1;
        }
    }
    value
}

/// `eul` of the inversion table of the standardization.
pub fn mstc(w: &[Letter]) -> u64 {
    eul(&lehmer_code_unchecked(&words::std(w)))
}

/// A maximal strictly decreasing factor of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescentBlock {
    /// 1-based first position.
    pub start: usize,
    /// 1-based last position, inclusive.
    pub end: usize,
    /// Leftmost letter.
    pub closer: Letter,
    /// Rightmost letter.
    pub opener: Letter,
    /// Length at least two.
    pub proper: bool,
}

impl DescentBlock {
    /// `closer >= a > opener`; outsiders embrace nothing.
    pub fn embraces(&self, a: Letter) -> bool {
        self.proper && self.closer >= a && a > self.opener
    }
}

/// Cut `w` wherever `w_i <= w_{i+1}`.
pub fn descent_blocks(w: &[Letter]) -> Vec<DescentBlock> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..w.len() {
        if i + 1 == w.len() || w[i] <= w[i + 1] {
            blocks.push(DescentBlock {
                start: start + 1,
                end: i + 1,
                closer: w[start],
                opener: w[i],
                proper: i > start,
            });
            start = i + 1;
        }
    }
    blocks
}

/// `e_i`: proper descent blocks lying wholly to the right of position `i`
/// that embrace `w_i`.
pub fn right_embracing_numbers(w: &[Letter]) -> Vec<u64> {
    let blocks = descent_blocks(w);
    w.iter()
        .enumerate()
        .map(|(i, &a)| {
            blocks
                .iter()
                .filter(|b| b.start > i + 1 && b.embraces(a))
                .count() as u64
        })
        .collect()
}

/// `h(a)`: one more than the number of letters of `w` smaller than `a`.
pub fn heights(w: &[Letter]) -> Vec<u64> {
    w.iter()
        .map(|&a| 1 + w.iter().filter(|&&b| b < a).count() as u64)
        .collect()
}

/// `v_i = h(w_i) + l(i)`, where `l(i)` counts equal letters to the left.
/// Coincides with the standardization of `w`.
pub fn values(w: &[Letter]) -> Vec<u64> {
    let h = heights(w);
    w.iter()
        .enumerate()
        .map(|(i, &a)| h[i] + w[..i].iter().filter(|&&b| b == a).count() as u64)
        .collect()
}

/// `(des, MAK, MAD)` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MakMad {
    pub des: u64,
    pub mak: u64,
    pub mad: u64,
}

pub fn mak_mad(w: &[Letter]) -> MakMad {
    let h = heights(w);
    let v = values(w);
    let mut dtop = 0i64;
    let mut dbot = 0i64;
    let mut des = 0;
    for i in 0..w.len().saturating_sub(1) {
        if w[i] > w[i + 1] {
            des += 1;
            dtop += h[i] as i64;
            dbot += v[i + 1] as i64;
        }
    }
    let res: i64 = right_embracing_numbers(w).iter().sum::<u64>() as i64;
    let mad = dtop - dbot + res;
    debug_assert!(mad >= 0);
    MakMad {
        des,
        mak: (dbot + res) as u64,
        mad: mad as u64,
    }
}

pub fn mak(w: &[Letter]) -> u64 {
    mak_mad(w).mak
}

pub fn mad(w: &[Letter]) -> u64 {
    mak_mad(w).mad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_words, Multiset, Word};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn all_words(max_n: usize) -> impl Iterator<Item = Word> {
        (0..=max_n)
            .flat_map(Multiset::compositions)
            .flat_map(|m| enumerate_words(&m).collect::<Vec<_>>())
    }

    #[test]
    fn inversions() {
        assert_eq!(inv(&w("321123")), 6);
        assert_eq!(inv(&w("112233")), 0);
        assert_eq!(inv(&w("131223")), 3);
        assert_eq!(imv(&w("5344")), 4);
        assert_eq!(inv(&[]), 0);
    }

    #[test]
    fn descent_statistics() {
        let d = descents(&w("121323"));
        assert_eq!(d.set, vec![2, 4]);
        assert_eq!((d.des, d.maj), (2, 6));
        let d = descents(&w("112233"));
        assert!(d.set.is_empty());
        assert_eq!((d.des, d.maj), (0, 0));
        assert_eq!(maj(&w("211323")), 5);
    }

    #[test]
    fn maj_d_values() {
        assert_eq!(maj_d(&w("123123"), 2).unwrap(), 6);
        assert_eq!(maj_d(&w("113223"), 2).unwrap(), 4);
        assert_eq!(maj_d(&w("213123"), 2).unwrap(), 5);
        assert!(matches!(maj_d(&w("12"), 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn maj_d_interpolates() {
        for word in all_words(7) {
            let n = word.len();
            assert_eq!(maj_d(&word, 1).unwrap(), maj(&word));
            for d in n.max(1)..=n + 2 {
                assert_eq!(maj_d(&word, d).unwrap(), inv(&word), "{word} d={d}");
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_index(&w("312432314")), 18);
        assert_eq!(z_index(&w("121323")), 4);
        assert_eq!(z_index(&w("1122334")), 0);
    }

    #[test]
    fn r_maj_values() {
        assert_eq!(r_maj(&w("213123"), 2).unwrap(), 6);
        assert_eq!(r_maj(&w("132123"), 2).unwrap(), 3);
        assert!(matches!(r_maj(&w("12"), 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn r_maj_interpolates() {
        for word in all_words(7) {
            let n = word.len();
            assert_eq!(r_maj(&word, 1).unwrap(), maj(&word));
            for r in n.max(1)..=n + 2 {
                assert_eq!(r_maj(&word, r).unwrap(), inv(&word), "{word} r={r}");
            }
        }
    }

    #[test]
    fn denert() {
        let word = w("5311244323");
        let (_, tops, rest) = excedance_split(&word);
        assert_eq!(words::format_letters(&tops), "5344");
        assert_eq!(words::format_letters(&rest), "112323");
        assert_eq!(exc_den(&word).den, 21);
        assert_eq!(exc_den(&w("124324")), ExcDen { exc: 1, den: 4 });
        assert_eq!(exc_den(&w("1123")), ExcDen { exc: 0, den: 0 });
        let (_, tops, rest) = excedance_split(&w("121442314"));
        assert_eq!(words::format_letters(&tops), "244");
        assert_eq!(words::format_letters(&rest), "112314");
    }

    #[test]
    fn excedance_bounds() {
        for word in all_words(7).filter(|w| !w.is_empty()) {
            let ed = exc_den(&word);
            assert!(ed.exc < word.len() as u64);
            assert!(ed.den >= ed.exc);
        }
    }

    #[test]
    fn lehmer_codes() {
        let c = lehmer_code(&w("64125378")).unwrap();
        assert_eq!(c.entries(), &[0, 0, 0, 3, 1, 5, 0, 0]);
        assert_eq!(c.sum(), 9);
        assert_eq!(
            lehmer_code(&w("315246")).unwrap().entries(),
            &[0, 0, 2, 0, 2, 0]
        );
        assert_eq!(lehmer_code(&w("1234")).unwrap().entries(), &[0, 0, 0, 0]);
        assert!(matches!(lehmer_code(&w("1224")), Err(Error::Domain(_))));
    }

    #[test]
    fn lehmer_sum_is_inv() {
        for n in 0..=7 {
            for p in words::permutations_of(n) {
                assert_eq!(lehmer_code(&p).unwrap().sum(), inv(&p));
            }
        }
    }

    #[test]
    fn eulerian_walk() {
        assert_eq!(eul(&LehmerCode::new(vec![0]).unwrap()), 0);
        assert_eq!(eul(&LehmerCode::new(vec![0, 1, 2, 3, 4]).unwrap()), 4);
        assert_eq!(eul(&LehmerCode::new(vec![0, 0, 2, 0, 2, 0]).unwrap()), 2);
        assert!(matches!(LehmerCode::new(vec![0, 2]), Err(Error::Domain(_))));
    }

    #[test]
    fn mstc_values() {
        assert_eq!(mstc(&w("112233")), 0);
        assert_eq!(mstc(&w("1212")), 1);
        assert_eq!(mstc(&w("2112")), 1);
        assert_eq!(mstc(&w("213123")), 2);
    }

    #[test]
    fn blocks() {
        let b = descent_blocks(&w("213123"));
        let shape: Vec<_> = b.iter().map(|b| (b.start, b.end, b.proper)).collect();
        assert_eq!(
            shape,
            vec![(1, 2, true), (3, 4, true), (5, 5, false), (6, 6, false)]
        );
        assert_eq!((b[1].closer, b[1].opener), (3, 1));
        assert_eq!(
            right_embracing_numbers(&w("213123")),
            vec![1, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn heights_and_values() {
        let word = w("21144231");
        assert_eq!(heights(&word), vec![4, 1, 1, 7, 7, 4, 6, 1]);
        assert_eq!(values(&word), vec![4, 1, 2, 7, 8, 5, 6, 3]);
        for word in all_words(7) {
            let v: Vec<u32> = values(&word).iter().map(|&x| x as u32).collect();
            assert_eq!(v, words::std(&word).to_vec());
        }
    }

    #[test]
    fn mak_mad_values() {
        assert_eq!(mak_mad(&w("121323")).mak, 6);
        assert_eq!(mak_mad(&w("213123")).mad, 6);
        assert_eq!(mak_mad(&w("213123")).mak, 4);
        assert_eq!(
            mak_mad(&w("112233")),
            MakMad {
                des: 0,
                mak: 0,
                mad: 0
            }
        );
        assert_eq!(
            mak_mad(&[]),
            MakMad {
                des: 0,
                mak: 0,
                mad: 0
            }
        );
    }
}
