//! Foata's second fundamental transformation and its `d`-extension.

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// The jump operator `J_x`.
///
/// Letters on the same side of `x` as the last letter of `w` (both `<= x`
/// or both `> x`) are the jumping letters. Cutting `w` after each jumping
/// letter gives factors `u_i b_i`; each is rotated to `b_i u_i`.
pub fn jump(w: &[Letter], x: Letter) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    jump_into(w, x, &mut out);
    out
}

fn jump_into(w: &[Letter], x: Letter, out: &mut Vec<Letter>) {
    let Some(&last) = w.last() else {
        return;
    };
    let high = last > x;
    let mut start = 0;
    for (i, &b) in w.iter().enumerate() {
        if (b > x) == high {
            out.push(b);
            out.extend_from_slice(&w[start..i]);
            start = i + 1;
        }
    }
    debug_assert_eq!(start, w.len());
}

/// Foata's bijection: `maj(w) = inv(foata(w))`.
pub fn foata(w: &[Letter]) -> Word {
    foata_d_unchecked(w, 1)
}

/// The `d`-extension of Foata's bijection: `MAJ_d(w) = inv(foata_d(w, d))`.
///
/// The first `d` letters are copied; afterwards only the prefix that leaves
/// the last `d - 1` letters untouched goes through the jump operator.
pub fn foata_d(w: &[Letter], d: usize) -> Result<Word> {
    if d == 0 {
        return Err(Error::Parameter("d must be at least 1".into()));
    }
    Ok(foata_d_unchecked(w, d))
}

fn foata_d_unchecked(w: &[Letter], d: usize) -> Word {
    let n = w.len();
    let mut gamma: Vec<Letter> = w[..n.min(d)].to_vec();
    let mut next = Vec::with_capacity(n);
    for &x in w.iter().skip(d) {
        let split = gamma.len() + 1 - d;
        next.clear();
        jump_into(&gamma[..split], x, &mut next);
        next.extend_from_slice(&gamma[split..]);
        next.push(x);
        std::mem::swap(&mut gamma, &mut next);
    }
    Word::from_vec(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{inv, maj, maj_d};
    use crate::words::format_letters;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn jump_examples() {
        assert_eq!(format_letters(&jump(&w("21"), 1)), "12");
        assert_eq!(format_letters(&jump(&w("1213"), 2)), "3121");
        assert_eq!(format_letters(&jump(&w("31212"), 3)), "31212");
        assert_eq!(format_letters(&jump(&w("2"), 1)), "2");
        assert!(jump(&[], 3).is_empty());
    }

    #[test]
    fn jump_inversion_shift() {
        for m in (1..=6).flat_map(crate::words::Multiset::compositions) {
            for word in crate::words::enumerate_words(&m) {
                for x in 1..=m.num_letters() as Letter {
                    let mut j = jump(&word, x);
                    j.push(x);
                    let shift = if *word.last().unwrap() > x {
                        word.len() as u64
                    } else {
                        0
                    };
                    assert_eq!(inv(&j), inv(&word) + shift);
                }
            }
        }
    }

    #[test]
    fn foata_examples() {
        assert_eq!(foata(&w("211323")).to_string(), "312123");
        assert_eq!(foata(&w("112233")).to_string(), "112233");
        assert_eq!(foata(&w("21")).to_string(), "21");
        assert_eq!(foata(&[]).to_string(), "");
    }

    #[test]
    fn foata_d_examples() {
        assert_eq!(foata_d(&w("213123"), 2).unwrap().to_string(), "312123");
        assert_eq!(maj_d(&w("213123"), 2).unwrap(), 5);
        assert!(matches!(foata_d(&w("21"), 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn foata_d_degenerate_cases() {
        for m in (1..=6).flat_map(crate::words::Multiset::compositions) {
            for word in crate::words::enumerate_words(&m) {
                let n = word.len();
                assert_eq!(foata_d(&word, 1).unwrap(), foata(&word));
                assert_eq!(foata_d(&word, n).unwrap(), word);
                assert_eq!(inv(&foata(&word)), maj(&word));
            }
        }
    }
}
