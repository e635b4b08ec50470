//! Rawlings' bijection on words, carrying `inv` to `r-maj`.

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Labels of the insertion slots for one more copy of the top letter `m`.
///
/// Slot `s` means "before `v[s]`"; slot `v.len()` is the end. Slots directly
/// in front of an existing `m` are starred and get `None`. A slot creates a
/// new `r`-descent when `m` would sit on top of its right neighbor by at
/// least `r` while the pair it splits was not an `r`-descent already. Labels
/// `0, 1, ...` go first right to left over the slots that do not create one,
/// then left to right over those that do.
pub fn rawlings_labels(v: &[Letter], m: Letter, r: usize) -> Vec<Option<usize>> {
    let n = v.len();
    let r = r as u64;
    let is_r_descent = |a: Letter, b: Letter| a as u64 >= b as u64 + r;
    let creates =
        |s: usize| s < n && is_r_descent(m, v[s]) && !(s > 0 && is_r_descent(v[s - 1], v[s]));
    let mut labels = vec![None; n + 1];
    let mut next = 0;
    for s in (0..=n).rev() {
        if (s == n || v[s] != m) && !creates(s) {
            labels[s] = Some(next);
            next += 1;
        }
    }
    for (s, label) in labels.iter_mut().enumerate() {
        if (s == n || v[s] != m) && creates(s) {
            *label = Some(next);
            next += 1;
        }
    }
    labels
}

/// Rawlings' bijection: `inv(w) = r_maj(rawlings(w, r), r)`.
///
/// Recursive on the largest letter `m`: the word without its `m`s is mapped
/// first, then the `j`-th `m` of `w` is inserted at the slot labeled by the
/// number of smaller letters to its right in `w`.
pub fn rawlings(w: &[Letter], r: usize) -> Result<Word> {
    if r == 0 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    Ok(Word::from_vec(rawlings_unchecked(w, r)))
}

fn rawlings_unchecked(w: &[Letter], r: usize) -> Vec<Letter> {
    let Some(&m) = w.iter().max() else {
        return Vec::new();
    };
    let rest: Vec<Letter> = w.iter().copied().filter(|&x| x != m).collect();
    let mut cur = rawlings_unchecked(&rest, r);
    let mut smaller_right = Vec::new();
    let mut below = 0usize;
    for &x in w.iter().rev() {
        if x == m {
            smaller_right.push(below);
        } else {
            below += 1;
        }
    }
    smaller_right.reverse();
    for u in smaller_right {
        let slot = rawlings_labels(&cur, m, r)
            .iter()
            .position(|&l| l == Some(u))
            .expect("u(m) is at most the number of smaller letters");
        cur.insert(slot, m);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{inv, r_maj};
    use crate::words::{enumerate_words, format_letters, Multiset};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_insertion() {
        // third 5 into 215243152 with r = 3 and u = 1
        let v = w("215243152");
        let labels = rawlings_labels(&v, 5, 3);
        let slot = labels.iter().position(|&l| l == Some(1)).unwrap();
        let mut out = v.to_vec();
        out.insert(slot, 5);
        assert_eq!(format_letters(&out), "2152431552");
    }

    #[test]
    fn sorted_words_are_fixed() {
        for r in 1..=4 {
            assert_eq!(rawlings(&w("1122334"), r).unwrap().to_string(), "1122334");
        }
        assert_eq!(rawlings(&w("12"), 2).unwrap().to_string(), "12");
        assert_eq!(rawlings(&w("21"), 2).unwrap().to_string(), "21");
        assert!(rawlings(&w("21"), 0).is_err());
    }

    #[test]
    fn transports_on_2_2_1() {
        let m = Multiset::new(vec![2, 2, 1]);
        for r in 1..=3 {
            for word in enumerate_words(&m) {
                let image = rawlings(&word, r).unwrap();
                assert_eq!(r_maj(&image, r).unwrap(), inv(&word), "{word} r={r}");
            }
        }
    }
}
