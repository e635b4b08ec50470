//! Carlitz's insertion bijection on permutations and its extension to words
//! through standardization.

use crate::error::{Error, Result};
use crate::stats::lehmer_code_unchecked;
use crate::words::{self, is_permutation, istd, Letter, Multiset, Permutation, Word};

/// Slot labels for inserting a new maximum into `p`.
///
/// Slot `s` means "before `p[s]`", slot `p.len()` is the end. The end gets
/// label 0, the slots right after descents get `1..=des` reading right to
/// left, and the remaining slots get the following labels left to right.
pub fn insertion_labels(p: &[Letter]) -> Vec<usize> {
    let n = p.len();
    let mut labels = vec![usize::MAX; n + 1];
    labels[n] = 0;
    let mut next = 1;
    for s in (1..n).rev() {
        if p[s - 1] > p[s] {
            labels[s] = next;
            next += 1;
        }
    }
    for label in labels.iter_mut() {
        if *label == usize::MAX {
            *label = next;
            next += 1;
        }
    }
    labels
}

/// Insert `x` into `p` at the slot carrying `label`.
pub fn insert_at_label(p: &[Letter], x: Letter, label: usize) -> Vec<Letter> {
    let slot = insertion_labels(p)
        .iter()
        .position(|&l| l == label)
        .expect("label within 0..=len");
    let mut out = Vec::with_capacity(p.len() + 1);
    out.extend_from_slice(&p[..slot]);
    out.push(x);
    out.extend_from_slice(&p[slot..]);
    out
}

/// Carlitz's bijection: `(eul o I, inv)(p) = (des, maj)(carlitz_psi(p))`.
///
/// Letters `1, 2, ..., n` are inserted in turn; letter `k` goes to the slot
/// labeled by the `k`-th entry of the inversion table of `p`.
pub fn carlitz_psi(p: &[Letter]) -> Result<Permutation> {
    if !is_permutation(p) {
        return Err(Error::Domain(format!(
            "{} is not a permutation",
            words::format_letters(p)
        )));
    }
    Ok(carlitz_psi_unchecked(p))
}

pub(crate) fn carlitz_psi_unchecked(p: &[Letter]) -> Permutation {
    let code = lehmer_code_unchecked(p);
    let mut cur: Vec<Letter> = Vec::with_capacity(p.len());
    for (k, &c) in code.entries().iter().enumerate() {
        cur = insert_at_label(&cur, k as Letter + 1, c as usize);
    }
    Permutation::from_vec(cur)
}

/// `istd_M o carlitz_psi o std`: `(mstc, inv)(w) = (des, maj)(psi_m(w))`.
pub fn psi_m(w: &[Letter]) -> Word {
    let content = Multiset::content_of(w);
    let p = carlitz_psi_unchecked(&words::std(w));
    istd(&content, &p).expect("standardization has the size of its word")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{des, inv, maj, mstc};
    use crate::words::{enumerate_increasing_tail, format_letters};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn label_layout() {
        // 4 6 3 4 2 1 5 2 6 5 1 3 7 7 8 8 0
        assert_eq!(
            insertion_labels(&w("64125378")),
            vec![4, 3, 2, 5, 6, 1, 7, 8, 0]
        );
    }

    #[test]
    fn insertion_step() {
        assert_eq!(
            format_letters(&insert_at_label(&w("64125378"), 9, 6)),
            "641295378"
        );
    }

    #[test]
    fn worked_example() {
        assert_eq!(carlitz_psi(&w("315246")).unwrap().to_string(), "513246");
        assert_eq!(psi_m(&w("213123")).to_string(), "312123");
        assert_eq!(carlitz_psi(&w("12345")).unwrap().to_string(), "12345");
        assert_eq!(psi_m(&w("112233")).to_string(), "112233");
        assert!(carlitz_psi(&w("1123")).is_err());
    }

    #[test]
    fn transports_on_permutations() {
        for n in 0..=7 {
            for p in crate::words::permutations_of(n) {
                let q = carlitz_psi(&p).unwrap();
                let code = lehmer_code_unchecked(&p);
                assert_eq!(crate::stats::eul(&code), des(&q));
                assert_eq!(inv(&p), maj(&q));
            }
        }
    }

    #[test]
    fn mstc_to_des_on_small_partitions() {
        for word in enumerate_increasing_tail(&Multiset::new(vec![2, 2])).unwrap() {
            assert_eq!(des(&psi_m(&word)), mstc(&word));
        }
    }
}
