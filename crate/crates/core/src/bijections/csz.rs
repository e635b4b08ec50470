use crate::stats::right_embracing_numbers;
use crate::words::{self, istd, Letter, Multiset, Word};

/// The Clarke-Steingrimsson-Zeng bijection:
/// `(des, mak, mad)(w) = (exc, den, inv)(csz_phi(w))`.
///
/// Works on `p = std(w)`. Descent bottoms (ascending) are paired with the
/// descent tops arranged so that each top `x` has exactly `e(x)` larger tops
/// to its left; the other letters (ascending) are paired with the non-tops
/// arranged so that each `x` has exactly `e(x)` smaller letters to its
/// right. Here `e(x)` is the right embracing number of `x` in `p`. Sorting
/// the columns by their upper letter leaves a permutation in the lower row,
/// which is destandardized with the content of `w`.
pub fn csz_phi(w: &[Letter]) -> Word {
    let p = words::std(w);
    let n = p.len();
    let embrace = right_embracing_numbers(&p);

    let mut is_bottom = vec![false; n + 1];
    let mut is_top = vec![false; n + 1];
    for i in 0..n.saturating_sub(1) {
        if p[i] > p[i + 1] {
            is_top[p[i] as usize] = true;
            is_bottom[p[i + 1] as usize] = true;
        }
    }
    let mut e_of = vec![0usize; n + 1];
    for (i, &x) in p.iter().enumerate() {
        e_of[x as usize] = embrace[i] as usize;
    }

    let letters = 1..=n as Letter;
    let f: Vec<Letter> = letters.clone().filter(|&x| is_bottom[x as usize]).collect();
    let g: Vec<Letter> = letters
        .clone()
        .filter(|&x| !is_bottom[x as usize])
        .collect();

    // decreasing insertion: each new letter is smaller than all placed ones
    let mut f_prime: Vec<Letter> = Vec::with_capacity(f.len());
    for x in letters.clone().rev().filter(|&x| is_top[x as usize]) {
        f_prime.insert(e_of[x as usize], x);
    }
    // increasing insertion: each new letter is larger than all placed ones
    let mut g_prime: Vec<Letter> = Vec::with_capacity(g.len());
    for x in letters.filter(|&x| !is_top[x as usize]) {
        let at = g_prime.len() - e_of[x as usize];
        g_prime.insert(at, x);
    }

    let mut image = vec![0; n];
    for (&upper, &lower) in f.iter().chain(&g).zip(f_prime.iter().chain(&g_prime)) {
        image[upper as usize - 1] = lower;
    }
    istd(&Multiset::content_of(w), &image).expect("columns form a permutation")
}
