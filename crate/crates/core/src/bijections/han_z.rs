//! Han's bijection carrying the major index to the z-index, with the
//! operators it is built from: the descent-preserving swaps `theta_i` and
//! the cyclic relabelings `C^x` and `C_x`.
//!
//! All operators here work over an explicit alphabet bound `m`, and the
//! words may miss some letters of `[m]`.

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Swap the multiplicities of `i` and `i + 1` keeping the descent set.
///
/// Factors `(i+1) i` are frozen first, scanning left to right. What is left
/// of the letters `{i, i+1}` falls into maximal runs `i^a (i+1)^b`, and each
/// run becomes `i^b (i+1)^a`.
pub fn theta(w: &[Letter], i: Letter) -> Vec<Letter> {
    let mut out = w.to_vec();
    theta_in_place(&mut out, i);
    out
}

fn theta_in_place(w: &mut [Letter], i: Letter) {
    let j = i + 1;
    let n = w.len();
    let mut frozen = vec![false; n];
    let mut k = 0;
    while k + 1 < n {
        if w[k] == j && w[k + 1] == i {
            frozen[k] = true;
            frozen[k + 1] = true;
            k += 2;
        } else {
            k += 1;
        }
    }
    let mut k = 0;
    while k < n {
        if frozen[k] || (w[k] != i && w[k] != j) {
            k += 1;
            continue;
        }
        let start = k;
        while k < n && !frozen[k] && (w[k] == i || w[k] == j) {
            k += 1;
        }
        let a = w[start..k].iter().filter(|&&x| x == i).count();
        let (low, high) = w[start..k].split_at_mut(k - start - a);
        low.fill(i);
        high.fill(j);
    }
}

/// `theta_{j!} = theta_j o ... o theta_1` (identity for `j = 0`).
pub fn theta_factorial(w: &[Letter], j: Letter) -> Vec<Letter> {
    let mut out = w.to_vec();
    for i in 1..=j {
        theta_in_place(&mut out, i);
    }
    out
}

fn check_alphabet(w: &[Letter], x: Letter, m: Letter) -> Result<()> {
    if x == 0 || x > m {
        return Err(Error::Domain(format!("letter {x} outside [1, {m}]")));
    }
    if let Some(&bad) = w.iter().find(|&&y| y == 0 || y > m) {
        return Err(Error::Domain(format!("letter {bad} outside [1, {m}]")));
    }
    Ok(())
}

/// `C^x`: `y -> y - x` when `y > x`, else `y - x + m`.
pub fn cyclic_up(w: &[Letter], x: Letter, m: Letter) -> Result<Vec<Letter>> {
    check_alphabet(w, x, m)?;
    Ok(w.iter().map(|&y| cyc_up(y, x, m)).collect())
}

/// `C_x`: letters below `x` stay, letters above drop by one, `x` becomes `m`.
pub fn cyclic_down(w: &[Letter], x: Letter, m: Letter) -> Result<Vec<Letter>> {
    check_alphabet(w, x, m)?;
    Ok(w.iter()
        .map(|&y| cyc_down(y, x))
        .map(|y| if y == 0 { m } else { y })
        .collect())
}

/// Inverse of [`cyclic_down`] for the same `(x, m)`.
pub fn cyclic_down_inverse(w: &[Letter], x: Letter, m: Letter) -> Result<Vec<Letter>> {
    check_alphabet(w, x, m)?;
    Ok(w.iter().map(|&y| cyc_down_inv(y, x, m)).collect())
}

#[inline]
fn cyc_up(y: Letter, x: Letter, m: Letter) -> Letter {
    if y > x {
        y - x
    } else {
        y + m - x
    }
}

// 0 marks the letter x itself; callers substitute m
#[inline]
fn cyc_down(y: Letter, x: Letter) -> Letter {
    match y.cmp(&x) {
        std::cmp::Ordering::Less => y,
        std::cmp::Ordering::Greater => y - 1,
        std::cmp::Ordering::Equal => 0,
    }
}

#[inline]
fn cyc_down_inv(y: Letter, x: Letter, m: Letter) -> Letter {
    if y == m {
        x
    } else if y < x {
        y
    } else {
        y + 1
    }
}

/// `phi_x = theta_{(m-2)!}^{m-x} o C^x` for `x >= 2`, and `phi_1 = C^1`.
///
/// At `x = 1` the source and target contents coincide and the map between
/// them is the identity; `m - 1` rounds of `theta_{(m-2)!}` would not be.
pub fn phi(w: &[Letter], x: Letter, m: Letter) -> Result<Vec<Letter>> {
    check_alphabet(w, x, m)?;
    Ok(phi_unchecked(w, x, m))
}

fn phi_unchecked(w: &[Letter], x: Letter, m: Letter) -> Vec<Letter> {
    let mut out: Vec<Letter> = w.iter().map(|&y| cyc_up(y, x, m)).collect();
    let rounds = if x == 1 { 0 } else { m - x };
    for _ in 0..rounds {
        for i in 1..m.saturating_sub(1) {
            theta_in_place(&mut out, i);
        }
    }
    out
}

/// Han's bijection with `maj(w) = z(han_z(w))`, over the alphabet of `w`'s
/// largest letter.
pub fn han_z(w: &[Letter]) -> Word {
    let m = w.iter().copied().max().unwrap_or(0);
    Word::from_vec(han_z_unchecked(w, m))
}

/// Han's bijection over an explicit alphabet bound `m >= max(w)`.
pub fn han_z_with_alphabet(w: &[Letter], m: Letter) -> Result<Word> {
    if let Some(&bad) = w.iter().find(|&&y| y == 0 || y > m) {
        return Err(Error::Domain(format!("letter {bad} outside [1, {m}]")));
    }
    Ok(Word::from_vec(han_z_unchecked(w, m)))
}

// H_Z(w'x) = (C_x^{-1} o H_Z o phi_x(w')) x
fn han_z_unchecked(w: &[Letter], m: Letter) -> Vec<Letter> {
    let Some((&x, prefix)) = w.split_last() else {
        return Vec::new();
    };
    let inner = han_z_unchecked(&phi_unchecked(prefix, x, m), m);
    let mut out: Vec<Letter> = inner.iter().map(|&y| cyc_down_inv(y, x, m)).collect();
    out.push(x);
    out
}
