//! Han's bijection carrying `(des, maj)` to `(exc, den)` via a
//! decomposition of the two-line notation into dominated cycles.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{format_letters, two_line, Biword, Letter, Word};

/// A biword whose bottom row is its top row rotated one step to the right,
/// with the leading bottom letter strictly above every other bottom letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatedCycle(Biword);

impl DominatedCycle {
    pub fn new(b: Biword) -> Result<Self> {
        if !is_dominated_cycle(b.top(), b.bottom()) {
            return Err(Error::Domain(format!("{b} is not a dominated cycle")));
        }
        Ok(DominatedCycle(b))
    }

    pub fn biword(&self) -> &Biword {
        &self.0
    }
}

impl fmt::Display for DominatedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_dominated_cycle(top: &[Letter], bottom: &[Letter]) -> bool {
    let n = top.len();
    if n == 0 || bottom.len() != n || bottom[0] != top[n - 1] {
        return false;
    }
    (1..n).all(|i| bottom[i] == top[i - 1] && bottom[0] > bottom[i])
}

/// The ordered list of dominated cycles produced by [`han_den`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleDecomposition(Vec<DominatedCycle>);

impl CycleDecomposition {
    pub fn cycles(&self) -> &[DominatedCycle] {
        &self.0
    }

    /// Concatenated bottom rows.
    pub fn bottom_word(&self) -> Vec<Letter> {
        self.0.iter().flat_map(|c| c.0.bottom().to_vec()).collect()
    }

    /// Concatenated top rows.
    pub fn top_word(&self) -> Vec<Letter> {
        self.0.iter().flat_map(|c| c.0.top().to_vec()).collect()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(
                f,
                "({}|{})",
                format_letters(c.0.top()),
                format_letters(c.0.bottom())
            )?;
        }
        Ok(())
    }
}

/// Membership in the cyclic interval `]x, y]`.
pub fn in_cyclic_interval(z: Letter, x: Letter, y: Letter) -> bool {
    if x <= y {
        x < z && z <= y
    } else {
        x < z || z <= y
    }
}

/// The column operator `T_i` (0-based: acts on columns `i` and `i + 1`).
///
/// The tops are always exchanged. The bottoms `(alpha, beta)` follow them
/// only when exactly one of the two lies in `]x, y]`, where `x, y` are the
/// tops before the exchange.
pub fn t_operator(top: &mut [Letter], bottom: &mut [Letter], i: usize) {
    let (x, y) = (top[i], top[i + 1]);
    let (alpha, beta) = (bottom[i], bottom[i + 1]);
    top.swap(i, i + 1);
    if in_cyclic_interval(alpha, x, y) != in_cyclic_interval(beta, x, y) {
        bottom.swap(i, i + 1);
    }
}

/// Han's bijection: `(exc, den)(w) = (des, maj)(han_den(w))`.
///
/// Peels dominated cycles off the right end of the two-line notation. With
/// `a` the last top letter, the rightmost column is fixed; while its bottom
/// letter `v` differs from `a`, the column whose top is the rightmost `v`
/// left of the cycle is walked right by `T` operators until it sits just in
/// front of the cycle, which then grows by that column.
pub fn han_den(w: &[Letter]) -> (Word, CycleDecomposition) {
    let bw = two_line(w);
    let mut top = bw.top().to_vec();
    let mut bottom = bw.bottom().to_vec();
    let mut cycles = Vec::new();
    let mut end = top.len();
    while end > 0 {
        let a = top[end - 1];
        let mut pos = end - 1;
        while bottom[pos] != a {
            let v = bottom[pos];
            let src = top[..pos]
                .iter()
                .rposition(|&t| t == v)
                .expect("bottom letter occurs among the remaining tops");
            for k in src..pos - 1 {
                t_operator(&mut top, &mut bottom, k);
            }
            pos -= 1;
        }
        let cycle = Biword::new(top[pos..end].to_vec(), bottom[pos..end].to_vec())
            .expect("rows of equal length");
        debug_assert!(is_dominated_cycle(cycle.top(), cycle.bottom()));
        cycles.push(DominatedCycle(cycle));
        end = pos;
        debug_assert!(top[..end].windows(2).all(|p| p[0] <= p[1]));
    }
    cycles.reverse();
    (Word::from_vec(bottom), CycleDecomposition(cycles))
}
