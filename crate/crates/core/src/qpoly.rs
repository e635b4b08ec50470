//! Integer polynomials in `q` and in `(t, q)`, q-analogs, and the two
//! q-Stirling numbers of the second kind.
//!
//! Coefficients are `i64`. Every quantity computed here for `n <= 12` is
//! bounded by `12! < 2^29`, far from overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `q`; `coeffs[k]` is the coefficient of `q^k`.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![1])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        QPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Adds `c * q^k`.
    pub fn add_term(&mut self, k: usize, c: i64) {
        if self.0.len() <= k {
            self.0.resize(k + 1, 0);
        }
        self.0[k] += c;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Exact division; fails unless the remainder is zero.
    pub fn exact_divide(&self, d: &QPoly) -> Result<QPoly> {
        let dd = d.degree().ok_or(Error::InexactDivision)?;
        let lead = d.0[dd];
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(QPoly::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let c = top / lead;
            quot[k] = c;
            for (j, &dj) in d.0.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(QPoly::new(quot))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: i64, vars: &str) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    let a = c.unsigned_abs();
    if first {
        if c < 0 {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    match (a, vars.is_empty()) {
        (_, true) => write!(f, "{a}"),
        (1, false) => f.write_str(vars),
        (_, false) => write!(f, "{a}*{vars}"),
    }
}

fn power(var: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{k}")),
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers: `1 + 2*q + 3*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c != 0 {
                write_term(f, first, c, &power("q", k).unwrap_or_default())?;
                first = false;
            }
        }
        Ok(())
    }
}

/// JSON form: `{"0": 1, "1": 2}`, exponent to nonzero coefficient.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<usize, i64> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = BTreeMap::<String, i64>::deserialize(d)?;
        let mut p = QPoly::zero();
        for (k, c) in m {
            p.add_term(exponent(&k)?, c);
        }
        Ok(p)
    }
}

fn exponent<T: std::str::FromStr, E: serde::de::Error>(k: &str) -> std::result::Result<T, E> {
    k.parse()
        .map_err(|_| E::custom(format!("bad exponent {k:?}")))
}

/// A polynomial in `t` and `q`, stored sparsely by `(t exponent, q exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TQPoly(BTreeMap<(u32, u32), i64>);

impl TQPoly {
    pub fn zero() -> Self {
        TQPoly(BTreeMap::new())
    }

    pub fn add_term(&mut self, t: u32, q: u32, c: i64) {
        let e = self.0.entry((t, q)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&(t, q));
        }
    }

    pub fn coeff(&self, t: u32, q: u32) -> i64 {
        self.0.get(&(t, q)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.0.iter().map(|(&k, &c)| (k, c))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.values().sum()
    }

    /// Sets `t = 1`.
    pub fn q_marginal(&self) -> QPoly {
        let mut p = QPoly::zero();
        for (&(_, q), &c) in &self.0 {
            p.add_term(q as usize, c);
        }
        p
    }
}

impl fmt::Display for TQPoly {
    /// Terms by ascending `t`, then `q`: `1 + t*q + t*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(t, q), &c)) in self.0.iter().enumerate() {
            let vars: Vec<String> = [power("t", t as usize), power("q", q as usize)]
                .into_iter()
                .flatten()
                .collect();
            write_term(f, i == 0, c, &vars.join("*"))?;
        }
        Ok(())
    }
}

/// JSON form: `{"1": {"2": 1}}` maps t exponent to a q-exponent map.
impl Serialize for TQPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m: BTreeMap<u32, BTreeMap<u32, i64>> = BTreeMap::new();
        for (&(t, q), &c) in &self.0 {
            m.entry(t).or_default().insert(q, c);
        }
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TQPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = BTreeMap::<String, BTreeMap<String, i64>>::deserialize(d)?;
        let mut p = TQPoly::zero();
        for (t, row) in m {
            for (q, c) in row {
                p.add_term(exponent(&t)?, exponent(&q)?, c);
            }
        }
        Ok(p)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: usize) -> QPoly {
    QPoly(vec![1; n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_fact(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &q_int(k))
}

/// Gaussian binomial `[n]_q! / ([i]_q! [n-i]_q!)`.
pub fn q_binom(n: usize, i: usize) -> Result<QPoly> {
    if i > n {
        return Err(Error::Parameter(format!("q_binom({n}, {i}) needs i <= n")));
    }
    q_fact(n).exact_divide(&(&q_fact(i) * &q_fact(n - i)))
}

/// Carlitz: `S_q(n, m) = S_q(n-1, m-1) + [m]_q S_q(n-1, m)`, `S_q(0, m) = [m = 0]`.
pub fn carlitz_stirling(n: usize, m: usize) -> QPoly {
    if m > n {
        return QPoly::zero();
    }
    // rolling row over n, columns 0..=m
    let mut row = vec![QPoly::zero(); m + 1];
    row[0] = QPoly::one();
    for _ in 0..n {
        for j in (1..=m).rev() {
            row[j] = &row[j - 1] + &(&q_int(j) * &row[j]);
        }
        row[0] = QPoly::zero();
    }
    row.swap_remove(m)
}

/// Johnson: `{n+1, m}_q = sum_{i=0}^{n} [n choose i]_q {n-i, m-1}_q`, `{0, m}_q = [m = 0]`.
pub fn johnson_stirling(n: usize, m: usize) -> QPoly {
    if m > n {
        return QPoly::zero();
    }
    if n == 0 {
        return QPoly::one();
    }
    // binom[a][i] for a < n
    let binom: Vec<Vec<QPoly>> = (0..n)
        .map(|a| (0..=a).map(|i| q_binom(a, i).expect("i <= a")).collect())
        .collect();
    // table[k][a] = {a, k}_q for a <= n
    let mut table = vec![vec![QPoly::zero(); n + 1]; m + 1];
    table[0][0] = QPoly::one();
    for k in 1..=m {
        for a in 1..=n {
            let mut acc = QPoly::zero();
            let b = a - 1;
            for i in 0..=b {
                acc += &(&binom[b][i] * &table[k - 1][b - i]);
            }
            table[k][a] = acc;
        }
    }
    table[m][n].clone()
}

/// `S(n, m) = S(n-1, m-1) + m S(n-1, m)`.
pub fn stirling2(n: usize, m: usize) -> u128 {
    if m > n {
        return 0;
    }
    let mut row = vec![0u128; m + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=m).rev() {
            row[j] = row[j - 1] + j as u128 * row[j];
        }
        row[0] = 0;
    }
    row[m]
}

/// `B(n) = sum_m S(n, m)`.
pub fn bell(n: usize) -> u128 {
    (0..=n).map(|m| stirling2(n, m)).sum()
}

/// `S(n+1, m) = sum_{i=0}^{n} C(n, i) S(n-i, m-1)`, `S(0, m) = [m = 0]`.
pub fn stirling2_by_binomials(n: usize, m: usize) -> u128 {
    if m > n {
        return 0;
    }
    let binom = |a: usize, b: usize| -> u128 {
        (0..b).fold(1u128, |acc, k| acc * (a - k) as u128 / (k + 1) as u128)
    };
    // table[k][a] = S(a, k)
    let mut table = vec![vec![0u128; n + 1]; m + 1];
    table[0][0] = 1;
    for k in 1..=m {
        for a in 1..=n {
            let b = a - 1;
            table[k][a] = (0..=b).map(|i| binom(b, i) * table[k - 1][b - i]).sum();
        }
    }
    table[m][n]
}

/// `B(n+1) = sum_i C(n, i) B(i)`, computed independently of [`stirling2`].
pub fn bell_by_binomials(n: usize) -> u128 {
    let mut b = vec![1u128];
    let mut row = vec![1u128];
    for k in 0..n {
        b.push(row.iter().zip(&b).map(|(c, x)| c * x).sum());
        let mut next = vec![1u128; k + 2];
        for i in 1..=k {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    b[n]
}
