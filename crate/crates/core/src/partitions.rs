//! Set partitions of `[n]` and their representations.
//!
//! A [`SetPartition`] keeps its blocks ordered by their maxima, so the
//! Mahonian word is read off directly. The block and canonical forms order
//! blocks by their minima instead.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{self, Letter, Multiset, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Blocks may come in any order and need not be sorted internally.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut blocks = blocks;
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                let i = x as usize;
                if i == 0 || i > n || seen[i] {
                    return Err(Error::Domain(format!(
                        "blocks do not partition [{n}]: stray or repeated {x}"
                    )));
                }
                seen[i] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| *b.last().unwrap());
        Ok(SetPartition { blocks })
    }

    /// The partition of `[0]` with no blocks.
    pub fn empty() -> Self {
        SetPartition { blocks: Vec::new() }
    }

    /// Blocks in order of increasing maxima.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block sizes under the max ordering.
    pub fn block_type(&self) -> Multiset {
        Multiset::new(self.blocks.iter().map(Vec::len).collect())
    }
}

fn word_from_blocks<'a>(n: usize, blocks: impl Iterator<Item = &'a Vec<u32>>) -> Word {
    let mut w = vec![0; n];
    for (j, b) in blocks.enumerate() {
        for &x in b {
            w[x as usize - 1] = j as Letter + 1;
        }
    }
    Word::from_vec(w)
}

fn min_ordered(p: &SetPartition) -> Vec<&Vec<u32>> {
    let mut bs: Vec<&Vec<u32>> = p.blocks.iter().collect();
    bs.sort_unstable_by_key(|b| b[0]);
    bs
}

/// `w_i` is the index of the block containing `i`, blocks numbered by maxima.
pub fn mahonian_word(p: &SetPartition) -> Word {
    word_from_blocks(p.n(), p.blocks.iter())
}

/// Like [`mahonian_word`] with blocks numbered by minima (a restricted growth string).
pub fn canonical_word(p: &SetPartition) -> Word {
    word_from_blocks(p.n(), min_ordered(p).into_iter())
}

/// Blocks sorted by their least elements.
pub fn block_repr(p: &SetPartition) -> Vec<Vec<u32>> {
    min_ordered(p).into_iter().cloned().collect()
}

/// Arc diagram on `[n]`: one arc per pair of consecutive elements in a block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub n: usize,
    pub arcs: BTreeSet<(u32, u32)>,
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn standard_arcs(p: &SetPartition) -> ArcDiagram {
    let arcs = p
        .blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|e| (e[0], e[1])))
        .collect();
    ArcDiagram { n: p.n(), arcs }
}

/// Inverse of [`mahonian_word`]: block `j` collects the positions holding `j`.
pub fn partition_from_mahonian(w: &[Letter]) -> Result<SetPartition> {
    let content = Multiset::content_of(w);
    if !content.has_full_support() || !words::has_increasing_tail(w) {
        return Err(Error::NotMahonian(words::format_letters(w)));
    }
    let mut blocks = vec![Vec::new(); content.num_letters()];
    for (i, &x) in w.iter().enumerate() {
        blocks[x as usize - 1].push(i as u32 + 1);
    }
    Ok(SetPartition { blocks })
}

/// All partitions of `[n]`, or only those with `m` blocks.
///
/// Ordered by block type (lexicographic on the size vector), then by
/// Mahonian word.
pub fn enumerate_partitions(n: usize, m: Option<usize>) -> impl Iterator<Item = SetPartition> {
    Multiset::compositions(n)
        .into_iter()
        .filter(move |t| m.is_none_or(|m| t.num_letters() == m))
        .flat_map(|t| {
            words::enumerate_increasing_tail(&t)
                .expect("compositions have full support")
                .map(|w| partition_from_mahonian(&w).expect("increasing tail"))
                .collect::<Vec<_>>()
        })
}

impl fmt::Display for SetPartition {
    /// Block form, e.g. `{1,3,5,7}/{2,6}/{4}/{8,9}`; the empty
    /// partition renders as `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = block_repr(self)
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(u32::to_string).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        f.write_str(&parts.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "{}" {
            return Ok(SetPartition::empty());
        }
        let mut blocks = Vec::new();
        for part in s.split('/') {
            let inner = part
                .trim()
                .strip_prefix('{')
                .and_then(|p| p.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("bad block {part:?}")))?;
            let block = inner
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad element {x:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        SetPartition::new(blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        block_repr(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<u32>>::deserialize(d)?;
        SetPartition::new(blocks).map_err(serde::de::Error::custom)
    }
}
