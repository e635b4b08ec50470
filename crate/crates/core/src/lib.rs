//! Mahonian and Euler-Mahonian statistics on words and set partitions.
//!
//! The crate provides
//!
//! * word statistics (`inv`, `maj`, `MAJ_d`, `z`, `r-MAJ`, `den`, `mak`,
//!   `mad`, `mstc`, ...) in [`stats`],
//! * the bijections that carry one statistic onto another in [`bijections`],
//! * set partitions and their four encodings in [`partitions`],
//! * integer polynomials, q-analogs and q-Stirling numbers in [`qpoly`],
//! * exhaustive distribution checks over multiset-permutation domains in
//!   [`verify`].
//!
//! A set partition of `[n]` is identified with its Mahonian word: blocks
//! are numbered by increasing maxima and `w_i` is the number of the block
//! holding `i`. The words of type `(k_1, ..., k_m)` are exactly the
//! rearrangements of `{1^k_1, ..., m^k_m}` whose last occurrences appear in
//! the order `1, 2, ..., m`.

pub mod bijections;
pub mod error;
pub mod partitions;
pub mod qpoly;
pub mod stats;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use partitions::{ArcDiagram, SetPartition};
pub use qpoly::{QPoly, TQPoly};
pub use stats::LehmerCode;
pub use words::{Biword, Letter, Multiset, Permutation, Word};
