//! Statistic-transporting bijections on words.
//!
//! | map | carries | onto |
//! |---|---|---|
//! | [`foata`] | `maj` | `inv` |
//! | [`foata_d`] | `MAJ_d` | `inv` |
//! | [`han_z`] | `maj` | `z` |
//! | [`psi_m`] | `(mstc, inv)` | `(des, maj)` |
//! | [`rawlings`] | `inv` | `r-maj` |
//! | [`han_den`] | `(exc, den)` | `(des, maj)` |
//! | [`csz_phi`] | `(des, mak, mad)` | `(exc, den, inv)` |
//!
//! Each map preserves letter content. Only forward maps are provided.

mod carlitz;
mod csz;
mod foata;
mod han_den;
mod han_z;
mod rawlings;

use std::fmt;
use std::str::FromStr;

pub use carlitz::{carlitz_psi, insert_at_label, insertion_labels, psi_m};
pub use csz::csz_phi;
pub use foata::{foata, foata_d, jump};
pub use han_den::{
    han_den, in_cyclic_interval, is_dominated_cycle, t_operator, CycleDecomposition, DominatedCycle,
};
pub use han_z::{
    cyclic_down, cyclic_down_inverse, cyclic_up, han_z, han_z_with_alphabet, phi, theta,
    theta_factorial,
};
pub use rawlings::{rawlings, rawlings_labels};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// A named word bijection, with its parameter where it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Foata,
    FoataD(usize),
    HanZ,
    PsiM,
    Rawlings(usize),
    HanDen,
    CszPhi,
}

impl Bijection {
    pub const NAMES: [&'static str; 7] = [
        "foata", "foata-d", "han-z", "psi-m", "rawlings", "han-den", "csz-phi",
    ];

    /// Build from a CLI name; `param` supplies `d` or `r`.
    pub fn from_name(name: &str, param: Option<usize>) -> Result<Self> {
        let need =
            |what: &str| param.ok_or_else(|| Error::Parameter(format!("{name} needs --{what}")));
        let b = match name {
            "foata" => Bijection::Foata,
            "foata-d" => Bijection::FoataD(need("d")?),
            "han-z" => Bijection::HanZ,
            "psi-m" => Bijection::PsiM,
            "rawlings" => Bijection::Rawlings(need("r")?),
            "han-den" => Bijection::HanDen,
            "csz-phi" => Bijection::CszPhi,
            other => return Err(Error::UnknownBijection(other.to_string())),
        };
        if matches!(b, Bijection::FoataD(0) | Bijection::Rawlings(0)) {
            return Err(Error::Parameter(format!(
                "{name} parameter must be at least 1"
            )));
        }
        Ok(b)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Bijection::Foata => "foata",
            Bijection::FoataD(_) => "foata-d",
            Bijection::HanZ => "han-z",
            Bijection::PsiM => "psi-m",
            Bijection::Rawlings(_) => "rawlings",
            Bijection::HanDen => "han-den",
            Bijection::CszPhi => "csz-phi",
        }
    }

    /// True for the maps that fix every consecutive tail permutation; the
    /// others are only known to keep the increasing tail.
    pub fn preserves_consecutive_tails(&self) -> bool {
        matches!(
            self,
            Bijection::Foata | Bijection::FoataD(_) | Bijection::HanZ
        )
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        match *self {
            Bijection::Foata => foata(w),
            Bijection::FoataD(d) => foata_d(w, d).expect("d validated at construction"),
            Bijection::HanZ => han_z(w),
            Bijection::PsiM => psi_m(w),
            Bijection::Rawlings(r) => rawlings(w, r).expect("r validated at construction"),
            Bijection::HanDen => han_den(w).0,
            Bijection::CszPhi => csz_phi(w),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bijection::FoataD(d) => write!(f, "foata-d(d={d})"),
            Bijection::Rawlings(r) => write!(f, "rawlings(r={r})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Bijection {
    type Err = Error;

    /// Accepts `name`, or `name:param` for `foata-d` and `rawlings`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, p)) => {
                let v = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad parameter in {s:?}")))?;
                Bijection::from_name(name, Some(v))
            }
            None => Bijection::from_name(s, None),
        }
    }
}
