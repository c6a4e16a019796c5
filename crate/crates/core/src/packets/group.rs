use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The five families handled: `A`–`D` for real classical groups, `U` for
/// unitary groups through base change.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Case {
    A,
    B,
    C,
    D,
    U,
}

impl Case {
    /// `C ↔ D`, the others fixed.
    pub fn flip(self) -> Case {
        match self {
            Case::C => Case::D,
            Case::D => Case::C,
            c => c,
        }
    }

    pub fn is_orthogonal_even(self) -> bool {
        matches!(self, Case::C | Case::D)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A group together with the size `N` of its standard representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GroupDatum {
    pub case: Case,
    /// Rank `n` for `A`–`D`, `N` for `U`.
    pub rank: usize,
    /// `(b, c)` for `U`, quasi-split by default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<(usize, usize)>,
}

impl GroupDatum {
    pub fn classical(case: Case, rank: usize) -> Result<Self> {
        if case == Case::U {
            return Err(Error::input("use GroupDatum::unitary for case U"));
        }
        Ok(GroupDatum { case, rank, signature: None })
    }

    pub fn unitary(n: usize, b: usize, c: usize) -> Result<Self> {
        if b + c != n || b.abs_diff(c) > 1 {
            return Err(Error::input(format!("U({b},{c}) is not a quasi-split form of rank {n}")));
        }
        Ok(GroupDatum { case: Case::U, rank: n, signature: Some((b, c)) })
    }

    /// Size of the standard representation of the dual group.
    pub fn big_n(&self) -> usize {
        match self.case {
            Case::A => 2 * self.rank + 1,
            Case::B | Case::C | Case::D => 2 * self.rank,
            Case::U => self.rank,
        }
    }
}

/// Groups whose `q` is tabulated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupFamily {
    Unitary(usize, usize),
    GlComplex(usize),
    /// `Sp(2n, ℝ)`, stored by `n`.
    Symplectic(usize),
    Orthogonal(usize, usize),
}

impl GroupFamily {
    /// The quasi-split unitary group `U(⌊n/2⌋, ⌈n/2⌉)`.
    pub fn quasisplit_unitary(n: usize) -> Self {
        GroupFamily::Unitary(n / 2, n - n / 2)
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Unitary(p, q) => write!(f, "U({p},{q})"),
            GroupFamily::GlComplex(n) => write!(f, "GL{n}(C)"),
            GroupFamily::Symplectic(n) => write!(f, "Sp({},R)", 2 * n),
            GroupFamily::Orthogonal(p, q) => write!(f, "SO({p},{q})"),
        }
    }
}

impl Serialize for GroupFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    /// Accepts `U(p,q)`, `GLn(C)`, `Sp(2n)` or `Sp(2n,R)`, `SO(p,q)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::input(format!("unsupported group family {s:?}"));
        let args = |body: &str| -> Result<Vec<usize>> {
            body.split(',')
                .filter(|x| *x != "R" && *x != "ℝ")
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        let inner = |prefix: &str| t.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        if let Some(body) = inner("U(") {
            if let [p, q] = args(body)?[..] {
                return Ok(GroupFamily::Unitary(p, q));
            }
        } else if let Some(body) = inner("SO(") {
            if let [p, q] = args(body)?[..] {
                return Ok(GroupFamily::Orthogonal(p, q));
            }
        } else if let Some(body) = inner("Sp(") {
            if let [m] = args(body)?[..] {
                if m % 2 == 0 {
                    return Ok(GroupFamily::Symplectic(m / 2));
                }
            }
        } else if let Some(rest) = t.strip_prefix("GL") {
            let num = rest
                .strip_suffix("(C)")
                .or_else(|| rest.strip_suffix("(ℂ)"))
                .map(|x| x.trim_start_matches('_'));
            if let Some(n) = num.and_then(|x| x.parse().ok()) {
                return Ok(GroupFamily::GlComplex(n));
            }
        }
        Err(bad())
    }
}

/// `q(G) = ½(dim G − dim K) − c₀`, evaluated per family.
pub fn q_value(family: GroupFamily) -> u64 {
    match family {
        GroupFamily::Unitary(p, q) => (p * q) as u64,
        GroupFamily::GlComplex(n) => (n * n.saturating_sub(1) / 2) as u64,
        GroupFamily::Symplectic(n) => (n * (n + 1) / 2) as u64,
        GroupFamily::Orthogonal(p, q) => (p * q / 2) as u64,
    }
}

/// `(-1)^{q* - q}`.
pub fn kottwitz_sign(q_inner: u64, q_quasisplit: u64) -> i64 {
    if q_inner.abs_diff(q_quasisplit).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
