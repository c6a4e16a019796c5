//! Standard modules of GL_N(ℝ) and GL_N(ℂ) and integer formal sums of them.
//!
//! A [`StandardModule`] is stored as its canonically ordered multiset of
//! essentially discrete data. Formal characters are finite integer
//! combinations of [`TwistedSymbol`]s, the symbol optionally carrying one
//! opaque [`TailAtom`] for a tail packet whose resolution is not spelled out.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::packets::TailAtom;
use crate::params::{Flavor, InfChar, LanglandsParam, WeilIrrep};
use crate::symgroup::{involutions, Involution, Permutation};
use crate::{Error, Rational, Result};

/// `γ(s,ε)`, `δ(s₁,s₂)` or `η(s₁,s₂)`. Encoded in JSON as the matching
/// Weil block (`W`, `V`, `chi`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum DiscreteSeries {
    #[serde(rename = "W")]
    RealChar { s: Rational, eps: u8 },
    #[serde(rename = "V")]
    RealDisc { s1: Rational, s2: Rational },
    #[serde(rename = "chi")]
    ComplexChar { s1: Rational, s2: Rational },
}

impl DiscreteSeries {
    pub fn gamma(s: Rational, eps: u8) -> Self {
        DiscreteSeries::RealChar { s, eps }
    }

    pub fn delta(s1: Rational, s2: Rational) -> Result<Self> {
        if !(s2 - s1).is_positive_integer() {
            return Err(Error::input(format!("δ({s1},{s2}) needs s2 - s1 a positive integer")));
        }
        Ok(DiscreteSeries::RealDisc { s1, s2 })
    }

    pub fn eta(s1: Rational, s2: Rational) -> Result<Self> {
        if !(s1 - s2).is_integer() {
            return Err(Error::input(format!("η({s1},{s2}) needs s1 - s2 an integer")));
        }
        Ok(DiscreteSeries::ComplexChar { s1, s2 })
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            DiscreteSeries::ComplexChar { .. } => Flavor::Complex,
            _ => Flavor::Real,
        }
    }

    pub fn dual(&self) -> Self {
        match *self {
            DiscreteSeries::RealChar { s, eps } => DiscreteSeries::RealChar { s: -s, eps },
            DiscreteSeries::RealDisc { s1, s2 } => DiscreteSeries::RealDisc { s1: -s2, s2: -s1 },
            DiscreteSeries::ComplexChar { s1, s2 } => DiscreteSeries::ComplexChar { s1: -s2, s2: -s1 },
        }
    }

    fn to_block(self) -> WeilIrrep {
        match self {
            DiscreteSeries::RealChar { s, eps } => WeilIrrep::W { s, eps },
            DiscreteSeries::RealDisc { s1, s2 } => WeilIrrep::V { s1, s2 },
            DiscreteSeries::ComplexChar { s1, s2 } => WeilIrrep::Chi { s1, s2 },
        }
    }

    fn from_block(b: WeilIrrep) -> Self {
        match b {
            WeilIrrep::W { s, eps } => DiscreteSeries::RealChar { s, eps },
            WeilIrrep::V { s1, s2 } => DiscreteSeries::RealDisc { s1, s2 },
            WeilIrrep::Chi { s1, s2 } => DiscreteSeries::ComplexChar { s1, s2 },
        }
    }
}

impl fmt::Display for DiscreteSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscreteSeries::RealChar { s, eps } => write!(f, "γ({s},{eps})"),
            DiscreteSeries::RealDisc { s1, s2 } => write!(f, "δ({s1},{s2})"),
            DiscreteSeries::ComplexChar { s1, s2 } => write!(f, "η({s1},{s2})"),
        }
    }
}

/// The exponent `e(τ)` ordering factors of a standard module.
pub fn e_value(d: &DiscreteSeries) -> Rational {
    match *d {
        DiscreteSeries::RealChar { s, .. } => s,
        DiscreteSeries::RealDisc { s1, s2 } | DiscreteSeries::ComplexChar { s1, s2 } => (s1 + s2) / 2,
    }
}

/// A product of discrete data in standard position, sorted by
/// `(e, variant, s₁, s₂, ε)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct StandardModule {
    parts: Vec<DiscreteSeries>,
}

pub fn canonicalize(ms: impl IntoIterator<Item = DiscreteSeries>) -> Result<StandardModule> {
    let mut parts: Vec<DiscreteSeries> = ms.into_iter().collect();
    if parts.iter().map(DiscreteSeries::flavor).unique().count() > 1 {
        return Err(Error::input("a standard module has a single flavor"));
    }
    parts.sort_by_key(|d| (e_value(d), *d));
    Ok(StandardModule { parts })
}

impl StandardModule {
    pub fn parts(&self) -> &[DiscreteSeries] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn flavor(&self) -> Option<Flavor> {
        self.parts.first().map(DiscreteSeries::flavor)
    }

    pub fn union(&self, other: &StandardModule) -> Result<StandardModule> {
        canonicalize(self.parts.iter().chain(&other.parts).copied())
    }

    pub fn langlands(&self) -> LanglandsParam {
        LanglandsParam::new(self.parts.iter().map(|d| d.to_block()).collect())
            .expect("discrete data give valid blocks")
    }

    pub fn infinitesimal_character(&self) -> InfChar {
        crate::params::infinitesimal_character(&self.langlands())
    }

    pub fn dual(&self) -> StandardModule {
        canonicalize(self.parts.iter().map(DiscreteSeries::dual)).expect("same flavor")
    }

    pub fn is_selfdual(&self) -> bool {
        self.dual() == *self
    }

    /// Tensor with `sgn ∘ det`: flips every `γ`, fixes every `δ`.
    pub fn twist_by_sign(&self) -> Result<StandardModule> {
        canonicalize(
            self.parts
                .iter()
                .map(|d| match *d {
                    DiscreteSeries::RealChar { s, eps } => Ok(DiscreteSeries::RealChar { s, eps: 1 - eps }),
                    DiscreteSeries::RealDisc { .. } => Ok(*d),
                    DiscreteSeries::ComplexChar { .. } => {
                        Err(Error::input("no sign twist is defined for complex data"))
                    }
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl fmt::Display for StandardModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.parts.iter().join(", "))
    }
}

pub fn standard_of_parameter(p: &LanglandsParam) -> StandardModule {
    canonicalize(p.blocks.iter().copied().map(DiscreteSeries::from_block)).expect("single flavor")
}

fn positive_integer(p: Rational, what: &str) -> Result<i64> {
    match p.to_integer() {
        Some(v) if v > 0 => Ok(v),
        _ => Err(Error::input(format!("{what} must be a positive integer, got {p}"))),
    }
}

/// The ladder `δ(-p/2, p/2) ν^{-(n-1)/2} × ⋯ × δ(-p/2, p/2) ν^{(n-1)/2}`.
pub fn speh_standard(p: Rational, n: usize) -> Result<StandardModule> {
    positive_integer(p, "p")?;
    let n = n as i64;
    let parts = (1..=n)
        .map(|i| {
            let t = Rational::new(2 * i - n - 1, 2);
            DiscreteSeries::delta(-p / 2 + t, p / 2 + t)
        })
        .collect::<Result<Vec<_>>>()?;
    canonicalize(parts)
}

/// One factor of an induced representation as seen by the reducibility
/// criterion: a character `η ν^t` or a discrete `δ(-p/2, p/2) ν^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Factor {
    Char(u8, Rational),
    Disc(Rational, Rational),
}

fn factor(d: &DiscreteSeries, t: Rational) -> Result<Factor> {
    match *d {
        DiscreteSeries::RealChar { s, eps } => Ok(Factor::Char(eps, s + t)),
        DiscreteSeries::RealDisc { s1, s2 } => Ok(Factor::Disc(s2 - s1, t + (s1 + s2) / 2)),
        DiscreteSeries::ComplexChar { .. } => Err(Error::input("reducibility is defined for real data only")),
    }
}

/// Whether `(d₁ ν^{t₁}) × (d₂ ν^{t₂})` is reducible. Non-centred inputs
/// are recentred, so `γ(s,ε) ν^t` is read as `γ(0,ε) ν^{s+t}`.
pub fn reducible(block1: (&DiscreteSeries, Rational), block2: (&DiscreteSeries, Rational)) -> Result<bool> {
    let f1 = factor(block1.0, block1.1)?;
    let f2 = factor(block2.0, block2.1)?;
    let pos_int = |x: Rational| x.is_positive_integer();
    Ok(match (f1, f2) {
        (Factor::Char(e1, t1), Factor::Char(e2, t2)) => {
            let d = t1 - t2;
            if e1 == e2 {
                d.is_odd_integer()
            } else {
                d.is_integer() && !d.is_odd_integer() && !d.is_zero()
            }
        }
        (Factor::Char(_, t1), Factor::Disc(p, t2)) | (Factor::Disc(p, t2), Factor::Char(_, t1)) => {
            let d = t1 - t2;
            d.is_integer() && pos_int(-p / 2 + d.abs())
        }
        (Factor::Disc(p1, t1), Factor::Disc(p2, t2)) => {
            let d = t1 - t2;
            d.is_integer() && pos_int(-(p1 - p2).abs() / 2 + d.abs())
        }
    })
}

/// `(p - (a-1))/2 > |λ'|` for every entry.
pub fn hypothesis_7_1_1(p: Rational, a: usize, infchar: &[Rational]) -> bool {
    let bound = (p - (a as i64 - 1)) / 2;
    infchar.iter().all(|l| bound > l.abs())
}

/// `p' ≥ m ≥ m' ≥ -p''`, with `m'` dropped when absent.
pub fn irreducibility_window(p1: Rational, p2: Rational, m: Rational, m_prime: Option<Rational>) -> bool {
    let low = m_prime.unwrap_or(m);
    p1 >= m && m >= low && low >= -p2
}

/// The Johnson-resolution standard module
/// `×_i δ((-p-(n-1))/2 + (i-1), (p-(n-1))/2 + (w(i)-1))`.
///
/// At `p = n-1` the factor `δ(0,0)` is replaced by `γ(0,0) × γ(0,1)`.
pub fn x_of(w: &Permutation, n: usize, p: Rational) -> Result<StandardModule> {
    if w.n() != n {
        return Err(Error::input(format!("permutation of size {} for n = {n}", w.n())));
    }
    if p < Rational::int(n as i64 - 1) {
        return Err(Error::input(format!("X(w, {n}, {p}) needs p >= n - 1")));
    }
    if !p.is_integer() {
        return Err(Error::input(format!("X(w, {n}, {p}) needs an integral p")));
    }
    let a = (-p - (n as i64 - 1)) / 2;
    let b = (p - (n as i64 - 1)) / 2;
    let mut parts = Vec::with_capacity(n + 1);
    for i in 1..=n {
        let s1 = a + (i as i64 - 1);
        let s2 = b + (w.at(i) as i64 - 1);
        if s1 == s2 {
            parts.push(DiscreteSeries::gamma(s1, 0));
            parts.push(DiscreteSeries::gamma(s1, 1));
        } else {
            parts.push(DiscreteSeries::delta(s1, s2)?);
        }
    }
    canonicalize(parts)
}

/// The complex analogue `×_i η((-p-(N-1))/2 + (i-1), (p-(N-1))/2 + (s(i)-1))`.
pub fn x_complex(s: &Permutation, n: usize, p: Rational) -> Result<StandardModule> {
    if s.n() != n {
        return Err(Error::input(format!("permutation of size {} for N = {n}", s.n())));
    }
    if p.abs() <= Rational::int(n as i64 - 1) {
        return Err(Error::input(format!("X_C(s, {n}, {p}) needs |p| > N - 1")));
    }
    let a = (-p - (n as i64 - 1)) / 2;
    let b = (p - (n as i64 - 1)) / 2;
    canonicalize(
        (1..=n)
            .map(|i| DiscreteSeries::eta(a + (i as i64 - 1), b + (s.at(i) as i64 - 1)))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// `(-1)^k` as an integer.
pub fn sign_of(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The index labels `v` for which `X(v)` is θ-stable, each with the
/// exponent of its sign in the twisted trace of the Speh representation.
///
/// With the ladder indexing of [`x_of`], the dual of `X(v)` is
/// `X(w₀ v⁻¹ w₀)`, so the stable labels are `v = w₀ u` with `u` an
/// involution. The labels form a poset anti-isomorphic to the involutions,
/// graded by θ-length, with the Speh standard `X(id)` at `u = w₀`; the
/// sign of `X(w₀ u)` is `(-1)^{ℓ_θ(w₀) - ℓ_θ(u)}`.
pub fn theta_stable_labels(n: usize) -> Vec<(Permutation, usize)> {
    let w0 = Permutation::longest(n);
    let top = Involution::longest(n).theta_length();
    let mut out: Vec<(Permutation, usize)> = involutions(n)
        .into_iter()
        .map(|u| (w0.mul(u.perm()), top + u.theta_length()))
        .collect();
    out.sort();
    out
}

/// One symbol of a formal character.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TwistedSymbol {
    pub module: StandardModule,
    pub tail: Option<TailAtom>,
}

impl TwistedSymbol {
    pub fn plain(module: StandardModule) -> Self {
        TwistedSymbol { module, tail: None }
    }

    /// Infinitesimal character of the whole symbol, the atom included.
    pub fn infinitesimal_character(&self) -> InfChar {
        let m = self.module.infinitesimal_character();
        match &self.tail {
            None => m,
            Some(t) => m.union(&t.infinitesimal_character()).expect("atoms are real"),
        }
    }

    pub fn is_selfdual(&self) -> bool {
        self.module.is_selfdual()
    }
}

impl fmt::Display for TwistedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tail {
            None => write!(f, "{}", self.module),
            Some(t) => write!(f, "{} ⊗ {}", self.module, t),
        }
    }
}

/// A finite integer combination of symbols with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalCharacter {
    terms: BTreeMap<TwistedSymbol, i64>,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit for [`FormalCharacter::product`]: the empty module.
    pub fn one() -> Self {
        Self::term(TwistedSymbol::plain(StandardModule::default()), 1)
    }

    pub fn term(sym: TwistedSymbol, coeff: i64) -> Self {
        let mut f = Self::zero();
        f.add_term(sym, coeff);
        f
    }

    pub fn module(m: StandardModule, coeff: i64) -> Self {
        Self::term(TwistedSymbol::plain(m), coeff)
    }

    pub fn add_term(&mut self, sym: TwistedSymbol, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(sym).or_insert(0);
        *e += coeff;
        if *e == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, c)| **c == 0)
                .map(|(k, _)| k.clone())
                .expect("just zeroed");
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TwistedSymbol, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, sym: &TwistedSymbol) -> i64 {
        self.terms.get(sym).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (k, v) in other.terms() {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn neg(&self) -> FormalCharacter {
        self.scale(-1)
    }

    pub fn sub(&self, other: &FormalCharacter) -> FormalCharacter {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> FormalCharacter {
        let mut out = Self::zero();
        for (k, v) in self.terms() {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Bilinear product: modules are merged, at most one atom survives.
    pub fn product(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let tail = match (&a.tail, &b.tail) {
                    (Some(s), Some(t)) => {
                        return Err(Error::Unsupported(format!("two tail atoms {s} and {t} in one symbol")))
                    }
                    (Some(t), None) | (None, Some(t)) => Some(*t),
                    (None, None) => None,
                };
                let sym = TwistedSymbol {
                    module: a.module.union(&b.module)?,
                    tail,
                };
                out.add_term(sym, x * y);
            }
        }
        Ok(out)
    }

    /// Applies a symbol map, collecting coefficients.
    pub fn try_map(&self, f: impl Fn(&TwistedSymbol) -> Result<TwistedSymbol>) -> Result<FormalCharacter> {
        let mut out = Self::zero();
        for (k, v) in self.terms() {
            out.add_term(f(k)?, v);
        }
        Ok(out)
    }

    /// Tensor with `sgn ∘ det` on every symbol.
    pub fn twist_by_sign(&self) -> Result<FormalCharacter> {
        self.try_map(|s| {
            Ok(TwistedSymbol {
                module: s.module.twist_by_sign()?,
                tail: s.tail.as_ref().map(TailAtom::twist_by_sign),
            })
        })
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms().enumerate() {
            let sign = if v < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = v.abs();
            if i > 0 {
                write!(f, " ")?;
            }
            if mag == 1 {
                write!(f, "{sign}{k}")?;
            } else {
                write!(f, "{sign}{mag}{k}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    coeff: i64,
    constituents: &'a StandardModule,
    tail: &'a Option<TailAtom>,
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (k, v) in self.terms() {
            seq.serialize_element(&TermJson {
                coeff: v,
                constituents: &k.module,
                tail: &k.tail,
            })?;
        }
        seq.end()
    }
}

/// `Σ_{w ∈ 𝔖_n} (-1)^{ℓ(w)} [X(w)]`.
pub fn grothendieck_speh(n: usize, p: Rational) -> Result<FormalCharacter> {
    let mut f = FormalCharacter::zero();
    for w in Permutation::all(n) {
        f.add_term(TwistedSymbol::plain(x_of(&w, n, p)?), sign_of(w.length()));
    }
    Ok(f)
}

/// Twisted trace of the Speh representation on the Johnson resolution:
/// only θ-stable standards contribute, with the signs of
/// [`theta_stable_labels`].
pub fn twisted_speh(n: usize, p: Rational) -> Result<FormalCharacter> {
    let mut f = FormalCharacter::zero();
    for (v, e) in theta_stable_labels(n) {
        f.add_term(TwistedSymbol::plain(x_of(&v, n, p)?), sign_of(e));
    }
    Ok(f)
}

/// The same sum over the complex ladder.
pub fn twisted_speh_complex(n: usize, p: Rational) -> Result<FormalCharacter> {
    let mut f = FormalCharacter::zero();
    for (v, e) in theta_stable_labels(n) {
        f.add_term(TwistedSymbol::plain(x_complex(&v, n, p)?), sign_of(e));
    }
    Ok(f)
}
