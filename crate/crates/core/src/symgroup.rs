//! Permutations of {1..n} in one-line notation, Bruhat order, involutions
//! and θ-lengths, plus exhaustive witness searches for the descent lemma on
//! involutions and its upward dual.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// An element of the symmetric group, stored as its one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation `w(1), ..., w(n)`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::input("permutation of size 0"));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::input(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    fn raw(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Self::raw((1..=n).collect())
    }

    /// The longest element `w₀ = [n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        Self::raw((1..=n).rev().collect())
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.images.swap(i - 1, j - 1);
        w
    }

    /// Builds a permutation of size `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::input(format!("bad cycle {c:?} for n = {n}")));
                }
                used[a] = true;
                images[a - 1] = c[(k + 1) % c.len()];
            }
        }
        Self::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::input(format!(
                "size mismatch: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        Self::raw(other.images.iter().map(|&j| self.images[j - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self::raw(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .tuple_combinations()
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v - 1] == i + 1)
    }

    /// Number of `i` with `w(i) > i`.
    pub fn exceedances(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    /// `w · (i j)`: swaps the entries at positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Permutation {
        let mut w = self.clone();
        w.images.swap(i - 1, j - 1);
        w
    }

    /// All of 𝔖_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Self::raw)
    }

    /// A reduced word `[i₁, ..., i_k]` with `w = s_{i₁} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut right = Vec::with_capacity(self.length());
        'outer: loop {
            for k in 0..w.len().saturating_sub(1) {
                if w[k] > w[k + 1] {
                    w.swap(k, k + 1);
                    right.push(k + 1);
                    continue 'outer;
                }
            }
            break;
        }
        right.reverse();
        right
    }

    /// Elements `w·t` (t a transposition) of length `ℓ(w) - 1`, in
    /// lexicographic order. These are exactly the Bruhat lower covers.
    pub fn lower_covers(&self) -> Vec<Permutation> {
        self.covers(false)
    }

    /// Elements `w·t` of length `ℓ(w) + 1`, in lexicographic order.
    pub fn upper_covers(&self) -> Vec<Permutation> {
        self.covers(true)
    }

    fn covers(&self, up: bool) -> Vec<Permutation> {
        let n = self.n();
        let l = self.length();
        let mut out: Vec<Permutation> = (1..=n)
            .tuple_combinations()
            .map(|(i, j)| self.swap_positions(i, j))
            .filter(|v| {
                let lv = v.length();
                if up {
                    lv == l + 1
                } else {
                    lv + 1 == l
                }
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `"[2,1,3]"` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        let images = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad permutation {s:?}")))?;
        Permutation::new(images).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `a ∘ b`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

/// The Bruhat lower ideal of a fixed element, holding one reduced word.
#[derive(Clone, Debug)]
pub struct BruhatIdeal {
    n: usize,
    word: Vec<usize>,
}

impl BruhatIdeal {
    pub fn new(w: &Permutation) -> Self {
        BruhatIdeal {
            n: w.n(),
            word: w.reduced_word(),
        }
    }

    /// Subword test: `v ≤ w` iff greedily stripping right descents of `v`
    /// along the reduced word of `w`, read right to left, ends at the
    /// identity.
    pub fn contains(&self, v: &Permutation) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::input(format!("size mismatch: {} vs {}", v.n(), self.n)));
        }
        let mut x = v.images.clone();
        for &k in self.word.iter().rev() {
            if x[k - 1] > x[k] {
                x.swap(k - 1, k);
            }
        }
        Ok(x.iter().enumerate().all(|(i, &e)| e == i + 1))
    }
}

/// `v ≤ w` in Bruhat order.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    BruhatIdeal::new(w).contains(v)
}

/// A permutation known to square to the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Involution(Permutation);

impl Involution {
    pub fn new(w: Permutation) -> Result<Self> {
        if w.is_involution() {
            Ok(Involution(w))
        } else {
            Err(Error::input(format!("{w} is not an involution")))
        }
    }

    pub fn identity(n: usize) -> Self {
        Involution(Permutation::identity(n))
    }

    pub fn longest(n: usize) -> Self {
        Involution(Permutation::longest(n))
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    /// `(ℓ(w) + #{i : w(i) > i}) / 2`.
    pub fn theta_length(&self) -> usize {
        let (l, e) = (self.0.length(), self.0.exceedances());
        debug_assert_eq!((l + e) % 2, 0);
        (l + e) / 2
    }

    /// The 2-cycles `(i, j)` with `i < j`, ordered by `i`.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        (1..=self.0.n())
            .filter_map(|i| {
                let j = self.0.at(i);
                (j > i).then_some((i, j))
            })
            .collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.0.n()).filter(|&i| self.0.at(i) == i).collect()
    }
}

impl Deref for Involution {
    type Target = Permutation;
    fn deref(&self) -> &Permutation {
        &self.0
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<Permutation> for Involution {
    type Error = Error;
    fn try_from(w: Permutation) -> Result<Self> {
        Involution::new(w)
    }
}

/// θ-length of a permutation that must be an involution.
pub fn theta_length(w: &Permutation) -> Result<usize> {
    Ok(Involution::new(w.clone())?.theta_length())
}

/// All involutions of 𝔖_n in lexicographic order of one-line notation.
pub fn involutions(n: usize) -> Vec<Involution> {
    fn go(w: &mut Vec<usize>, out: &mut Vec<Involution>) {
        let Some(i) = w.iter().position(|&v| v == 0) else {
            out.push(Involution(Permutation::raw(w.clone())));
            return;
        };
        for j in i..w.len() {
            if w[j] != 0 {
                continue;
            }
            w[i] = j + 1;
            w[j] = i + 1;
            go(w, out);
            w[i] = 0;
            w[j] = 0;
        }
    }
    let mut out = Vec::new();
    go(&mut vec![0; n], &mut out);
    out
}

/// `w = τ⁻¹ σ_X τ` with `ℓ(w) = 2ℓ(τ) + |X|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaDecomposition {
    /// Pairwise non-adjacent indices in `1..n-1`.
    pub x: Vec<usize>,
    pub tau: Permutation,
}

impl SigmaDecomposition {
    /// The product of the commuting simple reflections `s_i`, `i ∈ X`.
    pub fn sigma(&self) -> Permutation {
        let n = self.tau.n();
        self.x
            .iter()
            .fold(Permutation::identity(n), |acc, &i| acc.mul(&Permutation::simple(n, i)))
    }

    pub fn recompose(&self) -> Permutation {
        self.tau.inverse().mul(&self.sigma()).mul(&self.tau)
    }
}

pub fn sigma_decomposition(w: &Involution) -> SigmaDecomposition {
    fn adjacent_form(w: &Permutation) -> Option<Vec<usize>> {
        let mut x = Vec::new();
        for i in 1..=w.n() {
            let j = w.at(i);
            if j > i {
                if j != i + 1 {
                    return None;
                }
                x.push(i);
            }
        }
        Some(x)
    }
    fn go(w: &Permutation) -> Option<SigmaDecomposition> {
        if let Some(x) = adjacent_form(w) {
            return Some(SigmaDecomposition {
                x,
                tau: Permutation::identity(w.n()),
            });
        }
        let l = w.length();
        for k in 1..w.n() {
            let s = Permutation::simple(w.n(), k);
            let conj = s.mul(w).mul(&s);
            if conj.length() + 2 == l {
                if let Some(d) = go(&conj) {
                    return Some(SigmaDecomposition {
                        x: d.x,
                        tau: d.tau.mul(&s),
                    });
                }
            }
        }
        None
    }
    go(w.perm()).expect("every involution is conjugate to some σ_X with additive length")
}

/// Which alternative of the descent lemma a witness realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessCase {
    /// A single involution one step away.
    #[serde(rename = "i")]
    Single,
    /// An involution two steps away through an intermediate permutation.
    #[serde(rename = "ii")]
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub w: Permutation,
    pub case: WitnessCase,
    /// `[w']` for case (i), `[w', s]` for case (ii).
    pub witnesses: Vec<Permutation>,
}

fn find_witness(w: &Involution, up: bool) -> Result<Option<Witness>> {
    let tl = w.theta_length();
    let target = |c: &Permutation| -> bool {
        c.is_involution() && {
            let t = Involution(c.clone()).theta_length();
            if up {
                t == tl + 1
            } else {
                t + 1 == tl
            }
        }
    };
    let below = |a: &Permutation, b: &Permutation| -> Result<bool> {
        if up {
            bruhat_leq(b, a)
        } else {
            bruhat_leq(a, b)
        }
    };
    let step = |x: &Permutation| if up { x.upper_covers() } else { x.lower_covers() };

    for c in step(w.perm()) {
        if target(&c) && below(&c, w.perm())? {
            return Ok(Some(Witness {
                w: w.perm().clone(),
                case: WitnessCase::Single,
                witnesses: vec![c],
            }));
        }
    }
    let mut pairs = Vec::new();
    for s in step(w.perm()) {
        if !below(&s, w.perm())? {
            continue;
        }
        for c in step(&s) {
            if target(&c) && below(&c, &s)? {
                pairs.push((c, s.clone()));
            }
        }
    }
    pairs.sort();
    Ok(pairs.into_iter().next().map(|(c, s)| Witness {
        w: w.perm().clone(),
        case: WitnessCase::Double,
        witnesses: vec![c, s],
    }))
}

fn sweep(n: usize, up: bool) -> Result<Vec<Witness>> {
    if n < 2 {
        return Err(Error::input("witness sweeps need n >= 2"));
    }
    let skip = if up {
        Permutation::longest(n)
    } else {
        Permutation::identity(n)
    };
    let mut out = Vec::new();
    for w in involutions(n) {
        if *w.perm() == skip {
            continue;
        }
        match find_witness(&w, up)? {
            Some(wit) => out.push(wit),
            None => return Err(Error::Verification(format!("no witness for {w}"))),
        }
    }
    Ok(out)
}

/// For each involution `w ≠ id`, a smaller involution with θ-length one
/// less, reached either by a single Bruhat cover or through an
/// intermediate permutation two steps down.
pub fn verify_lemma_6_5(n: usize) -> Result<Vec<Witness>> {
    sweep(n, false)
}

/// Upward dual: for each involution `w ≠ w₀`, a larger involution with
/// θ-length one more.
pub fn verify_corollary_6_6(n: usize) -> Result<Vec<Witness>> {
    sweep(n, true)
}
