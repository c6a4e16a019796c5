use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::{q_value, Case, GroupDatum, GroupFamily};
use crate::glstd::hypothesis_7_1_1;
use crate::params::{infinitesimal_character, phi_of_psi, ArthurParam, InfChar, WeilIrrep};
use crate::{Error, Rational, Result};

/// `V(-p/2, p/2) ⊗ R_n`, or `χ_{-p/2,p/2} ⊗ R_N` in case U.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SpehBlock {
    pub p: Rational,
    #[serde(alias = "N")]
    pub n: usize,
}

impl SpehBlock {
    pub fn new(p: impl Into<Rational>, n: usize) -> Self {
        SpehBlock { p: p.into(), n }
    }
}

/// One sign bit in cases A and B, a pair in cases C and D.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TailEps {
    Single(u8),
    Pair(u8, u8),
}

impl TailEps {
    pub fn twist(self) -> TailEps {
        match self {
            TailEps::Single(e) => TailEps::Single(1 - e),
            TailEps::Pair(a, b) => TailEps::Pair(1 - a, 1 - b),
        }
    }

    fn bits(self) -> Vec<u8> {
        match self {
            TailEps::Single(e) => vec![e],
            TailEps::Pair(a, b) => vec![a, b],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct TailBlock {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<TailEps>,
}

/// Opaque symbol for the twisted trace of a positive-rank tail packet.
///
/// The tag describes the tail's GL parameter rather than the group it
/// came from: `A` is `ε ⊗ R_{2n+1}`, `B` is `ε ⊗ R_{2n}`, and `C`/`D` is
/// `ε₁ ⊗ R_{2n-1} ⊕ ε₂` with `C` meaning `ε₁ = ε₂`. The tag is therefore
/// stable under the `C ↔ D` flips of the recursion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct TailAtom {
    pub case: Case,
    pub n: usize,
    pub eps: TailEps,
}

impl TailAtom {
    pub fn new(case: Case, n: usize, eps: TailEps) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("tail atoms have positive rank"));
        }
        let case = match (case, eps) {
            (Case::A | Case::B, TailEps::Single(_)) => case,
            (Case::C | Case::D, TailEps::Pair(a, b)) => {
                if a == b {
                    Case::C
                } else {
                    Case::D
                }
            }
            _ => return Err(Error::input(format!("ε data {eps:?} does not fit case {case}"))),
        };
        Ok(TailAtom { case, n, eps })
    }

    pub fn twist_by_sign(&self) -> TailAtom {
        TailAtom { eps: self.eps.twist(), ..*self }
    }

    /// The blocks `(W(0, ε), a)` of the tail's Arthur parameter.
    pub fn arthur_blocks(&self) -> Vec<(WeilIrrep, usize)> {
        tail_blocks(self.case, self.n, self.eps)
    }

    pub fn infinitesimal_character(&self) -> InfChar {
        let psi = ArthurParam::new(self.arthur_blocks()).expect("tail blocks are valid");
        infinitesimal_character(&phi_of_psi(&psi))
    }
}

impl fmt::Display for TailAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            TailEps::Single(e) => write!(f, "Π({},{},{e})", self.case, self.n),
            TailEps::Pair(a, b) => write!(f, "Π({},{},{a}{b})", self.case, self.n),
        }
    }
}

fn tail_blocks(case: Case, n: usize, eps: TailEps) -> Vec<(WeilIrrep, usize)> {
    let w = |e: u8| WeilIrrep::W { s: Rational::ZERO, eps: e };
    match (case, eps) {
        (Case::A, TailEps::Single(e)) => vec![(w(e), 2 * n + 1)],
        (Case::B, TailEps::Single(e)) if n > 0 => vec![(w(e), 2 * n)],
        (Case::C | Case::D, TailEps::Pair(a, b)) if n > 0 => vec![(w(a), 2 * n - 1), (w(b), 1)],
        _ => vec![],
    }
}

/// An Adams-Johnson parameter as read from JSON. Nothing is checked until
/// [`validate_aj`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AJParameter {
    pub group: GroupDatum,
    pub blocks: Vec<SpehBlock>,
    pub tail: TailBlock,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParam {
    case: Case,
    rank: Option<usize>,
    #[serde(rename = "N")]
    big_n: Option<usize>,
    #[serde(default)]
    blocks: Vec<SpehBlock>,
    tail: Option<TailBlock>,
}

impl AJParameter {
    pub fn new(case: Case, rank: usize, blocks: Vec<SpehBlock>, tail: TailBlock) -> Result<Self> {
        Ok(AJParameter { group: GroupDatum::classical(case, rank)?, blocks, tail })
    }

    /// Case U at the quasi-split signature.
    pub fn unitary(n: usize, blocks: Vec<SpehBlock>) -> Result<Self> {
        Ok(AJParameter {
            group: GroupDatum::unitary(n, n / 2, n - n / 2)?,
            blocks,
            tail: TailBlock::default(),
        })
    }

    pub fn case(&self) -> Case {
        self.group.case
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawParam = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_raw(raw)
    }

    pub fn from_value(v: serde_json::Value) -> Result<Self> {
        let raw: RawParam = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawParam) -> Result<Self> {
        if raw.case == Case::U {
            if raw.tail.is_some_and(|t| t.n > 0) {
                return Err(Error::input("case U has no tail"));
            }
            let n = raw
                .big_n
                .or(raw.rank)
                .ok_or_else(|| Error::input("case U needs \"N\""))?;
            return Self::unitary(n, raw.blocks);
        }
        let rank = raw.rank.ok_or_else(|| Error::input(format!("case {} needs \"rank\"", raw.case)))?;
        Self::new(raw.case, rank, raw.blocks, raw.tail.unwrap_or_default())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("case".into(), serde_json::to_value(self.case()).unwrap());
        if self.case() == Case::U {
            m.insert("N".into(), self.group.rank.into());
            let blocks = self
                .blocks
                .iter()
                .map(|b| serde_json::json!({"p": b.p, "N": b.n}))
                .collect();
            m.insert("blocks".into(), serde_json::Value::Array(blocks));
        } else {
            m.insert("rank".into(), self.group.rank.into());
            m.insert("blocks".into(), serde_json::to_value(&self.blocks).unwrap());
            m.insert("tail".into(), serde_json::to_value(self.tail).unwrap());
        }
        serde_json::Value::Object(m)
    }

    fn odd_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| b.n % 2 == 1).count()
    }

    /// The ε data implied by the case rules, with user input filling in
    /// whatever is free. `None` for case U.
    pub fn resolved_eps(&self) -> Option<TailEps> {
        let odd = (self.odd_blocks() % 2) as u8;
        match self.case() {
            Case::A => Some(TailEps::Single(odd)),
            Case::B => Some(match self.tail.eps {
                Some(TailEps::Single(e)) => TailEps::Single(e),
                _ => TailEps::Single(0),
            }),
            Case::C | Case::D => {
                let target = u8::from(self.case() == Case::D);
                Some(match self.tail.eps {
                    Some(TailEps::Pair(a, b)) => TailEps::Pair(a, b),
                    Some(TailEps::Single(a)) => TailEps::Pair(a, (a + odd + target) % 2),
                    None => TailEps::Pair(0, (odd + target) % 2),
                })
            }
            Case::U => None,
        }
    }
}

impl fmt::Display for AJParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// One violated constraint.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Issue {
    pub clause: &'static str,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.clause, self.message)
    }
}

/// A parameter that passed validation: blocks sorted by strictly
/// decreasing `p`, ε data resolved.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Validated {
    pub group: GroupDatum,
    pub blocks: Vec<SpehBlock>,
    pub tail_n: usize,
    pub eps: Option<TailEps>,
}

impl Validated {
    pub fn case(&self) -> Case {
        self.group.case
    }

    /// The tail contribution as an atom, when the tail has positive rank.
    pub fn tail_atom(&self) -> Option<TailAtom> {
        match (self.tail_n, self.eps) {
            (0, _) | (_, None) => None,
            (n, Some(e)) => Some(TailAtom::new(self.case(), n, e).expect("validated tail")),
        }
    }

    pub fn tail_arthur_blocks(&self) -> Vec<(WeilIrrep, usize)> {
        match self.eps {
            Some(e) => tail_blocks(self.case(), self.tail_n, e),
            None => vec![],
        }
    }

    pub fn std_compose(&self) -> ArthurParam {
        std_blocks(self.case(), &self.blocks, self.tail_arthur_blocks())
    }

    /// Infinitesimal character of the composed parameter.
    pub fn infinitesimal_character(&self) -> InfChar {
        infinitesimal_character(&phi_of_psi(&self.std_compose()))
    }

    /// The residual parameter after removing the first block: one fewer
    /// block, and when that block has odd `n` the case flips `C ↔ D` and
    /// the tail is twisted by the sign character.
    pub fn residual(&self) -> Option<Validated> {
        let (first, rest) = self.blocks.split_first()?;
        let flip = first.n % 2 == 1 && self.case() != Case::U;
        let mut group = self.group;
        group.rank -= first.n;
        let mut eps = self.eps;
        if flip {
            group.case = group.case.flip();
            eps = eps.map(TailEps::twist);
        }
        Some(Validated { group, blocks: rest.to_vec(), tail_n: self.tail_n, eps })
    }

    pub fn to_parameter(&self) -> AJParameter {
        AJParameter {
            group: self.group,
            blocks: self.blocks.clone(),
            tail: TailBlock { n: self.tail_n, eps: self.eps },
        }
    }
}

fn std_blocks(case: Case, blocks: &[SpehBlock], tail: Vec<(WeilIrrep, usize)>) -> ArthurParam {
    let mut out: Vec<(WeilIrrep, usize)> = blocks
        .iter()
        .map(|b| {
            let h = b.p / 2;
            let block = if case == Case::U {
                WeilIrrep::Chi { s1: -h, s2: h }
            } else {
                WeilIrrep::V { s1: -h, s2: h }
            };
            (block, b.n)
        })
        .collect();
    out.extend(tail);
    ArthurParam::new(out).expect("validated blocks compose")
}

/// `Std_G ∘ ψ` as a GL_N Arthur parameter.
pub fn std_compose(psi: &Validated) -> ArthurParam {
    psi.std_compose()
}

fn regular_for(case: Case, ic: &InfChar) -> bool {
    match (case, ic) {
        (Case::C | Case::D, InfChar::Real(v)) => {
            let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
            for x in v {
                *counts.entry(*x).or_default() += 1;
            }
            counts.iter().all(|(x, c)| *c <= 1 || (x.is_zero() && *c <= 2))
        }
        _ => crate::params::is_integral_regular(ic).1,
    }
}

/// Checks every constraint on an Adams-Johnson parameter and returns the
/// validated form, or the full list of problems.
pub fn validate_aj(psi: &AJParameter) -> std::result::Result<Validated, Vec<Issue>> {
    let mut issues = Vec::new();
    let mut issue = |clause: &'static str, message: String| issues.push(Issue { clause, message });
    let case = psi.case();

    let total: usize = psi.blocks.iter().map(|b| b.n).sum::<usize>() + psi.tail.n;
    if total != psi.group.rank {
        issue("rank", format!("block sizes sum to {total}, expected {}", psi.group.rank));
    }
    let mut range_ok = true;
    for b in &psi.blocks {
        if b.n == 0 {
            issue("range", "blocks need n >= 1".into());
            range_ok = false;
            continue;
        }
        let Some(p) = b.p.to_integer().filter(|p| *p > 0) else {
            issue("range", format!("p = {} is not a positive integer", b.p));
            range_ok = false;
            continue;
        };
        let n = b.n as i64;
        let odd = (p + n) % 2 == 1;
        match case {
            Case::A | Case::C | Case::D if !odd => {
                issue("parity", format!("p + n = {} must be odd in case {case}", p + n))
            }
            Case::B if odd => issue("parity", format!("p + n = {} must be even in case B", p + n)),
            Case::U if p % 2 != 0 => issue("parity", format!("p = {p} must be even in case U")),
            _ => {}
        }
        if case == Case::U && p < n {
            issue("range", format!("p = {p} must exceed N - 1 = {}", n - 1));
            range_ok = false;
        } else if p < n - 1 {
            issue("range", format!("p = {p} is below n - 1 = {}", n - 1));
            range_ok = false;
        }
    }
    let mut ps: Vec<Rational> = psi.blocks.iter().map(|b| b.p).collect();
    ps.sort();
    if ps.windows(2).any(|w| w[0] == w[1]) {
        issue("distinct", "the p_i must be pairwise distinct".into());
    }

    let resolved = psi.resolved_eps();
    if let (Some(given), Some(want)) = (psi.tail.eps, resolved) {
        if given.bits().iter().any(|&e| e > 1) {
            issue("epsilon", format!("ε values must be 0 or 1, got {given:?}"));
            range_ok = false;
        }
        match (case, given) {
            (Case::A, _) if given != want => issue(
                "epsilon",
                format!("case A forces ε = {want:?} from the parity of the odd blocks, got {given:?}"),
            ),
            (Case::A | Case::B, TailEps::Pair(..)) => {
                issue("epsilon", format!("case {case} takes a single ε"))
            }
            _ => {}
        }
    }
    if case.is_orthogonal_even() {
        let odd = psi.odd_blocks();
        let tail_det = match (psi.tail.n, resolved) {
            (n, Some(TailEps::Pair(a, b))) if n > 0 => (a + b) as usize,
            _ => 0,
        };
        let det = (odd + tail_det) % 2;
        let want = usize::from(case == Case::D);
        if det != want {
            issue(
                "epsilon",
                format!("case {case} needs determinant sign {want}, the blocks and tail give {det}"),
            );
        }
    }
    if case == Case::U && psi.tail.n > 0 {
        issue("rank", "case U has no tail".into());
    }
    if !range_ok {
        return Err(issues);
    }

    let mut blocks = psi.blocks.clone();
    blocks.sort_by_key(|b| std::cmp::Reverse(b.p));
    let v = Validated { group: psi.group, blocks, tail_n: psi.tail.n, eps: resolved };
    let ic = v.infinitesimal_character();
    let (integral, _) = crate::params::is_integral_regular(&ic);
    if !integral {
        issue("integrality", "the infinitesimal character is not integral".into());
    }
    if !regular_for(case, &ic) {
        issue("regularity", "the infinitesimal character is not regular".into());
    }
    if let Err(e) = check_ordering(&v) {
        issue("ordering", e.to_string());
    }
    if issues.is_empty() {
        Ok(v)
    } else {
        Err(issues)
    }
}

/// Strict dominance of each block over everything after it.
pub fn check_ordering(v: &Validated) -> Result<()> {
    let mut cur = v.clone();
    while let Some(rest) = cur.residual() {
        let first = cur.blocks[0];
        let ic = rest.infinitesimal_character().entries();
        if !hypothesis_7_1_1(first.p, first.n, &ic) {
            let culprit = rest
                .blocks
                .first()
                .map(|b| format!("(p={}, n={})", b.p, b.n))
                .unwrap_or_else(|| "the tail".into());
            return Err(Error::Ordering(format!(
                "block (p={}, n={}) does not dominate {culprit}",
                first.p, first.n
            )));
        }
        cur = rest;
    }
    Ok(())
}

/// Validation as a single error.
pub fn validated(psi: &AJParameter) -> Result<Validated> {
    validate_aj(psi).map_err(|issues| {
        if issues.iter().all(|i| i.clause == "ordering") {
            Error::Ordering(issues.iter().map(|i| i.message.as_str()).collect::<Vec<_>>().join("; "))
        } else {
            Error::Input(issues.iter().map(Issue::to_string).collect::<Vec<_>>().join("; "))
        }
    })
}

/// One factor of the quasi-split Levi.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct LeviFactor {
    pub group: GroupFamily,
    pub q: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LeviData {
    pub factors: Vec<LeviFactor>,
    pub q_star: u64,
}

/// The quasi-split Levi `Π U(⌊n_i/2⌋, ⌈n_i/2⌉) × tail*` and its `q`.
pub fn levi_quasisplit(psi: &Validated) -> LeviData {
    let mut factors: Vec<LeviFactor> = psi
        .blocks
        .iter()
        .map(|b| {
            let group = GroupFamily::quasisplit_unitary(b.n);
            LeviFactor { group, q: q_value(group) }
        })
        .collect();
    let n = psi.tail_n;
    if n > 0 {
        let group = match (psi.case(), psi.eps) {
            (Case::A, _) => Some(GroupFamily::Symplectic(n)),
            (Case::B, _) => Some(GroupFamily::Orthogonal(n, n + 1)),
            (Case::C | Case::D, Some(TailEps::Pair(a, b))) if a == b => Some(GroupFamily::Orthogonal(n, n)),
            (Case::C | Case::D, _) => Some(GroupFamily::Orthogonal(n - 1, n + 1)),
            (Case::U, _) => None,
        };
        if let Some(group) = group {
            factors.push(LeviFactor { group, q: q_value(group) });
        }
    }
    let q_star = factors.iter().map(|f| f.q).sum();
    LeviData { factors, q_star }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::int(n)
    }

    #[test]
    fn json_forms() {
        let a = AJParameter::from_json(r#"{"case":"A","rank":2,"blocks":[{"p":"3","n":2}],"tail":{"n":0,"eps":0}}"#).unwrap();
        assert_eq!(a.blocks, vec![SpehBlock::new(3, 2)]);
        let u = AJParameter::from_json(r#"{"case":"U","N":4,"blocks":[{"p":"2","N":2},{"p":4,"N":2}]}"#).unwrap();
        assert_eq!(u.group.signature, Some((2, 2)));
        assert_eq!(u.blocks[1], SpehBlock::new(4, 2));
        let d = AJParameter::from_json(r#"{"case":"D","rank":3,"blocks":[{"p":"4","n":1}],"tail":{"n":2,"eps":[0,1]}}"#).unwrap();
        assert_eq!(d.tail.eps, Some(TailEps::Pair(0, 1)));
        assert!(AJParameter::from_json(r#"{"case":"B","blocks":[]}"#).is_err());
        assert!(AJParameter::from_json("{").is_err());
        let back = AJParameter::from_value(a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn validation_examples() {
        let a = AJParameter::new(Case::A, 2, vec![SpehBlock::new(3, 2)], TailBlock { n: 0, eps: Some(TailEps::Single(0)) }).unwrap();
        assert!(validate_aj(&a).is_ok());
        let b = AJParameter::new(Case::B, 2, vec![SpehBlock::new(4, 2)], TailBlock::default()).unwrap();
        assert!(validate_aj(&b).is_ok());
        let bad = AJParameter::new(Case::B, 2, vec![SpehBlock::new(3, 2)], TailBlock::default()).unwrap();
        let issues = validate_aj(&bad).unwrap_err();
        assert!(issues.iter().any(|i| i.clause == "parity"));
    }

    #[test]
    fn validation_failures() {
        let wrong_eps = AJParameter::new(Case::A, 1, vec![SpehBlock::new(4, 1)], TailBlock { n: 0, eps: Some(TailEps::Single(0)) }).unwrap();
        assert!(validate_aj(&wrong_eps).unwrap_err().iter().any(|i| i.clause == "epsilon"));
        let rank = AJParameter::new(Case::B, 3, vec![SpehBlock::new(4, 2)], TailBlock::default()).unwrap();
        assert!(validate_aj(&rank).unwrap_err().iter().any(|i| i.clause == "rank"));
        let same = AJParameter::new(Case::C, 2, vec![SpehBlock::new(4, 1), SpehBlock::new(4, 1)], TailBlock::default()).unwrap();
        assert!(validate_aj(&same).unwrap_err().iter().any(|i| i.clause == "distinct"));
        let close = AJParameter::new(Case::C, 4, vec![SpehBlock::new(8, 1), SpehBlock::new(6, 3)], TailBlock::default()).unwrap();
        assert!(validate_aj(&close).unwrap_err().iter().any(|i| i.clause == "ordering"));
        let det = AJParameter::new(Case::C, 1, vec![SpehBlock::new(4, 1)], TailBlock::default()).unwrap();
        assert!(validate_aj(&det).unwrap_err().iter().any(|i| i.clause == "epsilon"));
        let irregular = AJParameter::new(Case::A, 2, vec![SpehBlock::new(1, 2)], TailBlock::default()).unwrap();
        assert!(validate_aj(&irregular).unwrap_err().iter().any(|i| i.clause == "regularity"));
        let u = AJParameter::unitary(2, vec![SpehBlock::new(3, 2)]).unwrap();
        assert!(validate_aj(&u).unwrap_err().iter().any(|i| i.clause == "parity"));
    }

    #[test]
    fn compose_examples() {
        let a = validated(&AJParameter::new(Case::A, 2, vec![SpehBlock::new(3, 2)], TailBlock::default()).unwrap()).unwrap();
        let psi = a.std_compose();
        assert_eq!(psi.dim(), 5);
        assert_eq!(
            psi,
            ArthurParam::new(vec![
                (WeilIrrep::V { s1: Rational::half(-3), s2: Rational::half(3) }, 2),
                (WeilIrrep::W { s: r(0), eps: 0 }, 1)
            ])
            .unwrap()
        );
        let b = validated(&AJParameter::new(Case::B, 2, vec![SpehBlock::new(4, 2)], TailBlock::default()).unwrap()).unwrap();
        assert_eq!(b.std_compose().dim(), 4);
        let u = validated(&AJParameter::unitary(2, vec![SpehBlock::new(2, 2)]).unwrap()).unwrap();
        assert_eq!(
            u.std_compose(),
            ArthurParam::new(vec![(WeilIrrep::Chi { s1: r(-1), s2: r(1) }, 2)]).unwrap()
        );
    }

    #[test]
    fn levi_examples() {
        let one = validated(&AJParameter::new(Case::B, 2, vec![SpehBlock::new(4, 2)], TailBlock::default()).unwrap()).unwrap();
        assert_eq!(levi_quasisplit(&one).q_star, 1);
        let two = validated(&AJParameter::new(Case::C, 4, vec![SpehBlock::new(12, 3), SpehBlock::new(2, 1)], TailBlock::default()).unwrap()).unwrap();
        assert_eq!(levi_quasisplit(&two).q_star, 2);
        let u = validated(&AJParameter::unitary(2, vec![SpehBlock::new(2, 2)]).unwrap()).unwrap();
        assert_eq!(levi_quasisplit(&u).q_star, 1);
        let tail = validated(
            &AJParameter::new(Case::A, 3, vec![SpehBlock::new(8, 1)], TailBlock { n: 2, eps: None }).unwrap(),
        )
        .unwrap();
        let l = levi_quasisplit(&tail);
        assert_eq!(l.factors[1].group, GroupFamily::Symplectic(2));
        assert_eq!(l.q_star, 3);
    }

    #[test]
    fn residual_flips() {
        let v = validated(
            &AJParameter::new(Case::C, 3, vec![SpehBlock::new(8, 1)], TailBlock { n: 2, eps: Some(TailEps::Pair(0, 1)) }).unwrap(),
        )
        .unwrap();
        let res = v.residual().unwrap();
        assert_eq!(res.case(), Case::D);
        assert_eq!(res.eps, Some(TailEps::Pair(1, 0)));
        assert_eq!(v.tail_atom().unwrap().case, Case::D);
        assert_eq!(res.tail_atom().unwrap().case, Case::D);
    }

    #[test]
    fn atom_infchar() {
        let a = TailAtom::new(Case::C, 2, TailEps::Pair(1, 1)).unwrap();
        assert_eq!(a.infinitesimal_character(), InfChar::real(vec![r(-1), r(0), r(0), r(1)]));
        let b = TailAtom::new(Case::B, 1, TailEps::Single(0)).unwrap();
        assert_eq!(b.infinitesimal_character(), InfChar::real(vec![Rational::half(-1), Rational::half(1)]));
        assert!(TailAtom::new(Case::B, 0, TailEps::Single(0)).is_err());
        assert!(TailAtom::new(Case::A, 1, TailEps::Pair(0, 0)).is_err());
    }
}
