//! Irreducible representations of the Weil groups of ℝ and ℂ, and the
//! Langlands and Arthur parameters of general linear groups built from them.

use serde::{Deserialize, Serialize};

use crate::{Error, Rational, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Real,
    Complex,
}

/// An irreducible block. Variant order is the canonical sort order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum WeilIrrep {
    /// `W(s, ε)`: the character `|x|^s sgn(x)^ε`.
    #[serde(rename = "W")]
    W { s: Rational, eps: u8 },
    /// `V(s₁, s₂)`, two-dimensional, with `s₂ - s₁` a positive integer.
    #[serde(rename = "V")]
    V { s1: Rational, s2: Rational },
    /// `χ_{s₁,s₂}` of `ℂ^×`, with `s₁ - s₂` an integer.
    #[serde(rename = "chi")]
    Chi { s1: Rational, s2: Rational },
}

impl WeilIrrep {
    pub fn w(s: Rational, eps: u8) -> Result<Self> {
        let b = WeilIrrep::W { s, eps };
        b.check()?;
        Ok(b)
    }

    pub fn v(s1: Rational, s2: Rational) -> Result<Self> {
        let b = WeilIrrep::V { s1, s2 };
        b.check()?;
        Ok(b)
    }

    pub fn chi(s1: Rational, s2: Rational) -> Result<Self> {
        let b = WeilIrrep::Chi { s1, s2 };
        b.check()?;
        Ok(b)
    }

    pub fn check(&self) -> Result<()> {
        match *self {
            WeilIrrep::W { eps, .. } if eps > 1 => Err(Error::input("ε must be 0 or 1")),
            WeilIrrep::V { s1, s2 } if !(s2 - s1).is_positive_integer() => Err(Error::input(
                format!("V({s1},{s2}) needs s2 - s1 a positive integer"),
            )),
            WeilIrrep::Chi { s1, s2 } if !(s1 - s2).is_integer() => Err(Error::input(format!(
                "χ({s1},{s2}) needs s1 - s2 an integer"
            ))),
            _ => Ok(()),
        }
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            WeilIrrep::Chi { .. } => Flavor::Complex,
            _ => Flavor::Real,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            WeilIrrep::V { .. } => 2,
            _ => 1,
        }
    }

    pub fn dual(&self) -> WeilIrrep {
        match *self {
            WeilIrrep::W { s, eps } => WeilIrrep::W { s: -s, eps },
            WeilIrrep::V { s1, s2 } => WeilIrrep::V { s1: -s2, s2: -s1 },
            WeilIrrep::Chi { s1, s2 } => WeilIrrep::Chi { s1: -s2, s2: -s1 },
        }
    }

    /// `W`, `V` shifted by `t` (every exponent plus `t`).
    pub fn shift(&self, t: Rational) -> WeilIrrep {
        match *self {
            WeilIrrep::W { s, eps } => WeilIrrep::W { s: s + t, eps },
            WeilIrrep::V { s1, s2 } => WeilIrrep::V { s1: s1 + t, s2: s2 + t },
            WeilIrrep::Chi { s1, s2 } => WeilIrrep::Chi { s1: s1 + t, s2: s2 + t },
        }
    }

    fn is_bounded(&self) -> bool {
        match *self {
            WeilIrrep::W { s, .. } => s.is_zero(),
            WeilIrrep::V { s1, s2 } | WeilIrrep::Chi { s1, s2 } => (s1 + s2).is_zero(),
        }
    }
}

/// Orders `{s1, s2}` so that `s2 > s1`.
pub fn normalize_two_dim(s1: Rational, s2: Rational) -> Result<WeilIrrep> {
    if s1 == s2 {
        return Err(Error::input(format!("V({s1},{s1}) is reducible")));
    }
    let (a, b) = if s1 < s2 { (s1, s2) } else { (s2, s1) };
    WeilIrrep::v(a, b)
}

fn common_flavor<'a>(mut it: impl Iterator<Item = &'a WeilIrrep>) -> Result<Flavor> {
    let Some(first) = it.next() else {
        return Ok(Flavor::Real);
    };
    let f = first.flavor();
    if it.any(|b| b.flavor() != f) {
        return Err(Error::input("real and complex blocks cannot be mixed"));
    }
    Ok(f)
}

/// A finite direct sum of irreducible blocks, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct LanglandsParam {
    pub flavor: Flavor,
    pub blocks: Vec<WeilIrrep>,
}

impl LanglandsParam {
    pub fn new(mut blocks: Vec<WeilIrrep>) -> Result<Self> {
        for b in &blocks {
            b.check()?;
        }
        let flavor = common_flavor(blocks.iter())?;
        blocks.sort();
        Ok(LanglandsParam { flavor, blocks })
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(WeilIrrep::dim).sum()
    }
}

/// A finite direct sum of `block ⊗ R_a`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ArthurParam {
    pub flavor: Flavor,
    pub blocks: Vec<ArthurBlock>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ArthurBlock {
    #[serde(flatten)]
    pub block: WeilIrrep,
    pub a: usize,
}

impl ArthurParam {
    pub fn new(blocks: Vec<(WeilIrrep, usize)>) -> Result<Self> {
        let mut out = Vec::with_capacity(blocks.len());
        for (block, a) in blocks {
            block.check()?;
            if a == 0 {
                return Err(Error::input("SL2 dimension must be positive"));
            }
            if !block.is_bounded() {
                return Err(Error::input(format!("{block:?} is not bounded")));
            }
            out.push(ArthurBlock { block, a });
        }
        let flavor = common_flavor(out.iter().map(|b| &b.block))?;
        out.sort();
        Ok(ArthurParam { flavor, blocks: out })
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.block.dim() * b.a).sum()
    }
}

/// Restriction to the diagonal of SL2: each `block ⊗ R_a` becomes the
/// ladder of `a` shifts of `block`, centred at `block`.
pub fn phi_of_psi(psi: &ArthurParam) -> LanglandsParam {
    let mut blocks = Vec::new();
    for ArthurBlock { block, a } in &psi.blocks {
        let a = *a as i64;
        for i in 1..=a {
            let t = Rational::new(2 * i - a - 1, 2);
            blocks.push(match block {
                WeilIrrep::W { .. } => block.shift(-t),
                _ => block.shift(t),
            });
        }
    }
    LanglandsParam::new(blocks).expect("shifts of valid blocks are valid")
}

/// Infinitesimal character as a sorted multiset. In the complex case the
/// holomorphic and antiholomorphic parts are independent multisets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(untagged)]
pub enum InfChar {
    Real(Vec<Rational>),
    Complex { left: Vec<Rational>, right: Vec<Rational> },
}

impl InfChar {
    pub fn real(mut v: Vec<Rational>) -> Self {
        v.sort();
        InfChar::Real(v)
    }

    pub fn complex(v: Vec<(Rational, Rational)>) -> Self {
        let (mut left, mut right): (Vec<_>, Vec<_>) = v.into_iter().unzip();
        left.sort();
        right.sort();
        InfChar::Complex { left, right }
    }

    pub fn len(&self) -> usize {
        match self {
            InfChar::Real(v) => v.len(),
            InfChar::Complex { left, .. } => left.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Multiset union; an empty side adopts the other's flavor.
    pub fn union(&self, other: &InfChar) -> Result<InfChar> {
        match (self, other) {
            (InfChar::Real(a), InfChar::Real(b)) => Ok(InfChar::real([a.as_slice(), b].concat())),
            (InfChar::Complex { left: a, right: b }, InfChar::Complex { left: c, right: d }) => {
                let mut left = [a.as_slice(), c].concat();
                let mut right = [b.as_slice(), d].concat();
                left.sort();
                right.sort();
                Ok(InfChar::Complex { left, right })
            }
            (a, b) if a.is_empty() => Ok(b.clone()),
            (a, b) if b.is_empty() => Ok(a.clone()),
            _ => Err(Error::input("cannot mix real and complex infinitesimal characters")),
        }
    }

    /// Every real entry, or every entry of both complex parts.
    pub fn entries(&self) -> Vec<Rational> {
        match self {
            InfChar::Real(v) => v.clone(),
            InfChar::Complex { left, right } => [left.as_slice(), right].concat(),
        }
    }

    /// Largest multiplicity of a single entry (per part when complex).
    pub fn max_multiplicity(&self) -> usize {
        fn run(v: &[Rational]) -> usize {
            v.chunk_by(|a, b| a == b).map(<[_]>::len).max().unwrap_or(0)
        }
        match self {
            InfChar::Real(v) => run(v),
            InfChar::Complex { left, right } => run(left).max(run(right)),
        }
    }
}

pub fn infinitesimal_character(p: &LanglandsParam) -> InfChar {
    match p.flavor {
        Flavor::Real => InfChar::real(
            p.blocks
                .iter()
                .flat_map(|b| match *b {
                    WeilIrrep::W { s, .. } => vec![s],
                    WeilIrrep::V { s1, s2 } => vec![s1, s2],
                    WeilIrrep::Chi { .. } => unreachable!("flavor checked"),
                })
                .collect(),
        ),
        Flavor::Complex => InfChar::complex(
            p.blocks
                .iter()
                .map(|b| match *b {
                    WeilIrrep::Chi { s1, s2 } => (s1, s2),
                    _ => unreachable!("flavor checked"),
                })
                .collect(),
        ),
    }
}

/// `(integral, regular)`. Complex parts are checked separately.
pub fn is_integral_regular(ic: &InfChar) -> (bool, bool) {
    fn integral(v: &[Rational]) -> bool {
        v.windows(2).all(|w| (w[1] - w[0]).is_integer())
    }
    let integral = match ic {
        InfChar::Real(v) => integral(v),
        InfChar::Complex { left, right } => integral(left) && integral(right),
    };
    (integral, ic.max_multiplicity() <= 1)
}

pub fn dual(p: &LanglandsParam) -> LanglandsParam {
    LanglandsParam::new(p.blocks.iter().map(WeilIrrep::dual).collect()).expect("duals are valid")
}

pub fn is_selfdual(p: &LanglandsParam) -> bool {
    dual(p) == *p
}

fn twist_block(b: &WeilIrrep) -> Result<WeilIrrep> {
    match *b {
        WeilIrrep::W { s, eps } => Ok(WeilIrrep::W { s, eps: 1 - eps }),
        WeilIrrep::V { .. } => Ok(*b),
        WeilIrrep::Chi { .. } => Err(Error::input("no sign twist is defined for complex parameters")),
    }
}

/// Tensor with the sign character of `W_ℝ`.
pub fn twist_by_sign(p: &LanglandsParam) -> Result<LanglandsParam> {
    LanglandsParam::new(p.blocks.iter().map(twist_block).collect::<Result<_>>()?)
}

pub fn twist_arthur_by_sign(p: &ArthurParam) -> Result<ArthurParam> {
    ArthurParam::new(
        p.blocks
            .iter()
            .map(|b| Ok((twist_block(&b.block)?, b.a)))
            .collect::<Result<_>>()?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn v(a: i64, b: i64) -> WeilIrrep {
        WeilIrrep::v(r(a, 1), r(b, 1)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_two_dim(r(3, 2), r(-3, 2)).unwrap(), WeilIrrep::V { s1: r(-3, 2), s2: r(3, 2) });
        assert_eq!(normalize_two_dim(r(-2, 1), r(1, 1)).unwrap(), v(-2, 1));
        assert!(normalize_two_dim(Rational::ZERO, Rational::ZERO).is_err());
        assert!(normalize_two_dim(Rational::ZERO, r(1, 2)).is_err());
    }

    #[test]
    fn phi_examples() {
        let b = WeilIrrep::v(r(-3, 2), r(3, 2)).unwrap();
        let psi1 = ArthurParam::new(vec![(b, 1)]).unwrap();
        assert_eq!(phi_of_psi(&psi1).blocks, vec![b]);
        let psi2 = ArthurParam::new(vec![(b, 2)]).unwrap();
        assert_eq!(phi_of_psi(&psi2).blocks, vec![v(-2, 1), v(-1, 2)]);
        let w = WeilIrrep::w(Rational::ZERO, 0).unwrap();
        let psi3 = ArthurParam::new(vec![(w, 3)]).unwrap();
        let got = phi_of_psi(&psi3).blocks;
        let want: Vec<_> = [-1, 0, 1].iter().map(|&s| WeilIrrep::W { s: r(s, 1), eps: 0 }).collect();
        assert_eq!(got, want);
        assert_eq!(
            infinitesimal_character(&phi_of_psi(&psi2)),
            InfChar::Real(vec![r(-2, 1), r(-1, 1), r(1, 1), r(2, 1)])
        );
    }

    #[test]
    fn arthur_bounded() {
        assert!(ArthurParam::new(vec![(v(-2, 1), 1)]).is_err());
        assert!(ArthurParam::new(vec![(WeilIrrep::W { s: r(1, 1), eps: 0 }, 1)]).is_err());
        let c = WeilIrrep::chi(r(-1, 1), r(1, 1)).unwrap();
        let w = WeilIrrep::W { s: Rational::ZERO, eps: 0 };
        assert!(ArthurParam::new(vec![(c, 1), (w, 1)]).is_err());
    }

    #[test]
    fn integral_regular_examples() {
        let ic = InfChar::real(vec![r(-2, 1), r(-1, 1), r(1, 1), r(2, 1)]);
        assert_eq!(is_integral_regular(&ic), (true, true));
        assert_eq!(is_integral_regular(&InfChar::real(vec![Rational::ZERO; 2])), (true, false));
        assert_eq!(is_integral_regular(&InfChar::real(vec![r(1, 2), r(1, 1)])), (false, true));
    }

    #[test]
    fn dual_and_twist() {
        let p = LanglandsParam::new(vec![WeilIrrep::W { s: Rational::ZERO, eps: 1 }]).unwrap();
        assert_eq!(dual(&p), p);
        assert_eq!(dual(&LanglandsParam::new(vec![v(-2, 1)]).unwrap()).blocks, vec![v(-1, 2)]);
        let c = LanglandsParam::new(vec![WeilIrrep::chi(r(-1, 1), r(1, 1)).unwrap()]).unwrap();
        assert_eq!(dual(&c), c);
        assert!(is_selfdual(&LanglandsParam::new(vec![v(-2, 1), v(-1, 2)]).unwrap()));
        assert!(!is_selfdual(&LanglandsParam::new(vec![WeilIrrep::W { s: r(1, 1), eps: 0 }]).unwrap()));
        let t = LanglandsParam::new(vec![WeilIrrep::W { s: Rational::ZERO, eps: 0 }]).unwrap();
        assert_eq!(twist_by_sign(&t).unwrap().blocks, vec![WeilIrrep::W { s: Rational::ZERO, eps: 1 }]);
        let vv = LanglandsParam::new(vec![v(-2, 1)]).unwrap();
        assert_eq!(twist_by_sign(&vv).unwrap(), vv);
        assert!(twist_by_sign(&c).is_err());
    }

    #[test]
    fn json_encodings() {
        let w = WeilIrrep::W { s: Rational::ZERO, eps: 1 };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"W":{"s":"0","eps":1}}"#);
        let b = WeilIrrep::V { s1: r(-3, 2), s2: r(3, 2) };
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"V":{"s1":"-3/2","s2":"3/2"}}"#);
        let c = WeilIrrep::Chi { s1: r(-1, 1), s2: r(1, 1) };
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"chi":{"s1":"-1","s2":"1"}}"#);
        let ab = ArthurBlock { block: b, a: 2 };
        let js = serde_json::to_string(&ab).unwrap();
        assert_eq!(js, r#"{"V":{"s1":"-3/2","s2":"3/2"},"a":2}"#);
        let back: ArthurBlock = serde_json::from_str(&js).unwrap();
        assert_eq!(back, ab);
    }
}
