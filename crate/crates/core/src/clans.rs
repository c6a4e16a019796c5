//! Clans: involutions of {1..N} with signs on the fixed points. They index
//! the K-orbits on the flag variety of U(p,q).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::symgroup::{involutions, Involution, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Clan {
    eta: Involution,
    /// `signs[i-1]` is set exactly at the fixed points of `eta`.
    signs: Vec<Option<Sign>>,
}

impl Clan {
    pub fn new(eta: Involution, signs: Vec<Option<Sign>>) -> Result<Self> {
        if signs.len() != eta.n() {
            return Err(Error::input("sign vector has the wrong length"));
        }
        for i in 1..=eta.n() {
            let fixed = eta.at(i) == i;
            if fixed != signs[i - 1].is_some() {
                return Err(Error::input(format!("sign at position {i} does not match the involution")));
            }
        }
        Ok(Clan { eta, signs })
    }

    pub fn n(&self) -> usize {
        self.eta.n()
    }

    pub fn eta(&self) -> &Involution {
        &self.eta
    }

    pub fn sign(&self, i: usize) -> Option<Sign> {
        self.signs[i - 1]
    }

    /// `(p, q)` with `p = m + #plus` and `q = m + #minus`.
    pub fn signature(&self) -> (usize, usize) {
        let m = self.eta.two_cycles().len();
        let plus = self.signs.iter().filter(|s| **s == Some(Sign::Plus)).count();
        let minus = self.signs.iter().filter(|s| **s == Some(Sign::Minus)).count();
        (m + plus, m + minus)
    }

    /// Dimension of the corresponding orbit.
    pub fn length(&self) -> usize {
        let (p, q) = self.signature();
        let cycles = self.eta.two_cycles();
        let base = (p * p.saturating_sub(1) + q * q.saturating_sub(1)) / 2;
        let body: usize = cycles
            .iter()
            .map(|&(i, j)| {
                let nested = cycles.iter().filter(|&&(k, l)| k < i && i < l && l < j).count();
                (j - i) - nested
            })
            .sum();
        base + body
    }

    fn symbols(&self) -> Vec<Symbol> {
        let mut label = vec![0usize; self.n() + 1];
        let mut next = 0;
        (1..=self.n())
            .map(|i| match self.signs[i - 1] {
                Some(s) => Symbol::Sign(s),
                None => {
                    let j = self.eta.at(i);
                    if j > i {
                        next += 1;
                        label[i] = next;
                        label[j] = next;
                    }
                    Symbol::Label(label[i])
                }
            })
            .collect()
    }

    fn from_symbols(sym: &[Symbol]) -> Result<Self> {
        let n = sym.len();
        let mut images: Vec<usize> = (1..=n).collect();
        let mut signs = vec![None; n];
        let mut spots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, s) in sym.iter().enumerate() {
            match *s {
                Symbol::Sign(x) => signs[i] = Some(x),
                Symbol::Label(l) => spots.entry(l).or_default().push(i),
            }
        }
        for (l, pos) in spots {
            if pos.len() != 2 {
                return Err(Error::Parse(format!("label {l} occurs {} times", pos.len())));
            }
            images[pos[0]] = pos[1] + 1;
            images[pos[1]] = pos[0] + 1;
        }
        let eta = Involution::new(Permutation::new(images)?)?;
        Clan::new(eta, signs)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Symbol {
    Sign(Sign),
    Label(usize),
}

impl fmt::Display for Clan {
    /// Labels renumbered by first occurrence; comma-separated once some
    /// label needs two digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.symbols();
        let wide = sym.iter().any(|s| matches!(s, Symbol::Label(l) if *l > 9));
        let parts = sym.iter().map(|s| match s {
            Symbol::Sign(Sign::Plus) => "+".to_string(),
            Symbol::Sign(Sign::Minus) => "-".to_string(),
            Symbol::Label(l) => l.to_string(),
        });
        let sep = if wide { "," } else { "" };
        write!(f, "{}", parts.format(sep))
    }
}

impl FromStr for Clan {
    type Err = Error;

    /// Accepts `"+-1+23--312"`, optionally wrapped in parentheses, with
    /// ASCII or Unicode minus signs; comma-separated form for long labels.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let t = t.replace('\u{2212}', "-");
        if t.is_empty() {
            return Err(Error::Parse("empty clan".into()));
        }
        let tokens: Vec<String> = if t.contains(',') {
            t.split(',').map(|x| x.trim().to_string()).collect()
        } else {
            t.chars().map(String::from).collect()
        };
        let sym = tokens
            .iter()
            .map(|tok| match tok.as_str() {
                "+" => Ok(Symbol::Sign(Sign::Plus)),
                "-" => Ok(Symbol::Sign(Sign::Minus)),
                d => d
                    .parse::<usize>()
                    .map(Symbol::Label)
                    .map_err(|_| Error::Parse(format!("unexpected symbol {d:?} in clan {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Clan::from_symbols(&sym)
    }
}

impl Serialize for Clan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn parse_clan(text: &str) -> Result<Clan> {
    text.parse()
}

pub fn clan_length(c: &Clan) -> usize {
    c.length()
}

/// Nonempty sign strings over the given number of slots with exactly
/// `plus` plus signs, in lexicographic order with `+` before `-`.
fn sign_strings(slots: usize, plus: usize) -> Vec<Vec<Sign>> {
    fn go(slots: usize, plus: usize, cur: &mut Vec<Sign>, out: &mut Vec<Vec<Sign>>) {
        if slots == 0 {
            if plus == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if plus > 0 {
            cur.push(Sign::Plus);
            go(slots - 1, plus - 1, cur, out);
            cur.pop();
        }
        if slots > plus {
            cur.push(Sign::Minus);
            go(slots - 1, plus, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(slots, plus, &mut Vec::new(), &mut out);
    out
}

/// Every clan of signature `(p, q)`: involutions in lexicographic order,
/// then sign assignments in lexicographic order.
pub fn enumerate_clans(p: usize, q: usize) -> Vec<Clan> {
    let n = p + q;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for eta in involutions(n) {
        let m = eta.two_cycles().len();
        if m > p || m > q {
            continue;
        }
        let fixed = eta.fixed_points();
        for signs in sign_strings(fixed.len(), p - m) {
            let mut v = vec![None; n];
            for (&i, s) in fixed.iter().zip(signs) {
                v[i - 1] = Some(s);
            }
            out.push(Clan { eta: eta.clone(), signs: v });
        }
    }
    out
}

/// Closed-form count `Σ_m N!/(m! 2^m (N-2m)!) · C(N-2m, p-m)`.
pub fn clan_count(p: usize, q: usize) -> u128 {
    let n = p + q;
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let binom = |a: usize, b: usize| fact(a) / (fact(b) * fact(a - b));
    (0..=p.min(q))
        .map(|m| fact(n) / (fact(m) * (1u128 << m) * fact(n - 2 * m)) * binom(n - 2 * m, p - m))
        .sum()
}

/// Checks `ℓ(clan) = ℓ_θ(η) + (p(p-1) + q(q-1))/2` on every clan.
pub fn verify_length_relation(p: usize, q: usize) -> Result<bool> {
    let base = (p * p.saturating_sub(1) + q * q.saturating_sub(1)) / 2;
    for c in enumerate_clans(p, q) {
        if c.length() != c.eta().theta_length() + base {
            return Err(Error::Verification(format!(
                "clan {c}: length {} but θ-length {} + {base}",
                c.length(),
                c.eta().theta_length()
            )));
        }
    }
    Ok(true)
}

/// Covering pairs `(upper, lower)` produced by the two local moves:
/// (a) an adjacent pair `aa` becomes `+-` or `-+`;
/// (b) two adjacent symbols, not both signs, trade places.
/// Move (b) is reversible, so its pairs are oriented by length.
pub fn hasse_edges(p: usize, q: usize) -> Vec<(Clan, Clan)> {
    let mut edges = Vec::new();
    for c in enumerate_clans(p, q) {
        let sym = c.symbols();
        let lc = c.length();
        for k in 0..sym.len().saturating_sub(1) {
            match (sym[k], sym[k + 1]) {
                (Symbol::Label(a), Symbol::Label(b)) if a == b => {
                    for (x, y) in [(Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
                        let mut t = sym.clone();
                        t[k] = Symbol::Sign(x);
                        t[k + 1] = Symbol::Sign(y);
                        edges.push((c.clone(), Clan::from_symbols(&t).expect("valid move")));
                    }
                }
                (Symbol::Sign(_), Symbol::Sign(_)) => {}
                _ => {
                    let mut t = sym.clone();
                    t.swap(k, k + 1);
                    let d = Clan::from_symbols(&t).expect("valid move");
                    if d.length() < lc {
                        edges.push((c.clone(), d));
                    }
                }
            }
        }
    }
    edges.sort();
    edges.dedup();
    edges
}

/// Clans grouped by underlying involution, groups in lexicographic order
/// of the involution.
pub fn packets(p: usize, q: usize) -> Vec<Vec<Clan>> {
    let mut groups: BTreeMap<Involution, Vec<Clan>> = BTreeMap::new();
    for c in enumerate_clans(p, q) {
        groups.entry(c.eta.clone()).or_default().push(c);
    }
    groups.into_values().collect()
}

/// Enumeration record used in JSON output.
#[derive(Clone, Debug, Serialize)]
pub struct ClanEntry {
    pub clan: Clan,
    pub length: usize,
    pub involution: Permutation,
}

impl From<&Clan> for ClanEntry {
    fn from(c: &Clan) -> Self {
        ClanEntry {
            clan: c.clone(),
            length: c.length(),
            involution: c.eta().perm().clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Clan {
        s.parse().unwrap()
    }

    #[test]
    fn parse_long_example() {
        let x = c("+-1+23--312");
        assert_eq!(x.n(), 11);
        assert_eq!(x.signature(), (5, 6));
        assert_eq!(x.eta().two_cycles(), vec![(3, 10), (5, 11), (6, 9)]);
        assert_eq!(x.to_string(), "+-1+23--312");
        assert_eq!(c("(+\u{2212}1+23\u{2212}\u{2212}312)"), x);
    }

    #[test]
    fn parse_small() {
        let x = c("+");
        assert_eq!(x.signature(), (1, 0));
        assert!(x.eta().is_identity());
        let y = c("11+");
        assert_eq!(y.eta().two_cycles(), vec![(1, 2)]);
        assert_eq!(y.sign(3), Some(Sign::Plus));
        assert_eq!(y.signature(), (2, 1));
        assert!("1+".parse::<Clan>().is_err());
        assert!("111".parse::<Clan>().is_err());
        assert!("+x".parse::<Clan>().is_err());
        assert_eq!(c("2+2").to_string(), "1+1");
    }

    #[test]
    fn enumeration_small() {
        let got: Vec<String> = enumerate_clans(2, 1).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["++-", "+-+", "-++", "+11", "11+", "1+1"]);
        assert_eq!(enumerate_clans(1, 0).len(), 1);
        let got: Vec<String> = enumerate_clans(1, 1).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["+-", "-+", "11"]);
    }

    #[test]
    fn lengths() {
        assert_eq!(c("+-").length(), 0);
        assert_eq!(c("11+").length(), 2);
        assert_eq!(c("1+1").length(), 3);
    }

    #[test]
    fn relation_small() {
        assert!(verify_length_relation(1, 1).unwrap());
        assert!(verify_length_relation(2, 1).unwrap());
        assert!(verify_length_relation(4, 4).unwrap());
    }

    #[test]
    fn edges_small() {
        let e = hasse_edges(1, 1);
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|(u, _)| u.to_string() == "11"));
        let e = hasse_edges(2, 1);
        let from: Vec<String> = e
            .iter()
            .filter(|(u, _)| u.to_string() == "1+1")
            .map(|(_, l)| l.to_string())
            .collect();
        assert_eq!(from, ["+11", "11+"]);
        assert!(hasse_edges(1, 0).is_empty());
    }

    #[test]
    fn packet_groups() {
        let g = packets(1, 1);
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].len(), 2);
        assert_eq!(g[1][0].to_string(), "11");
        assert_eq!(packets(2, 1).len(), 4);
        assert_eq!(packets(1, 0).len(), 1);
    }

    #[test]
    fn wide_labels_use_commas() {
        let text = (1..=10).chain(1..=10).map(|l| l.to_string()).join(",");
        let x = c(&text);
        assert_eq!(x.n(), 20);
        assert!(x.to_string().contains(','));
        assert_eq!(c(&x.to_string()), x);
    }
}
