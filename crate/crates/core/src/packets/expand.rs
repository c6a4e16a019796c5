use serde::Serialize;

use super::group::{q_value, Case, GroupFamily};
use super::param::{levi_quasisplit, SpehBlock, TailAtom, Validated};
use crate::clans::{clan_length, Clan, Sign};
use crate::glstd::{
    canonicalize, hypothesis_7_1_1, sign_of, twisted_speh, twisted_speh_complex, x_complex, x_of,
    DiscreteSeries, FormalCharacter, StandardModule, TwistedSymbol,
};
use crate::params::{is_integral_regular, Flavor, InfChar};
use crate::symgroup::{involutions, Involution, Permutation};
use crate::{Error, Rational, Result};

/// The quasi-split clan with underlying involution `s`: signature
/// `(⌊n/2⌋, ⌈n/2⌉)`, plus signs on the first fixed points.
pub fn quasisplit_clan(s: &Involution) -> Clan {
    let n = s.n();
    let b = n / 2;
    let pairs = s.two_cycles().len();
    let mut plus_left = b - pairs;
    let signs = (1..=n)
        .map(|i| {
            (s.at(i) == i).then(|| {
                if plus_left > 0 {
                    plus_left -= 1;
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
        })
        .collect();
    Clan::new(s.clone(), signs).expect("signs sit on fixed points")
}

/// `ℓ_V` computed from the orbit side: `dim Q - dim 𝓑_L + q(L)`, with
/// `dim Q` the clan length and `q(L) = bc` for the quasi-split form.
pub fn ell_v_from_clan(s: &Involution) -> usize {
    let n = s.n();
    let (b, c) = (n / 2, n - n / 2);
    clan_length(&quasisplit_clan(s)) + b * c - n * (n - 1) / 2
}

/// The packet member attached to `s`: its standard module `X(w₀ s)` and
/// `ℓ_V = ℓ_θ(s)`.
pub fn transfer_of_involution(s: &Involution, n: usize, p: Rational, flavor: Flavor) -> Result<(StandardModule, usize)> {
    if s.n() != n {
        return Err(Error::input(format!("involution of size {} for n = {n}", s.n())));
    }
    let label = Permutation::longest(n).compose(s.perm())?;
    let module = match flavor {
        Flavor::Real => x_of(&label, n, p)?,
        Flavor::Complex => x_complex(&label, n, p)?,
    };
    Ok((module, s.theta_length()))
}

/// A single elementary factor of a parameter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementaryBlock {
    Speh { p: Rational, n: usize, flavor: Flavor },
    /// Case A tail of rank 0: the character `γ(0, ε)` of GL_1.
    CharacterTail { eps: u8 },
    Atom(TailAtom),
    /// Any other rank-0 tail.
    Empty,
}

/// The transfer-side sum `(-1)^{q(L*)} Σ_s (-1)^{ℓ_V(s)} [X(w₀ s)]` for a
/// Speh block; tails contribute their own symbol.
pub fn elementary_expansion(block: &ElementaryBlock) -> Result<FormalCharacter> {
    match *block {
        ElementaryBlock::Speh { p, n, flavor } => {
            let q = q_value(GroupFamily::quasisplit_unitary(n)) as usize;
            let mut f = FormalCharacter::zero();
            for s in involutions(n) {
                let (module, ell_v) = transfer_of_involution(&s, n, p, flavor)?;
                f.add_term(TwistedSymbol::plain(module), sign_of(q + ell_v));
            }
            Ok(f)
        }
        ElementaryBlock::CharacterTail { eps } => Ok(FormalCharacter::module(
            canonicalize([DiscreteSeries::gamma(Rational::ZERO, eps)])?,
            1,
        )),
        ElementaryBlock::Atom(atom) => Ok(FormalCharacter::term(
            TwistedSymbol { module: StandardModule::default(), tail: Some(atom) },
            1,
        )),
        ElementaryBlock::Empty => Ok(FormalCharacter::one()),
    }
}

/// Formal product of two characters.
pub fn product(f: &FormalCharacter, g: &FormalCharacter) -> Result<FormalCharacter> {
    f.product(g)
}

fn flavor_of(case: Case) -> Flavor {
    if case == Case::U {
        Flavor::Complex
    } else {
        Flavor::Real
    }
}

fn speh_block(case: Case, b: &SpehBlock) -> ElementaryBlock {
    ElementaryBlock::Speh { p: b.p, n: b.n, flavor: flavor_of(case) }
}

fn tail_block(v: &Validated) -> ElementaryBlock {
    match (v.case(), v.tail_atom(), v.eps) {
        (_, Some(atom), _) => ElementaryBlock::Atom(atom),
        (Case::A, None, Some(super::param::TailEps::Single(e))) => ElementaryBlock::CharacterTail { eps: e },
        _ => ElementaryBlock::Empty,
    }
}

/// The transfer side: peel off the block with the largest `p`, expand it,
/// and multiply by the (sign-twisted when `n₁` is odd) expansion of the
/// residual parameter on the flipped group.
pub fn composite_expansion(psi: &Validated) -> Result<FormalCharacter> {
    let Some(rest) = psi.residual() else {
        return elementary_expansion(&tail_block(psi));
    };
    let first = psi.blocks[0];
    let ic = rest.infinitesimal_character().entries();
    if !hypothesis_7_1_1(first.p, first.n, &ic) {
        return Err(Error::Ordering(format!(
            "block (p={}, n={}) does not dominate the remaining infinitesimal character",
            first.p, first.n
        )));
    }
    let head = elementary_expansion(&speh_block(psi.case(), &first))?;
    let mut tail = composite_expansion(&rest)?;
    if first.n % 2 == 1 && psi.case() != Case::U {
        tail = tail.twist_by_sign()?;
    }
    head.product(&tail)
}

/// The GL side: the product of the twisted Speh traces of the blocks with
/// the tail's own symbol.
pub fn lhs_expansion(psi: &Validated) -> Result<FormalCharacter> {
    let mut acc = elementary_expansion(&tail_block(psi))?;
    for b in psi.blocks.iter().rev() {
        let t = match psi.case() {
            Case::U => twisted_speh_complex(b.n, b.p)?,
            _ => twisted_speh(b.n, b.p)?,
        };
        acc = t.product(&acc)?;
    }
    Ok(acc)
}

/// One involution of one Speh block, seen from both sides.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessRow {
    pub block: usize,
    pub involution: Permutation,
    pub label: Permutation,
    pub standard: StandardModule,
    pub ell_v: usize,
    pub ell_v_clan: usize,
    pub q_star: usize,
    /// Exponent of the sign carried by `X(label)` on the GL side.
    pub lhs_exponent: usize,
    pub ok: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub status: Status,
    pub lhs: FormalCharacter,
    pub rhs: FormalCharacter,
    pub diff: FormalCharacter,
    pub q_star: u64,
    pub infinitesimal_character: InfChar,
    pub homogeneous: bool,
    pub selfdual: bool,
    pub witness_table: Vec<WitnessRow>,
}

impl Report {
    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }
}

fn witness_rows(psi: &Validated) -> Result<Vec<WitnessRow>> {
    let mut rows = Vec::new();
    for (k, b) in psi.blocks.iter().enumerate() {
        let flavor = flavor_of(psi.case());
        let q = q_value(GroupFamily::quasisplit_unitary(b.n)) as usize;
        let w0 = Involution::longest(b.n);
        for s in involutions(b.n) {
            let (standard, ell_v) = transfer_of_involution(&s, b.n, b.p, flavor)?;
            let label = w0.perm().compose(s.perm())?;
            let ell_v_clan = ell_v_from_clan(&s);
            // the GL side writes the same module as X(w₀u) with u = s.
            let lhs_exponent = w0.theta_length() + s.theta_length();
            let ok = ell_v == ell_v_clan && (q + ell_v) % 2 == lhs_exponent % 2;
            rows.push(WitnessRow {
                block: k,
                involution: s.into_perm(),
                label,
                standard,
                ell_v,
                ell_v_clan,
                q_star: q,
                lhs_exponent,
                ok,
            });
        }
    }
    Ok(rows)
}

/// Whether every symbol has infinitesimal character `ic`.
pub fn is_homogeneous(f: &FormalCharacter, ic: &InfChar) -> bool {
    f.terms().all(|(s, _)| s.infinitesimal_character() == *ic)
}

/// Checks the GL side against the transfer side, symbol by symbol, and
/// collects the side conditions.
pub fn verify_main_identity(psi: &Validated) -> Result<Report> {
    let lhs = lhs_expansion(psi)?;
    let rhs = composite_expansion(psi)?;
    let diff = lhs.sub(&rhs);
    let ic = psi.infinitesimal_character();
    let (integral, _) = is_integral_regular(&ic);
    let homogeneous = integral && is_homogeneous(&lhs, &ic) && is_homogeneous(&rhs, &ic);
    let selfdual = lhs.terms().chain(rhs.terms()).all(|(s, _)| s.is_selfdual());
    let witness_table = witness_rows(psi)?;
    let ok = diff.is_empty() && !lhs.is_empty() && homogeneous && selfdual && witness_table.iter().all(|w| w.ok);
    Ok(Report {
        status: if ok { Status::Match } else { Status::Mismatch },
        lhs,
        rhs,
        diff,
        q_star: levi_quasisplit(psi).q_star,
        infinitesimal_character: ic,
        homogeneous,
        selfdual,
        witness_table,
    })
}
