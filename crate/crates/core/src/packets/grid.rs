//! Desk-scale parameter grids and the suite that sweeps them.

use itertools::Itertools;
use serde::Serialize;

use super::expand::verify_main_identity;
use super::group::Case;
use super::param::{validate_aj, AJParameter, SpehBlock, TailBlock, TailEps, Validated};
use crate::Result;

/// Single Speh parameters, `n ≤ max_n`, three values of `p` per case:
/// `p ∈ {n, n+2, n+4}` in case B, `p ∈ {n-1, n+1, n+3}` (positive) in the
/// even orthogonal case, which is C for even `n` and D for odd `n`.
pub fn elementary_grid(max_n: usize) -> Vec<AJParameter> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ni = n as i64;
        for p in [ni, ni + 2, ni + 4] {
            out.push(AJParameter::new(Case::B, n, vec![SpehBlock::new(p, n)], TailBlock::default()).unwrap());
        }
        let case = if n % 2 == 0 { Case::C } else { Case::D };
        let ps: Vec<i64> = [ni - 1, ni + 1, ni + 3, ni + 5].into_iter().filter(|p| *p >= 1).take(3).collect();
        for p in ps {
            out.push(AJParameter::new(case, n, vec![SpehBlock::new(p, n)], TailBlock::default()).unwrap());
        }
    }
    out
}

fn block_candidates(case: Case, max_n: usize, max_p: i64) -> Vec<SpehBlock> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for p in 1..=max_p {
            let odd = (p + n as i64) % 2 == 1;
            let parity = match case {
                Case::B => !odd,
                Case::U => p % 2 == 0 && p > n as i64 - 1,
                _ => odd,
            };
            if parity && p >= n as i64 - 1 {
                out.push(SpehBlock::new(p, n));
            }
        }
    }
    out
}

fn tail_options(case: Case, n: usize) -> Vec<TailBlock> {
    if n == 0 {
        return vec![TailBlock::default()];
    }
    match case {
        Case::A => vec![TailBlock { n, eps: None }],
        Case::B => (0..2).map(|e| TailBlock { n, eps: Some(TailEps::Single(e)) }).collect(),
        _ => (0..2)
            .cartesian_product(0..2)
            .map(|(a, b)| TailBlock { n, eps: Some(TailEps::Pair(a, b)) })
            .collect(),
    }
}

fn block_sets(cands: &[SpehBlock], k: usize) -> impl Iterator<Item = Vec<SpehBlock>> + '_ {
    cands
        .iter()
        .copied()
        .combinations(k)
        .filter(|bs| bs.iter().map(|b| b.p).all_unique())
}

/// Every valid parameter of cases A–D with `n_i ≤ max_n`, distinct
/// `p_i ≤ max_p`, up to three Speh blocks over a rank-0 tail and up to two
/// over a tail of rank 1 or 2.
pub fn composite_grid(max_n: usize, max_p: i64) -> Vec<Validated> {
    let mut out = Vec::new();
    for case in [Case::A, Case::B, Case::C, Case::D] {
        let cands = block_candidates(case, max_n, max_p);
        for (tail_n, max_blocks) in [(0usize, 3usize), (1, 2), (2, 2)] {
            for k in 1..=max_blocks {
                for bs in block_sets(&cands, k) {
                    let rank = bs.iter().map(|b| b.n).sum::<usize>() + tail_n;
                    for tail in tail_options(case, tail_n) {
                        let psi = AJParameter::new(case, rank, bs.clone(), tail).unwrap();
                        if let Ok(v) = validate_aj(&psi) {
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Valid unitary parameters with `N_i ≤ max_n`, even `p_i ≤ max_p`, one or
/// two blocks.
pub fn unitary_grid(max_n: usize, max_p: i64) -> Vec<Validated> {
    let cands = block_candidates(Case::U, max_n, max_p);
    let mut out = Vec::new();
    for k in 1..=2 {
        for bs in block_sets(&cands, k) {
            let n = bs.iter().map(|b| b.n).sum();
            if let Ok(v) = validate_aj(&AJParameter::unitary(n, bs).unwrap()) {
                out.push(v);
            }
        }
    }
    out
}

/// One line of the suite summary.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteLine {
    pub grid: String,
    pub parameters: usize,
    pub matched: usize,
    pub symbols: usize,
}

impl SuiteLine {
    pub fn passed(&self) -> bool {
        self.parameters > 0 && self.parameters == self.matched
    }
}

fn sweep(name: &str, grid: &[Validated]) -> Result<SuiteLine> {
    let mut matched = 0;
    let mut symbols = 0;
    for v in grid {
        let rep = verify_main_identity(v)?;
        symbols += rep.lhs.len();
        if rep.is_match() {
            matched += 1;
        }
    }
    Ok(SuiteLine { grid: name.into(), parameters: grid.len(), matched, symbols })
}

/// Runs the elementary, composite and unitary grids at acceptance size.
pub fn seed_suite() -> Result<Vec<SuiteLine>> {
    let elementary: Vec<Validated> = elementary_grid(6)
        .iter()
        .map(super::param::validated)
        .collect::<Result<_>>()?;
    Ok(vec![
        sweep("elementary", &elementary)?,
        sweep("composite", &composite_grid(3, 15))?,
        sweep("unitary", &unitary_grid(3, 8))?,
    ])
}
