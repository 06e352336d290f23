//! Brute-force cross-checks, independent of the main pipeline's search
//! bounds and data structures.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cells::{canonical_family, CanonicalFamily};
use crate::gamma::{enumerate_colength, GammaModule};
use crate::semigroup::NumericalSemigroup;
use crate::Scalar;

fn is_order_ideal(gamma: &NumericalSemigroup, gaps: &BTreeSet<u32>) -> bool {
    gaps.iter().all(|&x| {
        gamma.generators().iter().all(|&a| x < a || !gamma.contains((x - a) as i64) || gaps.contains(&(x - a)))
    })
}

/// Gap sets of colength `r`, grown one element at a time from the empty set.
/// Each step adds a minimal element of the complement, so no bound is needed.
pub fn gap_sets_by_growth(gamma: &NumericalSemigroup, r: usize) -> Vec<Vec<u32>> {
    let mut level: BTreeSet<BTreeSet<u32>> = BTreeSet::from([BTreeSet::new()]);
    for _ in 0..r {
        let mut next = BTreeSet::new();
        for gaps in &level {
            let top = gaps.iter().max().copied().unwrap_or(0);
            let limit = top + gamma.generators().iter().max().copied().unwrap_or(1) + 1;
            for x in 0..limit {
                if !gamma.contains(x as i64) || gaps.contains(&x) {
                    continue;
                }
                let mut g = gaps.clone();
                g.insert(x);
                if is_order_ideal(gamma, &g) {
                    next.insert(g);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|g| g.into_iter().collect()).collect()
}

/// Gap sets of colength `r` by testing every `r`-subset of
/// `Γ ∩ [0, (r-1) a]`, `a` the largest generator: writing a gap as a sum of
/// `k` generators, its partial sums are `k + 1` distinct gaps, so `k < r`.
pub fn gap_sets_by_subsets(gamma: &NumericalSemigroup, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let top = gamma.generators().iter().max().copied().unwrap_or(1);
    let pool = gamma.elements_below((r as u32 - 1) * top + 1);
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..r).collect();
    if pool.len() < r {
        return out;
    }
    loop {
        let set: BTreeSet<u32> = idx.iter().map(|&i| pool[i]).collect();
        if is_order_ideal(gamma, &set) {
            out.push(set.into_iter().collect());
        }
        let Some(k) = (0..r).rev().find(|&k| idx[k] != k + pool.len() - r) else { break };
        idx[k] += 1;
        for j in k + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out.sort();
    out
}

/// Minimal generators of `S`, by checking every element below the conductor
/// plus the largest generator of Γ.
pub fn brute_min_generators(gamma: &NumericalSemigroup, s: &GammaModule) -> Vec<u32> {
    let bound = s.conductor() + gamma.generators().iter().max().copied().unwrap_or(1);
    let elems: Vec<u32> = (0..bound).filter(|&x| s.contains(x as i64)).collect();
    elems
        .iter()
        .copied()
        .filter(|&x| !elems.iter().any(|&y| y < x && gamma.contains((x - y) as i64)))
        .collect()
}

/// Orders below `bound` of the ideal of `k[[Γ]]` generated by power series
/// given as coefficient vectors (index = exponent of `t`). Exact as long as
/// every series is known to at least `bound` terms.
pub fn order_set<K: Scalar>(gamma: &NumericalSemigroup, gens: &[Vec<K>], bound: usize) -> BTreeSet<u32> {
    let mut pivots: Vec<Option<Vec<K>>> = vec![None; bound];
    for g in gens {
        for s in gamma.elements_below(bound as u32) {
            let s = s as usize;
            let mut row = vec![K::zero(); bound];
            for (i, c) in g.iter().enumerate().take(bound.saturating_sub(s)) {
                row[i + s] = c.clone();
            }
            while let Some(o) = row.iter().position(|c| !c.is_zero()) {
                match &pivots[o] {
                    Some(p) => {
                        let f = row[o].clone() / p[o].clone();
                        for (x, y) in row.iter_mut().zip(p).skip(o) {
                            *x = x.clone() - y.clone() * f.clone();
                        }
                    }
                    None => {
                        pivots[o] = Some(row);
                        break;
                    }
                }
            }
        }
    }
    pivots.iter().enumerate().filter(|(_, p)| p.is_some()).map(|(i, _)| i as u32).collect()
}

/// Random nonzero small rationals.
pub fn random_values<K: Scalar>(rng: &mut impl Rng, n: usize) -> Vec<K> {
    (0..n)
        .map(|_| {
            let num = loop {
                let x: i64 = rng.gen_range(-20..=20);
                if x != 0 {
                    break x;
                }
            };
            K::from_ratio(num, rng.gen_range(1..=7))
        })
        .collect()
}

/// Compare the Γ-module of a specialized family with the expected one below
/// the family's truncation. `None` on agreement.
pub fn specialization_mismatch<K: Scalar>(
    gamma: &NumericalSemigroup,
    family: &CanonicalFamily<K>,
    values: &[K],
) -> Option<(Vec<u32>, Vec<u32>)> {
    let module = family.module();
    let bound = family.truncation().min((module.conductor() + gamma.conductor()) as usize + 1);
    let got: Vec<u32> = order_set(gamma, &family.specialize(values), bound).into_iter().collect();
    let want: Vec<u32> = (0..bound as u32).filter(|&x| module.contains(x as i64)).collect();
    (got != want).then_some((want, got))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub r: u32,
    pub kind: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OracleDiff {
    pub entries: Vec<DiffEntry>,
}

impl OracleDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn push(&mut self, r: u32, kind: &str, detail: String) {
        self.entries.push(DiffEntry { r, kind: kind.to_string(), detail });
    }
}

/// Re-derive, for every `r <= r_max`, the gap sequences, minimal generators
/// and the Γ-module of each family at `samples` random points, and report
/// every disagreement with the main pipeline.
pub fn oracle_check<K: Scalar>(gamma: &NumericalSemigroup, r_max: u32, seed: u64, samples: usize) -> OracleDiff {
    let mut diff = OracleDiff::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in 1..=r_max {
        let modules = enumerate_colength(gamma, r as usize);
        let ours: Vec<Vec<u32>> = modules.iter().map(|m| m.gaps().to_vec()).collect();
        let theirs = gap_sets_by_growth(gamma, r as usize);
        if ours != theirs {
            diff.push(r, "gap sequences", format!("pipeline {ours:?}, oracle {theirs:?}"));
        }
        for m in &modules {
            let brute = brute_min_generators(gamma, m);
            if brute != m.min_generators() {
                diff.push(r, "minimal generators", format!("{:?}: pipeline {:?}, oracle {brute:?}", m.gaps(), m.min_generators()));
            }
            let family: CanonicalFamily<K> = match canonical_family(gamma, m) {
                Ok(f) => f,
                Err(e) => {
                    diff.push(r, "family", format!("{:?}: {e}", m.gaps()));
                    continue;
                }
            };
            for _ in 0..samples {
                let values = random_values::<K>(&mut rng, family.dimension());
                if let Some((want, got)) = specialization_mismatch(gamma, &family, &values) {
                    diff.push(r, "specialization", format!("{:?}: expected orders {want:?}, got {got:?}", m.gaps()));
                    break;
                }
            }
        }
    }
    diff
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn growth_matches_subsets() {
        for (gens, r_max) in [(&[2, 3][..], 2), (&[3, 4], 6), (&[3, 5], 6), (&[4, 5], 5)] {
            let g = sg(gens);
            for r in 0..=r_max {
                assert_eq!(gap_sets_by_growth(&g, r), gap_sets_by_subsets(&g, r), "{gens:?} r={r}");
            }
        }
    }

    #[test]
    fn e6_r6_gap_sets() {
        let got = gap_sets_by_subsets(&sg(&[3, 4]), 6);
        assert_eq!(got.len(), 5);
        assert!(got.contains(&vec![0, 3, 4, 6, 7, 8]));
    }

    fn series(terms: &[(usize, i64)], n: usize) -> Vec<Rat> {
        let mut v = vec![Rat::from_integer(0.into()); n];
        for &(e, c) in terms {
            v[e] = Rat::from_integer(c.into());
        }
        v
    }

    #[test]
    fn order_set_of_known_ideal() {
        let g = sg(&[3, 4]);
        let got: Vec<u32> = order_set(&g, &[series(&[(4, 1)], 20), series(&[(6, 1)], 20)], 12).into_iter().collect();
        assert_eq!(got, vec![4, 6, 7, 8, 9, 10, 11]);
    }

    #[test]
    fn cancellation_is_seen() {
        let g = sg(&[3, 4]);
        // t^3 (t^3 + t^4) - t^6 has order 7
        let got = order_set(&g, &[series(&[(3, 1), (4, 1)], 12), series(&[(6, 1)], 12)], 12);
        assert!(got.contains(&7) && !got.contains(&5));
    }

    #[test]
    fn small_cases_are_clean() {
        let g = sg(&[2, 3]);
        assert!(oracle_check::<Rat>(&g, 4, 1, 5).is_empty());
        let g = sg(&[3, 4]);
        assert!(oracle_check::<Rat>(&g, 6, 7, 3).is_empty());
    }

    #[test]
    fn wrong_family_is_caught() {
        let g = sg(&[3, 4]);
        let m = GammaModule::from_gaps(&g, &[0, 3, 4, 6, 7, 8]).unwrap();
        let fam: CanonicalFamily<Rat> = canonical_family(&g, &m).unwrap();
        let mut gens = fam.specialize(&random_values(&mut ChaCha8Rng::seed_from_u64(3), fam.dimension()));
        gens[0][8] = Rat::from_integer(1.into());
        let got = order_set(&g, &gens, 14);
        let want: BTreeSet<u32> = (0..14).filter(|&x| m.contains(x as i64)).collect();
        assert_ne!(got, want);
    }
}
