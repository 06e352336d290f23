//! Gamma-modules `S ⊆ Γ` of finite colength and their Delta-sets.
//!
//! A module is stored through its gap sequence `G(S) = Γ \ S`, which is an
//! order ideal of `(Γ, ≤_Γ)` where `x ≤_Γ y` iff `y - x ∈ Γ`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaModule {
    #[serde(skip)]
    ambient: NumericalSemigroup,
    gaps: Vec<u32>,
    min_generators: Vec<u32>,
    conductor: u32,
}

impl GammaModule {
    /// Build the module `Γ \ gaps`. Fails if `gaps` is not an order ideal of Γ.
    pub fn from_gaps(ambient: &NumericalSemigroup, gaps: &[u32]) -> Result<Self> {
        let mut sorted = gaps.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let set: BTreeSet<u32> = sorted.iter().copied().collect();
        for &g in &sorted {
            if !ambient.contains(g as i64) {
                return Err(Error::InvalidArgument(format!("{g} is not in {}", ambient.label())));
            }
            for &a in ambient.generators() {
                if g >= a && ambient.contains((g - a) as i64) && !set.contains(&(g - a)) {
                    return Err(Error::InvalidArgument(format!(
                        "gap set {sorted:?} is not closed under Γ-subtraction at {g}"
                    )));
                }
            }
        }
        let conductor = sorted.last().map_or(0, |&g| g + 1);
        let min_generators = compute_min_generators(ambient, &set, conductor);
        Ok(Self { ambient: ambient.clone(), gaps: sorted, min_generators, conductor })
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// `G(S) = Γ \ S`, ascending.
    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn min_generators(&self) -> &[u32] {
        &self.min_generators
    }

    pub fn colength(&self) -> usize {
        self.gaps.len()
    }

    /// Least `c` with `Γ ∩ [c, ∞) ⊆ S`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn contains(&self, n: i64) -> bool {
        self.ambient.contains(n) && self.gaps.binary_search(&(n as u32)).is_err()
    }

    pub fn is_gap(&self, n: i64) -> bool {
        n >= 0 && self.gaps.binary_search(&(n as u32)).is_ok()
    }

    pub fn min_element(&self) -> u32 {
        self.min_generators[0]
    }

    /// Elements of S in `[0, bound)`, ascending.
    pub fn elements_below(&self, bound: u32) -> Vec<u32> {
        (0..bound).filter(|&n| self.contains(n as i64)).collect()
    }

    pub fn delta_set(&self, r: u32) -> Result<DeltaSet> {
        delta_set(self, r)
    }
}

fn compute_min_generators(ambient: &NumericalSemigroup, gaps: &BTreeSet<u32>, conductor: u32) -> Vec<u32> {
    let in_s = |n: u32| ambient.contains(n as i64) && !gaps.contains(&n);
    // Minimal generators lie below conductor + max generator.
    let bound = conductor + ambient.generators().last().copied().unwrap_or(1);
    (0..bound)
        .filter(|&s| in_s(s))
        .filter(|&s| ambient.generators().iter().all(|&a| s < a || !in_s(s - a)))
        .collect()
}

/// The unique minimal generating set of S as a Γ-module.
pub fn minimal_generators(s: &GammaModule) -> Vec<u32> {
    s.min_generators.clone()
}

/// Search bound used by [`enumerate_colength`].
pub fn enumeration_bound(gamma: &NumericalSemigroup, r: usize) -> u32 {
    gamma.conductor() + r as u32 * gamma.min_generator()
}

/// All Γ-modules of colength `r`, sorted lexicographically by gap sequence.
pub fn enumerate_colength(gamma: &NumericalSemigroup, r: usize) -> Vec<GammaModule> {
    enumerate_with_bound(gamma, r, enumeration_bound(gamma, r))
}

/// Depth-first search over order ideals of size `r` inside `Γ ∩ [0, bound)`.
///
/// Every order ideal can be built by adding its elements in increasing order,
/// since all Γ-predecessors of an element are smaller, so each ideal is
/// produced exactly once.
pub fn enumerate_with_bound(gamma: &NumericalSemigroup, r: usize, bound: u32) -> Vec<GammaModule> {
    let candidates = gamma.elements_below(bound);
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(r);
    let mut in_ideal = vec![false; bound as usize];
    dfs(gamma, &candidates, 0, r, &mut current, &mut in_ideal, &mut out);
    out.sort();
    out.into_iter()
        .map(|gaps| GammaModule::from_gaps(gamma, &gaps).expect("search only yields order ideals"))
        .collect()
}

fn dfs(
    gamma: &NumericalSemigroup,
    candidates: &[u32],
    start: usize,
    r: usize,
    current: &mut Vec<u32>,
    in_ideal: &mut [bool],
    out: &mut Vec<Vec<u32>>,
) {
    if current.len() == r {
        out.push(current.clone());
        return;
    }
    for idx in start..candidates.len() {
        let x = candidates[idx];
        let addable = gamma
            .generators()
            .iter()
            .all(|&a| x < a || !gamma.contains((x - a) as i64) || in_ideal[(x - a) as usize]);
        if !addable {
            continue;
        }
        current.push(x);
        in_ideal[x as usize] = true;
        dfs(gamma, candidates, idx + 1, r, current, in_ideal, out);
        in_ideal[x as usize] = false;
        current.pop();
    }
}

/// The shifted order set `(S - r) ∩ [0, 2δ)` of an ideal in `M_r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DeltaSet {
    elements: Vec<u32>,
}

impl DeltaSet {
    /// Validate a candidate Delta-set against Γ.
    pub fn new(gamma: &NumericalSemigroup, elements: &[u32]) -> Result<Self> {
        let delta = gamma.delta();
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != delta {
            return Err(Error::CardinalityMismatch { got: sorted.len(), expected: delta });
        }
        let top = 2 * delta as u32;
        if sorted.iter().any(|&e| e >= top) {
            return Err(Error::InvalidArgument(format!("{sorted:?} leaves [0, {top})")));
        }
        for &e in &sorted {
            for &a in gamma.generators() {
                let s = e + a;
                if s < top && sorted.binary_search(&s).is_err() {
                    return Err(Error::InvalidArgument(format!("{sorted:?} ∪ [{top}, ∞) is not Γ-closed")));
                }
            }
        }
        Ok(Self { elements: sorted })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn delta_set(s: &GammaModule, r: u32) -> Result<DeltaSet> {
    let gamma = s.ambient();
    let min = s.min_element();
    if min < r {
        return Err(Error::ShiftUnderflow { min, r });
    }
    let top = r + 2 * gamma.delta() as u32;
    let elements: Vec<u32> = s.elements_below(top).into_iter().map(|x| x - r).collect();
    if elements.len() != gamma.delta() {
        return Err(Error::CardinalityMismatch { got: elements.len(), expected: gamma.delta() });
    }
    DeltaSet::new(gamma, &elements)
}

/// Every valid Delta-set of Γ, i.e. the cells of the whole space, in
/// lexicographic order.
pub fn all_delta_sets(gamma: &NumericalSemigroup) -> Vec<DeltaSet> {
    let delta = gamma.delta();
    let top = 2 * delta as u32;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << top) {
        if mask.count_ones() as usize != delta {
            continue;
        }
        let elements: Vec<u32> = (0..top).filter(|&i| mask >> i & 1 == 1).collect();
        if let Ok(d) = DeltaSet::new(gamma, &elements) {
            out.push(d);
        }
    }
    out.sort();
    out
}
