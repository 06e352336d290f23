//! Schubert indices relative to the flag `V_i = t^(2δ-i) k[[t]] / t^(2δ)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::DeltaSet;

/// `(a_1, ..., a_δ)` with `δ ≥ a_1 ≥ ... ≥ a_δ ≥ 0`, stored largest first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SchubertIndex(Vec<u32>);

impl SchubertIndex {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        let delta = a.len() as u32;
        let ok = a.first().is_none_or(|&x| x <= delta) && a.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(a))
        } else {
            Err(Error::InvalidArgument(format!("{a:?} is not a Schubert index")))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "W_{{{}}}", parts.join(","))
    }
}

/// `a_{δ-i+1} = b_i - i + 1` for `Δ = {b_1 < ... < b_δ}`.
pub fn schubert_index(delta: &DeltaSet) -> Result<SchubertIndex> {
    let b = delta.elements();
    let n = b.len();
    let mut a = vec![0u32; n];
    for (i, &bi) in b.iter().enumerate() {
        // i is zero-based here, so b_i - i + 1 becomes bi - i.
        let v = bi
            .checked_sub(i as u32)
            .ok_or_else(|| Error::MalformedDelta(b.to_vec()))?;
        a[n - 1 - i] = v;
    }
    SchubertIndex::new(a).map_err(|_| Error::MalformedDelta(b.to_vec()))
}

/// True iff `W_b ⊆ closure(W_a)`, i.e. `b_i ≥ a_i` for all `i`.
pub fn closure_leq(a: &SchubertIndex, b: &SchubertIndex) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(a.len(), b.len()));
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| y >= x))
}

/// Componentwise order on sorted index sets: `x_i ≥ y_i` for all `i`.
pub(crate) fn gale_geq(x: &[u32], y: &[u32]) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(p, q)| p >= q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::all_delta_sets;
    use crate::semigroup::NumericalSemigroup;

    fn idx(v: &[u32]) -> SchubertIndex {
        SchubertIndex::new(v.to_vec()).unwrap()
    }

    fn of(gens: &[i64], d: &[u32]) -> Vec<u32> {
        let g = NumericalSemigroup::from_generators(gens).unwrap();
        schubert_index(&DeltaSet::new(&g, d).unwrap()).unwrap().parts().to_vec()
    }

    #[test]
    fn index_examples() {
        assert_eq!(of(&[3, 4], &[1, 4, 5]), vec![3, 3, 1]);
        assert_eq!(of(&[3, 5], &[0, 3, 5, 6]), vec![3, 3, 2, 0]);
        assert_eq!(of(&[3, 5], &[4, 5, 6, 7]), vec![4, 4, 4, 4]);
    }

    #[test]
    fn closure_examples() {
        assert!(closure_leq(&idx(&[2, 2, 0]), &idx(&[3, 3, 1])).unwrap());
        assert!(!closure_leq(&idx(&[3, 3, 1]), &idx(&[2, 2, 0])).unwrap());
        assert!(closure_leq(&idx(&[3, 3, 1]), &idx(&[3, 3, 1])).unwrap());
        assert_eq!(
            closure_leq(&idx(&[1]), &idx(&[1, 1])),
            Err(Error::DimensionMismatch(1, 2))
        );
    }

    #[test]
    fn display() {
        assert_eq!(idx(&[3, 3, 1]).to_string(), "W_{3,3,1}");
    }

    fn all_indices(delta: u32) -> Vec<SchubertIndex> {
        fn rec(len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<SchubertIndex>) {
            if cur.len() == len {
                out.push(SchubertIndex(cur.clone()));
                return;
            }
            for v in 0..=max {
                cur.push(v);
                rec(len, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(delta as usize, delta, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn closure_order_is_partial_order() {
        for delta in 1..=4 {
            let all = all_indices(delta);
            for a in &all {
                assert!(closure_leq(a, a).unwrap());
                for b in &all {
                    let ab = closure_leq(a, b).unwrap();
                    if ab && closure_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if closure_leq(b, c).unwrap() {
                            assert!(closure_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn injective_on_delta_sets() {
        for gens in [&[2i64, 3][..], &[3, 4], &[3, 5], &[2, 5], &[4, 5, 6, 7]] {
            let g = NumericalSemigroup::from_generators(gens).unwrap();
            if g.delta() > 4 {
                continue;
            }
            let ds = all_delta_sets(&g);
            let mut idxs: Vec<_> = ds.iter().map(|d| schubert_index(d).unwrap()).collect();
            idxs.sort();
            idxs.dedup();
            assert_eq!(idxs.len(), ds.len());
        }
    }
}
