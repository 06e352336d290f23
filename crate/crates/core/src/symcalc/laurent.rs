use std::collections::BTreeMap;

use super::poly::ParamPoly;
use crate::error::{Error, Result};
use crate::Scalar;

/// Laurent polynomial in an auxiliary variable `s` with [`ParamPoly`]
/// coefficients, keyed by the `s`-exponent.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SPoly<K> {
    terms: BTreeMap<i64, ParamPoly<K>>,
}

impl<K: Scalar> SPoly<K> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `c * s^e`.
    pub fn term(e: i64, c: ParamPoly<K>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: i64, c: ParamPoly<K>) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest `s`-exponent, `None` for the zero polynomial.
    pub fn order(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, e: i64) -> ParamPoly<K> {
        self.terms.get(&e).cloned().unwrap_or_else(ParamPoly::zero)
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Apply `x_j -> x_j * s^(e_j)` to a parameter polynomial; `exps[j]` is
    /// the exponent attached to `x_j` (missing entries mean 0).
    pub fn from_scaling(p: &ParamPoly<K>, exps: &[i64]) -> Self {
        let mut out = Self::zero();
        for (m, c) in p.terms() {
            let e: i64 = m
                .exponents()
                .iter()
                .enumerate()
                .map(|(j, &k)| exps.get(j).copied().unwrap_or(0) * k as i64)
                .sum();
            out.add_term(e, ParamPoly::term(m.clone(), c.clone()));
        }
        out
    }
}

/// Projective `s -> 0` limit of a vector: divide by `s^m` for the minimal
/// order `m` over all entries, then set `s = 0`.
pub fn limit_s_to_zero<K: Scalar>(v: &[SPoly<K>]) -> Result<Vec<ParamPoly<K>>> {
    let m = v.iter().filter_map(SPoly::order).min().ok_or(Error::IdenticallyZeroVector)?;
    Ok(v.iter().map(|p| p.coeff(m)).collect())
}

/// Limit of `coords` under `x_j -> x_j * s^(e_j)`, without materializing the
/// Laurent polynomials. Returns the minimal order and the limit vector.
pub fn scaled_limit<K: Scalar>(coords: &[ParamPoly<K>], exps: &[i64]) -> Result<(i64, Vec<ParamPoly<K>>)> {
    let weight = |m: &super::Monomial| -> i64 {
        m.exponents()
            .iter()
            .enumerate()
            .map(|(j, &k)| exps.get(j).copied().unwrap_or(0) * k as i64)
            .sum()
    };
    let m = coords
        .iter()
        .flat_map(|p| p.terms().map(|(mono, _)| weight(mono)))
        .min()
        .ok_or(Error::IdenticallyZeroVector)?;
    let out = coords
        .iter()
        .map(|p| {
            let mut q = ParamPoly::zero();
            for (mono, c) in p.terms() {
                if weight(mono) == m {
                    q.add_term(mono.clone(), c.clone());
                }
            }
            q
        })
        .collect();
    Ok((m, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;
    use proptest::prelude::*;

    type S = SPoly<crate::Rat>;

    #[test]
    fn simple_limits() {
        let v = vec![S::term(1, Poly::one()), S::term(0, Poly::one()), S::term(2, Poly::one())];
        assert_eq!(limit_s_to_zero(&v).unwrap(), vec![Poly::zero(), Poly::one(), Poly::zero()]);

        let mu = Poly::var(0);
        let v = vec![S::term(1, mu.clone()), S::term(1, Poly::one()), S::term(3, Poly::one())];
        assert_eq!(limit_s_to_zero(&v).unwrap(), vec![mu, Poly::one(), Poly::zero()]);
    }

    #[test]
    fn zero_vector_has_no_limit() {
        assert_eq!(limit_s_to_zero::<crate::Rat>(&[S::zero(), S::zero()]), Err(Error::IdenticallyZeroVector));
        assert!(scaled_limit::<crate::Rat>(&[Poly::zero()], &[1]).is_err());
    }

    #[test]
    fn scaled_limit_matches_laurent_route() {
        // (1, a, a^2 + b) with a -> a s^-1, b -> b s^-3
        let a = Poly::var(0);
        let b = Poly::var(1);
        let coords = vec![Poly::one(), a.clone(), &a.pow(2) + &b];
        let exps = [-1, -3];
        let (m, lim) = scaled_limit(&coords, &exps).unwrap();
        assert_eq!(m, -3);
        assert_eq!(lim, vec![Poly::zero(), Poly::zero(), b.clone()]);
        let laurent: Vec<S> = coords.iter().map(|p| S::from_scaling(p, &exps)).collect();
        assert_eq!(limit_s_to_zero(&laurent).unwrap(), lim);
    }

    proptest! {
        #[test]
        fn invariant_under_global_s_power(es in prop::collection::vec(-4i64..5, 1..5), k in -3i64..4) {
            let v: Vec<S> = es.iter().enumerate()
                .map(|(i, &e)| S::term(e, Poly::var(i)))
                .collect();
            let shifted: Vec<S> = v.iter().map(|p| p.shift(k)).collect();
            prop_assert_eq!(limit_s_to_zero(&v).unwrap(), limit_s_to_zero(&shifted).unwrap());
        }
    }
}
