use std::ops::{Add, Sub};

use super::poly::ParamPoly;
use crate::error::{Error, Result};
use crate::Scalar;

/// Element of `k[params][[t]] / t^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<K> {
    coeffs: Vec<ParamPoly<K>>,
}

impl<K: Scalar> TruncSeries<K> {
    pub fn zero(n: usize) -> Self {
        Self { coeffs: vec![ParamPoly::zero(); n] }
    }

    /// `t^e` (zero if `e ≥ N`).
    pub fn monomial(e: usize, n: usize) -> Self {
        let mut s = Self::zero(n);
        s.set_coeff(e, ParamPoly::one());
        s
    }

    pub fn from_coeffs(coeffs: Vec<ParamPoly<K>>) -> Self {
        Self { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: usize) -> &ParamPoly<K> {
        &self.coeffs[e]
    }

    pub fn coeffs(&self) -> &[ParamPoly<K>] {
        &self.coeffs
    }

    /// Sets the coefficient of `t^e`; silently drops exponents `≥ N`.
    pub fn set_coeff(&mut self, e: usize, c: ParamPoly<K>) {
        if e < self.coeffs.len() {
            self.coeffs[e] = c;
        }
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, _)| e)
    }

    /// Smallest exponent whose coefficient is not identically zero.
    pub fn generic_order(&self) -> Option<usize> {
        self.support().next()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_zero)
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = Self::zero(n);
        for e in self.support() {
            if e + k < n {
                out.coeffs[e + k] = self.coeffs[e].clone();
            }
        }
        out
    }

    /// Multiply by `t^-k`; terms below `t^k` must vanish. The truncation
    /// order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    pub fn truncate(&self, n: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(n).cloned().collect();
        coeffs.resize(n, ParamPoly::zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &ParamPoly<K>) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly<K>) -> ParamPoly<K>) -> Self {
        Self { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn substitute(&self, var: usize, value: &ParamPoly<K>) -> Self {
        self.map_coeffs(|c| c.substitute(var, value))
    }

    /// Numeric specialization at a parameter point.
    pub fn eval(&self, values: &[K]) -> Vec<K> {
        self.coeffs.iter().map(|c| c.eval(values)).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        series_mul(self, other)
    }

    /// `t^6 - a^2 t^8` style rendering, dropping zero terms.
    pub fn format_with(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for e in self.support() {
            let c = &self.coeffs[e];
            let t = if e == 0 { String::new() } else if e == 1 { "t".into() } else { format!("t^{e}") };
            let body = if let Some(k) = c.as_constant() {
                let abs = k.abs();
                let lead = if abs.is_one() && !t.is_empty() { String::new() } else { abs.to_string() };
                let s = format!("{lead}{t}");
                (k.is_negative(), s)
            } else if c.num_terms() == 1 {
                let txt = c.format_with(names);
                match txt.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest}{t}")),
                    None => (false, format!("{txt}{t}")),
                }
            } else {
                (false, format!("({}){t}", c.format_with(names)))
            };
            let (neg, s) = body;
            if parts.is_empty() {
                parts.push(if neg { format!("-{s}") } else { s });
            } else {
                parts.push(format!("{} {s}", if neg { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Product modulo `t^N`.
pub fn series_mul<K: Scalar>(f: &TruncSeries<K>, g: &TruncSeries<K>) -> Result<TruncSeries<K>> {
    let n = f.truncation();
    if g.truncation() != n {
        return Err(Error::TruncationMismatch(n, g.truncation()));
    }
    let mut out = TruncSeries::zero(n);
    let gs: Vec<usize> = g.support().collect();
    for i in f.support() {
        for &j in &gs {
            if i + j >= n {
                break;
            }
            let prod = &f.coeffs[i] * &g.coeffs[j];
            out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
        }
    }
    Ok(out)
}

impl<K: Scalar> Add<&TruncSeries<K>> for &TruncSeries<K> {
    type Output = TruncSeries<K>;
    fn add(self, rhs: &TruncSeries<K>) -> TruncSeries<K> {
        assert_eq!(self.truncation(), rhs.truncation(), "truncation mismatch");
        TruncSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<K: Scalar> Sub<&TruncSeries<K>> for &TruncSeries<K> {
    type Output = TruncSeries<K>;
    fn sub(self, rhs: &TruncSeries<K>) -> TruncSeries<K> {
        assert_eq!(self.truncation(), rhs.truncation(), "truncation mismatch");
        TruncSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rat, Series};
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        ["a", "b", "c"].iter().map(|s| s.to_string()).collect()
    }

    fn series(n: usize, terms: &[(usize, Poly)]) -> Series {
        let mut s = Series::zero(n);
        for (e, c) in terms {
            s.set_coeff(*e, c.clone());
        }
        s
    }

    #[test]
    fn products() {
        let t3 = Series::monomial(3, 10);
        let t4 = Series::monomial(4, 10);
        assert_eq!(series_mul(&t3, &t4).unwrap(), Series::monomial(7, 10));

        let a = Poly::var(0);
        let f = series(10, &[(3, Poly::one()), (4, a.clone())]);
        let sq = series_mul(&f, &f).unwrap();
        let expect = series(10, &[(6, Poly::one()), (7, a.scale(&Rat::from_integer(2.into()))), (8, a.pow(2))]);
        assert_eq!(sq, expect);

        let g = series(9, &[(3, Poly::one()), (4, a.clone()), (8, Poly::var(1))]);
        let prod = series_mul(&g, &Series::monomial(3, 9)).unwrap();
        assert_eq!(prod, series(9, &[(6, Poly::one()), (7, a)]));
    }

    #[test]
    fn mismatched_truncation() {
        assert_eq!(
            series_mul(&Series::monomial(1, 5), &Series::monomial(1, 6)),
            Err(Error::TruncationMismatch(5, 6))
        );
    }

    #[test]
    fn generic_orders() {
        let a = Poly::var(0);
        let f = series(12, &[(6, Poly::one()), (8, -&a.pow(2))]);
        assert_eq!(f.generic_order(), Some(6));
        assert_eq!(Series::zero(12).generic_order(), None);
        let g = series(12, &[(11, &Poly::var(1) - &a.pow(2))]);
        assert_eq!(g.generic_order(), Some(11));
    }

    #[test]
    fn formatting() {
        let a = Poly::var(0);
        let f = series(12, &[(6, Poly::one()), (8, -&a.pow(2))]);
        assert_eq!(f.format_with(&names()), "t^6 - a^2t^8");
        let g = series(12, &[(9, Poly::one()), (11, &Poly::var(1) - &a.pow(2))]);
        assert_eq!(g.format_with(&names()), "t^9 + (b - a^2)t^11");
        assert_eq!(Series::monomial(0, 3).format_with(&names()), "1");
    }

    fn arb_series(n: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((0..n, 0u32..3, -4i64..5), 0..6).prop_map(move |ts| {
            let mut s = Series::zero(n);
            for (e, d, c) in ts {
                let term = Poly::var(0).pow(d).scale(&Rat::from_integer(c.into()));
                let cur = s.coeff(e).clone();
                s.set_coeff(e, &cur + &term);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn truncation_coherence(f in arb_series(14), g in arb_series(14), n in 1usize..14) {
            let full = series_mul(&f, &g).unwrap().truncate(n);
            let low = series_mul(&f.truncate(n), &g.truncate(n)).unwrap();
            prop_assert_eq!(full, low);
        }

        #[test]
        fn series_ring_axioms(f in arb_series(10), g in arb_series(10), h in arb_series(10)) {
            prop_assert_eq!(series_mul(&f, &g).unwrap(), series_mul(&g, &f).unwrap());
            let l = series_mul(&series_mul(&f, &g).unwrap(), &h).unwrap();
            let r = series_mul(&f, &series_mul(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(l, r);
            let d1 = series_mul(&f, &(&g + &h)).unwrap();
            let d2 = &series_mul(&f, &g).unwrap() + &series_mul(&f, &h).unwrap();
            prop_assert_eq!(d1, d2);
        }
    }
}
