//! Numerical semigroups `<a1, ..., am>`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A numerical semigroup given by generators with gcd 1.
///
/// Membership is a boolean sieve up to `conductor + margin`; anything at or
/// above the conductor is a member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    gaps: Vec<u32>,
    conductor: u32,
    #[serde(skip)]
    sieve: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut generators: Vec<u32> = gens
            .iter()
            .map(|&g| u32::try_from(g).map_err(|_| Error::InvalidArgument(format!("generator {g} too large"))))
            .collect::<Result<_>>()?;
        generators.sort_unstable();
        generators.dedup();
        let gcd = generators.iter().fold(0u32, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprime { gens: generators, gcd });
        }
        let max_gen = *generators.last().unwrap();
        let margin = 4 * max_gen as usize;

        // Run a sieve until min(gens) consecutive members show up; from there on
        // everything is a member.
        let min_gen = generators[0] as usize;
        let mut member = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < min_gen {
            n += 1;
            let hit = generators.iter().any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let gaps: Vec<u32> = (0..member.len()).filter(|&i| !member[i]).map(|i| i as u32).collect();
        let conductor = gaps.last().map_or(0, |&g| g + 1);
        member.resize(conductor as usize + margin, true);
        Ok(Self { generators, gaps, conductor, sieve: member })
    }

    /// Rebuild the sieve with an explicit extra margin above the conductor.
    pub fn with_sieve_margin(&self, margin: usize) -> Self {
        let mut sieve = vec![false; self.conductor as usize + margin];
        sieve[0] = true;
        for n in 1..sieve.len() {
            sieve[n] = self.generators.iter().any(|&g| (g as usize) <= n && sieve[n - g as usize]);
        }
        Self { sieve, ..self.clone() }
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn delta(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn min_generator(&self) -> u32 {
        self.generators[0]
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n >= self.conductor as i64 {
            return true;
        }
        self.sieve[n as usize]
    }

    /// Members of the semigroup in `[0, bound)`, ascending.
    pub fn elements_below(&self, bound: u32) -> Vec<u32> {
        (0..bound).filter(|&n| self.contains(n as i64)).collect()
    }

    /// `<3,4>`-style label.
    pub fn label(&self) -> String {
        let inner: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        format!("<{}>", inner.join(","))
    }
}

pub fn semigroup_from_generators(gens: &[i64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn e6_and_e8() {
        let e6 = sg(&[3, 4]);
        assert_eq!(e6.gaps(), &[1, 2, 5]);
        assert_eq!((e6.delta(), e6.conductor()), (3, 6));
        let e8 = sg(&[3, 5]);
        assert_eq!(e8.gaps(), &[1, 2, 4, 7]);
        assert_eq!((e8.delta(), e8.conductor()), (4, 8));
    }

    #[test]
    fn trivial_semigroup() {
        let n = sg(&[1]);
        assert!(n.gaps().is_empty());
        assert_eq!((n.delta(), n.conductor()), (0, 0));
        assert!(n.contains(0) && n.contains(7));
    }

    #[test]
    fn membership() {
        let e6 = sg(&[3, 4]);
        assert!(!e6.contains(5));
        assert!(e6.contains(100));
        assert!(!e6.contains(-1));
        assert!(sg(&[3, 5]).contains(8));
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyGenerators));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NonCoprime { gcd: 2, .. })
        ));
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, 0]),
            Err(Error::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn duplicate_and_unsorted_generators() {
        assert_eq!(sg(&[4, 3, 4]).generators(), &[3, 4]);
    }
}
