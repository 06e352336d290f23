//! Canonical ideal families `J(S)` and their Plücker points.
//!
//! An ideal `I ⊆ O` with Γ-module `S` has a unique reduced basis: for every
//! `s ∈ S` below the conductor of `S` an element `e_s = t^s + Σ λ_c t^c` whose
//! tail sits on gaps `c ∈ Γ \ S` only (everything of order `≥ c_S` lies in
//! `I`). The family seeds each minimal generator of `S` with one unknown per
//! gap above it, derives the other `e_s` by multiplying by `t^γ` and reducing,
//! and then imposes `O`-closure: `t^a e_s` must reduce to `e_{s+a}`. Every
//! failure of closure is a polynomial relation on a gap coefficient, which is
//! solved for one unknown and substituted back, until nothing is left.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gamma::{delta_set, GammaModule};
use crate::semigroup::NumericalSemigroup;
use crate::symcalc::{ParamPoly, TruncSeries};
use crate::Scalar;

/// Where an unknown was seeded: the coefficient of `t^exponent` in the
/// reduced element led by `t^generator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParamSlot {
    pub generator: u32,
    pub exponent: u32,
}

/// One solved relation, kept for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct Elimination<K> {
    /// Gap order at which the relation appeared.
    pub order: u32,
    pub param: usize,
    pub value: ParamPoly<K>,
}

#[derive(Debug, Clone)]
pub struct CanonicalFamily<K> {
    module: GammaModule,
    truncation: usize,
    slots: Vec<ParamSlot>,
    free: Vec<usize>,
    names: Vec<String>,
    eliminations: Vec<Elimination<K>>,
    basis: BTreeMap<u32, TruncSeries<K>>,
    generators: Vec<TruncSeries<K>>,
}

/// `N = c_S + c_Γ + 2δ + 1 + margin`.
pub fn default_truncation(gamma: &NumericalSemigroup, s: &GammaModule, margin: usize) -> usize {
    s.conductor() as usize + gamma.conductor() as usize + 2 * gamma.delta() + 1 + margin
}

pub fn canonical_family<K: Scalar>(gamma: &NumericalSemigroup, s: &GammaModule) -> Result<CanonicalFamily<K>> {
    canonical_family_truncated(gamma, s, default_truncation(gamma, s, 0))
}

pub fn cell_dimension(gamma: &NumericalSemigroup, s: &GammaModule) -> Result<usize> {
    Ok(canonical_family::<crate::Rat>(gamma, s)?.dimension())
}

pub fn canonical_family_truncated<K: Scalar>(
    gamma: &NumericalSemigroup,
    s: &GammaModule,
    n: usize,
) -> Result<CanonicalFamily<K>> {
    let cs = s.conductor() as usize;
    if n < cs.max(1) {
        return Err(Error::TruncationTooSmall { n, needed: cs.max(1) });
    }
    let builder = Builder::new(gamma, s, n);
    let mut eliminated: BTreeMap<usize, ParamPoly<K>> = BTreeMap::new();
    let mut eliminations = Vec::new();
    loop {
        let seeds = builder.seeds(&eliminated);
        let basis = builder.reduced_basis(&seeds);
        let relations = builder.relations(&basis);
        if relations.is_empty() {
            let free: Vec<usize> = (0..builder.slots.len()).filter(|v| !eliminated.contains_key(v)).collect();
            let names = param_names(builder.slots.len(), &free);
            let generators = builder.presentation(&basis);
            return Ok(CanonicalFamily {
                module: s.clone(),
                truncation: n,
                slots: builder.slots,
                free,
                names,
                eliminations,
                basis,
                generators,
            });
        }
        let solved = relations
            .iter()
            .find_map(|(o, rel)| solve_for_latest(rel).map(|sol| (*o, sol)))
            .or_else(|| relations.iter().find_map(|(o, rel)| vanishing_variable(rel).map(|sol| (*o, sol))));
        let Some((order, (param, value))) = solved else {
            let names = param_names(builder.slots.len(), &[]);
            let (order, relation) = &relations[0];
            return Err(Error::NonTriangularRelation { order: *order, relation: relation.format_with(&names) });
        };
        for v in eliminated.values_mut() {
            *v = v.substitute(param, &value);
        }
        eliminated.insert(param, value.clone());
        eliminations.push(Elimination { order, param, value });
    }
}

/// Solve `rel = 0` for the highest-numbered parameter that occurs linearly
/// with a constant coefficient.
fn solve_for_latest<K: Scalar>(rel: &ParamPoly<K>) -> Option<(usize, ParamPoly<K>)> {
    rel.variables().into_iter().rev().find_map(|v| {
        let (coeff, rest) = rel.split_linear(v)?;
        let k = coeff.as_constant().filter(|k| !k.is_zero())?;
        Some((v, rest.scale(&(-K::one() / k))))
    })
}

/// `c x^k = 0` forces `x = 0` on points.
fn vanishing_variable<K: Scalar>(rel: &ParamPoly<K>) -> Option<(usize, ParamPoly<K>)> {
    let vars = rel.variables();
    (rel.num_terms() == 1 && vars.len() == 1).then(|| (*vars.iter().next().unwrap(), ParamPoly::zero()))
}

/// Free parameters are called a, b, c, ... in slot order; eliminated ones keep
/// a slot-based name that never shows up in final output.
fn param_names(total: usize, free: &[usize]) -> Vec<String> {
    let mut names: Vec<String> = (0..total).map(|i| format!("u{i}")).collect();
    for (k, &v) in free.iter().enumerate() {
        names[v] = if k < 26 { char::from(b'a' + k as u8).to_string() } else { format!("p{k}") };
    }
    names
}

struct Builder<'a> {
    gamma: &'a NumericalSemigroup,
    module: &'a GammaModule,
    n: usize,
    slots: Vec<ParamSlot>,
}

impl<'a> Builder<'a> {
    fn new(gamma: &'a NumericalSemigroup, module: &'a GammaModule, n: usize) -> Self {
        let cs = module.conductor();
        let mut slots = Vec::new();
        for &g in module.min_generators() {
            if g >= cs {
                continue;
            }
            for &c in module.gaps().iter().filter(|&&c| c > g) {
                slots.push(ParamSlot { generator: g, exponent: c });
            }
        }
        Self { gamma, module, n, slots }
    }

    fn conductor(&self) -> u32 {
        self.module.conductor()
    }

    /// Seeded elements `t^g + Σ x t^c`, one per minimal generator below `c_S`.
    fn seeds<K: Scalar>(&self, eliminated: &BTreeMap<usize, ParamPoly<K>>) -> BTreeMap<u32, TruncSeries<K>> {
        let mut out = BTreeMap::new();
        for &g in self.module.min_generators() {
            if g >= self.conductor() {
                continue;
            }
            out.insert(g, TruncSeries::monomial(g as usize, self.n));
        }
        for (id, slot) in self.slots.iter().enumerate() {
            let coeff = eliminated.get(&id).cloned().unwrap_or_else(|| ParamPoly::var(id));
            out.get_mut(&slot.generator).unwrap().set_coeff(slot.exponent as usize, coeff);
        }
        out
    }

    /// Reduced element `e_s` for every `s ∈ S ∩ [0, c_S)`.
    fn reduced_basis<K: Scalar>(&self, seeds: &BTreeMap<u32, TruncSeries<K>>) -> BTreeMap<u32, TruncSeries<K>> {
        let mut basis: BTreeMap<u32, TruncSeries<K>> = BTreeMap::new();
        let mins = self.module.min_generators();
        for s in self.module.elements_below(self.conductor()).into_iter().rev() {
            let elem = match seeds.get(&s) {
                Some(seed) => seed.clone(),
                None => {
                    let g = *mins
                        .iter()
                        .find(|&&g| g <= s && self.gamma.contains((s - g) as i64))
                        .expect("every element of S lies over a minimal generator");
                    self.reduce(seeds[&g].shift_up((s - g) as usize), s, &basis)
                }
            };
            basis.insert(s, elem);
        }
        basis
    }

    /// Clear every non-leading coefficient sitting on an element of S.
    fn reduce<K: Scalar>(
        &self,
        mut f: TruncSeries<K>,
        lead: u32,
        basis: &BTreeMap<u32, TruncSeries<K>>,
    ) -> TruncSeries<K> {
        for e in (lead as usize + 1)..self.n {
            if f.coeff(e).is_zero() || !self.module.contains(e as i64) {
                continue;
            }
            if e as u32 >= self.conductor() {
                f.set_coeff(e, ParamPoly::zero());
            } else {
                let c = f.coeff(e).clone();
                f = &f - &basis[&(e as u32)].scale(&c);
            }
        }
        f
    }

    /// Leading coefficients of `t^a e_s - e_{s+a}` over all pairs, by order.
    fn relations<K: Scalar>(&self, basis: &BTreeMap<u32, TruncSeries<K>>) -> Vec<(u32, ParamPoly<K>)> {
        let mut out: Vec<(u32, ParamPoly<K>)> = Vec::new();
        for (&s, elem) in basis {
            for &a in self.gamma.generators() {
                let target = s + a;
                if target >= self.conductor() {
                    continue;
                }
                let prod = self.reduce(elem.shift_up(a as usize), target, basis);
                let diff = &prod - &basis[&target];
                if let Some(e) = diff.generic_order() {
                    out.push((e as u32, diff.coeff(e).clone()));
                }
            }
        }
        out.sort_by_key(|(o, _)| *o);
        out
    }

    /// Generators in the presentation used for reporting: the minimal
    /// generators of S, plus every reduced `e_s` that is not just the gap part
    /// of `t^γ` times an already listed element.
    fn presentation<K: Scalar>(&self, basis: &BTreeMap<u32, TruncSeries<K>>) -> Vec<TruncSeries<K>> {
        let mins = self.module.min_generators();
        let mut listed: Vec<u32> = Vec::new();
        for (&s, elem) in basis {
            let keep = mins.contains(&s)
                || !listed.iter().any(|&b| {
                    b < s && self.gamma.contains((s - b) as i64) && {
                        let naive = self.gap_part(&basis[&b].shift_up((s - b) as usize), s);
                        &naive == elem
                    }
                });
            if keep {
                listed.push(s);
            }
        }
        let mut out: Vec<TruncSeries<K>> = listed.iter().map(|s| basis[s].clone()).collect();
        for &g in mins.iter().filter(|&&g| g >= self.conductor()) {
            out.push(TruncSeries::monomial(g as usize, self.n));
        }
        out
    }

    /// `t^lead` plus the coefficients of `f` on gaps of S.
    fn gap_part<K: Scalar>(&self, f: &TruncSeries<K>, lead: u32) -> TruncSeries<K> {
        let mut out = TruncSeries::monomial(lead as usize, self.n);
        for e in f.support() {
            if self.module.is_gap(e as i64) && e as u32 > lead {
                out.set_coeff(e, f.coeff(e).clone());
            }
        }
        out
    }
}

impl<K: Scalar> CanonicalFamily<K> {
    pub fn module(&self) -> &GammaModule {
        &self.module
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    /// Variable ids of the free parameters, in naming order.
    pub fn free_params(&self) -> &[usize] {
        &self.free
    }

    pub fn free_param_names(&self) -> Vec<String> {
        self.free.iter().map(|&v| self.names[v].clone()).collect()
    }

    /// Names indexed by variable id, for [`ParamPoly::format_with`].
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn slot(&self, var: usize) -> ParamSlot {
        self.slots[var]
    }

    pub fn slots(&self) -> &[ParamSlot] {
        &self.slots
    }

    pub fn eliminations(&self) -> &[Elimination<K>] {
        &self.eliminations
    }

    /// Eliminated unknowns as polynomials in the free ones.
    pub fn eliminated(&self) -> BTreeMap<usize, ParamPoly<K>> {
        let mut out = BTreeMap::new();
        for e in &self.eliminations {
            let mut v = e.value.clone();
            for later in &self.eliminations {
                v = v.substitute(later.param, &later.value);
            }
            out.insert(e.param, v);
        }
        out
    }

    pub fn generators(&self) -> &[TruncSeries<K>] {
        &self.generators
    }

    /// Reduced element with leading term `t^s`, for `s ∈ S` below `c_S`.
    pub fn reduced_element(&self, s: u32) -> Option<&TruncSeries<K>> {
        self.basis.get(&s)
    }

    pub fn reduced_basis(&self) -> &BTreeMap<u32, TruncSeries<K>> {
        &self.basis
    }

    pub fn formatted_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.format_with(&self.names)).collect()
    }

    /// Substitute numbers for the free parameters (in [`free_params`] order).
    ///
    /// [`free_params`]: CanonicalFamily::free_params
    pub fn specialize(&self, values: &[K]) -> Vec<Vec<K>> {
        let mut point = vec![K::zero(); self.slots.len()];
        for (&v, x) in self.free.iter().zip(values) {
            point[v] = x.clone();
        }
        self.generators.iter().map(|g| g.eval(&point)).collect()
    }
}

/// A point of `Gr(δ, k[[t]]/t^2δ)` in row-reduced form together with all of
/// its Plücker coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PluckerPoint<K> {
    width: usize,
    pivots: Vec<u32>,
    matrix: Vec<Vec<ParamPoly<K>>>,
    columns: Vec<Vec<u32>>,
    coords: Vec<ParamPoly<K>>,
}

/// Image of the family under `I ↦ t^-r I / t^2δ` followed by Plücker.
pub fn plucker_point<K: Scalar>(family: &CanonicalFamily<K>, r: u32) -> Result<PluckerPoint<K>> {
    let module = family.module();
    let gamma = module.ambient();
    let delta_set = delta_set(module, r)?;
    let width = 2 * gamma.delta();
    let top = r as usize + width;
    let n = family.truncation();
    if n < top {
        return Err(Error::TruncationTooSmall { n, needed: top });
    }
    let mut rows = Vec::new();
    for g in family.generators() {
        let lead = g.generic_order().expect("generators are monic");
        for gam in gamma.elements_below(top.saturating_sub(lead) as u32) {
            let shifted = g.shift_up(gam as usize).shift_down(r as usize).expect("order ≥ r");
            rows.push(shifted.coeffs()[..width].to_vec());
        }
    }
    let (matrix, pivots) = rref_constant_pivots(rows, width)?;
    let pivots: Vec<u32> = pivots.into_iter().map(|p| p as u32).collect();
    if pivots != delta_set.elements() {
        let column = pivots
            .iter()
            .zip(delta_set.elements())
            .find(|(p, d)| p != d)
            .map_or(pivots.len().min(delta_set.len()), |(p, _)| *p as usize);
        return Err(Error::PivotLoss { column });
    }
    Ok(PluckerPoint::from_matrix(matrix, pivots, width))
}

/// Row reduction that divides only by nonzero constants. Returns the nonzero
/// rows in reduced echelon form and their pivot columns.
pub fn rref_constant_pivots<K: Scalar>(
    mut rows: Vec<Vec<ParamPoly<K>>>,
    width: usize,
) -> Result<(Vec<Vec<ParamPoly<K>>>, Vec<usize>)> {
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut pivots = Vec::new();
    for col in 0..width {
        let free_rows: Vec<usize> = (0..rows.len()).filter(|i| !pivot_rows.contains(i)).collect();
        let Some(&p) = free_rows.iter().find(|&&i| rows[i][col].is_nonzero_constant()) else {
            if free_rows.iter().any(|&i| !rows[i][col].is_zero()) {
                return Err(Error::PivotLoss { column: col });
            }
            continue;
        };
        let inv = K::one() / rows[p][col].as_constant().unwrap();
        rows[p] = rows[p].iter().map(|x| x.scale(&inv)).collect();
        let prow = rows[p].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == p || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &(y * &f);
                }
            }
        }
        pivot_rows.push(p);
        pivots.push(col);
    }
    let matrix = pivot_rows.iter().map(|&i| rows[i].clone()).collect();
    Ok((matrix, pivots))
}

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub fn lex_subsets(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i as u32);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All maximal minors of a `k × n` matrix, indexed like [`lex_subsets`].
pub fn maximal_minors<K: Scalar>(matrix: &[Vec<ParamPoly<K>>], n: usize) -> Vec<ParamPoly<K>> {
    let k = matrix.len();
    // level[mask] = minor of the bottom rows on the columns in mask
    let mut level: BTreeMap<u64, ParamPoly<K>> = BTreeMap::new();
    level.insert(0, ParamPoly::one());
    for row in (0..k).rev() {
        let mut next: BTreeMap<u64, ParamPoly<K>> = BTreeMap::new();
        for (&mask, minor) in &level {
            if minor.is_zero() {
                continue;
            }
            for col in 0..n {
                if mask >> col & 1 == 1 || matrix[row][col].is_zero() {
                    continue;
                }
                // Expanding along the top row: the sign counts the chosen
                // columns to the left of `col`.
                let left = (mask & ((1u64 << col) - 1)).count_ones();
                let term = &matrix[row][col] * minor;
                let entry = next.entry(mask | 1 << col).or_insert_with(ParamPoly::zero);
                *entry = if left.is_multiple_of(2) { &*entry + &term } else { &*entry - &term };
            }
        }
        level = next;
    }
    lex_subsets(n, k)
        .into_iter()
        .map(|cols| {
            let mask = cols.iter().fold(0u64, |m, &c| m | 1 << c);
            level.get(&mask).cloned().unwrap_or_else(ParamPoly::zero)
        })
        .collect()
}

impl<K: Scalar> PluckerPoint<K> {
    pub fn from_matrix(matrix: Vec<Vec<ParamPoly<K>>>, pivots: Vec<u32>, width: usize) -> Self {
        let coords = maximal_minors(&matrix, width);
        let columns = lex_subsets(width, matrix.len());
        Self { width, pivots, matrix, columns, coords }
    }

    /// Dimension `2δ` of the ambient space.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn matrix(&self) -> &[Vec<ParamPoly<K>>] {
        &self.matrix
    }

    /// Column sets in canonical (lexicographic) order.
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn coords(&self) -> &[ParamPoly<K>] {
        &self.coords
    }

    pub fn coord(&self, cols: &[u32]) -> Option<&ParamPoly<K>> {
        self.column_index(cols).map(|i| &self.coords[i])
    }

    pub fn column_index(&self, cols: &[u32]) -> Option<usize> {
        self.columns.binary_search_by(|c| c.as_slice().cmp(cols)).ok()
    }

    /// True iff the row space is stable under multiplication by every `t^a`
    /// modulo `t^2δ`, identically in the parameters.
    pub fn is_good(&self, gamma: &NumericalSemigroup) -> bool {
        submodule_check(&self.matrix, &self.pivots, gamma)
    }
}

/// `O`-stability of a reduced row space with the given pivots.
pub fn submodule_check<K: Scalar>(matrix: &[Vec<ParamPoly<K>>], pivots: &[u32], gamma: &NumericalSemigroup) -> bool {
    let width = matrix.first().map_or(0, Vec::len);
    for row in matrix {
        for &a in gamma.generators() {
            let a = a as usize;
            let mut w = vec![ParamPoly::zero(); width];
            for c in 0..width.saturating_sub(a) {
                w[c + a] = row[c].clone();
            }
            for (prow, &p) in matrix.iter().zip(pivots) {
                let f = w[p as usize].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in w.iter_mut().zip(prow) {
                    if !y.is_zero() {
                        *x = &*x - &(y * &f);
                    }
                }
            }
            if w.iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
    }
    true
}
