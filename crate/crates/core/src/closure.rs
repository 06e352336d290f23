//! Closure relations between the cells of one `M_r`.
//!
//! A containment `C' ⊆ closure(C)` is certified by a one-parameter
//! degeneration `λ_j -> μ_j s^(e_j)` of the free parameters of `C`: if the
//! projective `s -> 0` limit of the Plücker point lands in the Schubert cell of
//! `C'` and the limiting family is dominant onto the affine cell `C'`, the
//! containment holds. Before degenerating, the parameters of `C` may be changed
//! birationally: translations that make a coordinate monomial, and
//! substitutions that turn the chart coordinates of `C'` into parameters. Non-containment is certified by necessary conditions
//! only: Schubert incidence, dimension, and Plücker coordinates that vanish
//! identically on `C` but not on `C'`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cells::{canonical_family_truncated, default_truncation, plucker_point, submodule_check};
use crate::cells::{CanonicalFamily, PluckerPoint};
use crate::error::Result;
use crate::gamma::{delta_set, DeltaSet, GammaModule};
use crate::schubert::{closure_leq, gale_geq, schubert_index, SchubertIndex};
use crate::semigroup::NumericalSemigroup;
use crate::symcalc::{scaled_limit, Monomial, ParamPoly};
use crate::Scalar;

/// Everything the closure analysis needs to know about one cell of `M_r`.
#[derive(Debug, Clone)]
pub struct Cell<K> {
    pub r: u32,
    pub module: GammaModule,
    pub delta: DeltaSet,
    pub schubert: SchubertIndex,
    pub family: CanonicalFamily<K>,
    pub plucker: PluckerPoint<K>,
}

impl<K: Scalar> Cell<K> {
    pub fn new(gamma: &NumericalSemigroup, module: &GammaModule, r: u32, trunc_margin: usize) -> Result<Self> {
        let wrap = |e: crate::Error| e.in_cell(r, module.gaps());
        let delta = delta_set(module, r).map_err(wrap)?;
        let schubert = schubert_index(&delta).map_err(wrap)?;
        let n = default_truncation(gamma, module, trunc_margin);
        let family = canonical_family_truncated(gamma, module, n).map_err(wrap)?;
        let plucker = plucker_point(&family, r).map_err(wrap)?;
        Ok(Self { r, module: module.clone(), delta, schubert, family, plucker })
    }

    pub fn dimension(&self) -> usize {
        self.family.dimension()
    }

    /// Indices of Plücker coordinates that vanish identically on the cell.
    pub fn vanishing_coords(&self) -> BTreeSet<usize> {
        self.plucker.coords().iter().enumerate().filter(|(_, c)| c.is_zero()).map(|(i, _)| i).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Contained,
    NotContained,
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate<K> {
    Reflexive,
    /// First the substitutions, in order, then `x_j -> x_j s^(exponents[j])`
    /// for every variable `x_j` still present. Variables past the outer
    /// cell's parameters are the inner cell's chart coordinates introduced
    /// by the substitutions. `rank_point` is where the Jacobian onto the
    /// inner cell's coordinates was found to have full rank.
    Degeneration {
        substitutions: Vec<Substitution<K>>,
        exponents: Vec<i64>,
        limit_order: i64,
        rank_point: Vec<K>,
    },
    Schubert { outer: SchubertIndex, inner: SchubertIndex },
    Dimension { outer: usize, inner: usize },
    /// A Plücker coordinate zero on the larger cell but not on the smaller one.
    VanishingCoordinate { columns: Vec<u32> },
    Exhausted { window: i64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosureVerdict<K> {
    pub status: Status,
    pub certificate: Certificate<K>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenConfig {
    /// Exponents are searched in `[-window, window]`.
    pub window: i64,
    pub seed: u64,
}

impl Default for DegenConfig {
    fn default() -> Self {
        Self { window: 3, seed: 42 }
    }
}

/// Decide whether `inner ⊆ closure(outer)`.
pub fn cell_closure_contains<K: Scalar>(outer: &Cell<K>, inner: &Cell<K>, config: &DegenConfig) -> ClosureVerdict<K> {
    let verdict = |status, certificate| ClosureVerdict { status, certificate };
    if outer.delta == inner.delta {
        return verdict(Status::Contained, Certificate::Reflexive);
    }
    if !closure_leq(&outer.schubert, &inner.schubert).unwrap_or(false) {
        return verdict(
            Status::NotContained,
            Certificate::Schubert { outer: outer.schubert.clone(), inner: inner.schubert.clone() },
        );
    }
    if inner.dimension() >= outer.dimension() {
        return verdict(
            Status::NotContained,
            Certificate::Dimension { outer: outer.dimension(), inner: inner.dimension() },
        );
    }
    let inner_nonzero: BTreeSet<usize> =
        (0..inner.plucker.coords().len()).filter(|&i| !inner.plucker.coords()[i].is_zero()).collect();
    if let Some(&i) = outer.vanishing_coords().intersection(&inner_nonzero).next() {
        let columns = outer.plucker.columns()[i].clone();
        return verdict(Status::NotContained, Certificate::VanishingCoordinate { columns });
    }
    match search_degeneration(outer, inner, config) {
        Some(cert) => verdict(Status::Contained, cert),
        None => verdict(Status::Unknown, Certificate::Exhausted { window: config.window }),
    }
}

/// Exponent vectors in `[-w, w]^d`, smallest total weight first.
fn exponent_vectors(d: usize, w: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-w..=w).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().map(|e| e.abs()).sum::<i64>(), v.clone()));
    out
}

/// `x_var := numer / denom`; the Plücker vector is rescaled by the power of
/// `denom` that keeps every coordinate polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Substitution<K> {
    pub var: usize,
    pub numer: ParamPoly<K>,
    pub denom: ParamPoly<K>,
}

fn apply_substitution<K: Scalar>(coords: &[ParamPoly<K>], sub: &Substitution<K>) -> Vec<ParamPoly<K>> {
    let d = coords.iter().map(|p| p.degree_in(sub.var)).max().unwrap_or(0) as usize;
    let num: Vec<ParamPoly<K>> = (0..=d as u32).map(|k| sub.numer.pow(k)).collect();
    let den: Vec<ParamPoly<K>> = (0..=d as u32).map(|k| sub.denom.pow(k)).collect();
    let out: Vec<ParamPoly<K>> = coords
        .iter()
        .map(|p| {
            let mut acc = ParamPoly::zero();
            for (k, coeff) in p.coefficients_in(sub.var).iter().enumerate() {
                if !coeff.is_zero() {
                    acc = acc + &(&(coeff * &num[k]) * &den[d - k]);
                }
            }
            acc
        })
        .collect();
    strip_monomial_content(out)
}

/// Divide every coordinate by the largest monomial dividing all of them.
fn strip_monomial_content<K: Scalar>(coords: Vec<ParamPoly<K>>) -> Vec<ParamPoly<K>> {
    let mut content: Option<Vec<u32>> = None;
    for p in &coords {
        for (m, _) in p.terms() {
            content = Some(match content {
                None => m.exponents().to_vec(),
                Some(c) => c.iter().enumerate().map(|(i, &e)| e.min(m.exponent(i))).collect(),
            });
        }
    }
    let Some(content) = content.filter(|c| c.iter().any(|&e| e > 0)) else { return coords };
    coords
        .iter()
        .map(|p| {
            let mut q = ParamPoly::zero();
            for (m, c) in p.terms() {
                let e = m.exponents().iter().enumerate().map(|(i, &e)| e - content.get(i).copied().unwrap_or(0)).collect();
                q.add_term(Monomial::from_exponents(e), c.clone());
            }
            q
        })
        .collect()
}

/// Upper bound on the number of terms `apply_substitution` can produce.
fn substitution_size_bound<K: Scalar>(coords: &[ParamPoly<K>], sub: &Substitution<K>) -> usize {
    let d = coords.iter().map(|p| p.degree_in(sub.var)).max().unwrap_or(0);
    let (n, m) = (sub.numer.num_terms(), sub.denom.num_terms());
    coords
        .iter()
        .flat_map(|p| p.coefficients_in(sub.var).into_iter().enumerate())
        .map(|(k, c)| c.num_terms().saturating_mul(n.saturating_pow(k as u32)).saturating_mul(m.saturating_pow(d - k as u32)))
        .fold(0usize, usize::saturating_add)
}

fn apply_substitutions<K: Scalar>(coords: &[ParamPoly<K>], subs: &[Substitution<K>]) -> Vec<ParamPoly<K>> {
    subs.iter().fold(coords.to_vec(), |acc, sub| apply_substitution(&acc, sub))
}

/// Translations `x_j -> x_j - rest / kappa` (constant `kappa`) that turn a
/// coordinate `kappa x_j + rest` into a monomial.
fn translations<K: Scalar>(coords: &[ParamPoly<K>], free: &[usize]) -> Vec<Substitution<K>> {
    let mut out: Vec<Substitution<K>> = Vec::new();
    for p in coords {
        for &var in free {
            let Some((kappa, rest)) = p.split_linear(var) else { continue };
            let Some(k) = kappa.as_constant() else { continue };
            if rest.as_constant().is_some() {
                continue;
            }
            let sub = Substitution {
                var,
                numer: ParamPoly::var(var) - &rest.scale(&(K::one() / k)),
                denom: ParamPoly::one(),
            };
            if !out.contains(&sub) {
                out.push(sub);
            }
        }
    }
    out
}

const MAX_TRANSLATIONS: usize = 2;

/// Work cap per pair: limits evaluated plus substitutions applied.
const STEP_BUDGET: usize = 20_000;
/// Branches whose Plücker vector grows past this many terms are dropped.
const MAX_TERMS: usize = 5_000;

struct Search<'a, K> {
    outer: &'a Cell<K>,
    inner: &'a Cell<K>,
    config: &'a DegenConfig,
    steps: std::cell::Cell<usize>,
}

impl<K: Scalar> Search<'_, K> {
    /// Counts one unit of work; false once the budget is spent.
    fn step(&self) -> bool {
        self.steps.set(self.steps.get() + 1);
        self.steps.get() <= STEP_BUDGET
    }

    fn substitute(&self, coords: &[ParamPoly<K>], sub: &Substitution<K>) -> Option<Vec<ParamPoly<K>>> {
        if !self.step() || substitution_size_bound(coords, sub) > 20 * MAX_TERMS {
            return None;
        }
        let next = apply_substitution(coords, sub);
        (next.iter().map(ParamPoly::num_terms).sum::<usize>() <= MAX_TERMS).then_some(next)
    }
}

fn search_degeneration<K: Scalar>(outer: &Cell<K>, inner: &Cell<K>, config: &DegenConfig) -> Option<Certificate<K>> {
    let search = Search { outer, inner, config, steps: std::cell::Cell::new(0) };
    let free = outer.family.free_params().to_vec();
    let mut level: Vec<(Vec<Substitution<K>>, Vec<ParamPoly<K>>)> = vec![(Vec::new(), outer.plucker.coords().to_vec())];
    for depth in 0..=MAX_TRANSLATIONS {
        for (subs, coords) in &level {
            if let Some(cert) = search_exponents(&search, subs, coords, &free, &[]) {
                return Some(cert);
            }
            if let Some(cert) = chart_search(&search, 0, subs.clone(), coords.clone(), free.clone()) {
                return Some(cert);
            }
        }
        if depth == MAX_TRANSLATIONS || search.steps.get() > STEP_BUDGET {
            break;
        }
        level = level
            .iter()
            .flat_map(|(subs, coords)| {
                let search = &search;
                translations(coords, &free).into_iter().filter_map(move |t| {
                    let next = search.substitute(coords, &t)?;
                    let mut subs = subs.clone();
                    subs.push(t);
                    Some((subs, next))
                })
            })
            .collect();
    }
    None
}

/// Replace the outer parameters, one inner chart coordinate at a time, by
/// solving `P_X - μ P_Δ' = 0` for a parameter it is linear in, after at most
/// one shear `x_j -> x_j x_i` per step. Once every inner coordinate is a
/// variable, only the leftover outer parameters are degenerated.
fn chart_search<K: Scalar>(
    search: &Search<'_, K>,
    k: usize,
    subs: Vec<Substitution<K>>,
    coords: Vec<ParamPoly<K>>,
    remaining: Vec<usize>,
) -> Option<Certificate<K>> {
    let (outer, inner) = (search.outer, search.inner);
    let targets = inner_coordinates(inner);
    let nvars = outer.family.slots().len();
    if k == targets.len() {
        let chart: Vec<usize> = (nvars..nvars + k).collect();
        return search_exponents(search, &subs, &coords, &remaining, &chart);
    }
    let plucker = &outer.plucker;
    let pivot_idx = plucker.column_index(inner.delta.elements())?;
    let target_idx = plucker.column_index(&targets[k].0)?;
    let equation = |coords: &[ParamPoly<K>]| {
        let eq = &coords[target_idx] - &(&ParamPoly::var(nvars + k) * &coords[pivot_idx]);
        strip_monomial_content(vec![eq]).remove(0)
    };
    let mut shears: Vec<Option<Substitution<K>>> = vec![None];
    for &j in &remaining {
        for &i in &remaining {
            if i != j {
                shears.push(Some(Substitution {
                    var: j,
                    numer: &ParamPoly::var(j) * &ParamPoly::var(i),
                    denom: ParamPoly::one(),
                }));
            }
        }
    }
    for shear in shears {
        let (base_subs, base) = match &shear {
            None => (subs.clone(), coords.clone()),
            Some(sh) => {
                let mut v = subs.clone();
                v.push(sh.clone());
                (v, search.substitute(&coords, sh)?)
            }
        };
        let eq = equation(&base);
        for (pos, &var) in remaining.iter().enumerate() {
            let Some((a, b)) = eq.split_linear(var) else { continue };
            let sub = Substitution { var, numer: -b, denom: a };
            let next = search.substitute(&base, &sub)?;
            if next.iter().all(ParamPoly::is_zero) {
                continue;
            }
            let mut subs = base_subs.clone();
            subs.push(sub);
            let mut rest = remaining.clone();
            rest.remove(pos);
            if let Some(cert) = chart_search(search, k + 1, subs, next, rest) {
                return Some(cert);
            }
        }
    }
    None
}

fn search_exponents<K: Scalar>(
    search: &Search<'_, K>,
    subs: &[Substitution<K>],
    coords: &[ParamPoly<K>],
    scaled: &[usize],
    fixed: &[usize],
) -> Option<Certificate<K>> {
    let (outer, inner, config) = (search.outer, search.inner, search.config);
    let nvars = outer.family.slots().len() + fixed.len();
    let vars: Vec<usize> = scaled.iter().chain(fixed).copied().collect();
    let targets = inner_coordinates(inner);
    for exps in exponent_vectors(scaled.len(), config.window) {
        if !search.step() {
            return None;
        }
        let mut per_var = vec![0i64; nvars];
        for (&v, &e) in scaled.iter().zip(&exps) {
            per_var[v] = e;
        }
        let Ok((order, limit)) = scaled_limit(coords, &per_var) else {
            continue;
        };
        if !lands_in(&outer.plucker, &limit, inner.delta.elements()) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(pair_seed(config.seed, outer, inner, &per_var));
        for _ in 0..4 {
            let point: Vec<K> = random_point(&mut rng, nvars);
            if full_rank_at(&targets, &limit, &vars, inner, outer, &point) {
                return Some(Certificate::Degeneration {
                    substitutions: subs.to_vec(),
                    exponents: per_var,
                    limit_order: order,
                    rank_point: point,
                });
            }
        }
    }
    None
}

fn pair_seed<K>(seed: u64, outer: &Cell<K>, inner: &Cell<K>, exps: &[i64]) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    let mix = |h: u64, x: u64| (h ^ x).wrapping_mul(0x0100_0000_01b3).rotate_left(17);
    for &x in outer.module.gaps().iter().chain(inner.module.gaps()) {
        h = mix(h, x as u64);
    }
    for &e in exps {
        h = mix(h, e as u64);
    }
    h
}

fn random_point<K: Scalar>(rng: &mut ChaCha8Rng, n: usize) -> Vec<K> {
    (0..n)
        .map(|_| {
            let num = loop {
                let x: i64 = rng.gen_range(-9..=9);
                if x != 0 {
                    break x;
                }
            };
            K::from_ratio(num, rng.gen_range(1..=5))
        })
        .collect()
}

/// True iff the limit vector is nonzero at `target` and every nonzero
/// coordinate is Gale-above it, i.e. the limit lies in that Schubert cell.
fn lands_in<K: Scalar>(point: &PluckerPoint<K>, limit: &[ParamPoly<K>], target: &[u32]) -> bool {
    let Some(idx) = point.column_index(target) else { return false };
    if limit[idx].is_zero() {
        return false;
    }
    point.columns().iter().zip(limit).all(|(cols, c)| c.is_zero() || gale_geq(cols, target))
}

/// For each free parameter of `inner`: the Plücker column set whose ratio to
/// the pivot coordinate is that parameter, and the sign of that ratio.
fn inner_coordinates<K: Scalar>(inner: &Cell<K>) -> Vec<(Vec<u32>, bool)> {
    let pivots = inner.delta.elements();
    inner
        .family
        .free_params()
        .iter()
        .map(|&v| {
            let slot = inner.family.slot(v);
            let p = slot.generator - inner.r;
            let q = slot.exponent - inner.r;
            let between = pivots.iter().filter(|&&x| x != p && x > p.min(q) && x < p.max(q)).count();
            let mut cols: Vec<u32> = pivots.iter().copied().filter(|&x| x != p).collect();
            cols.push(q);
            cols.sort_unstable();
            (cols, between % 2 == 1)
        })
        .collect()
}

/// Rank of the Jacobian of `μ -> (P_X(μ) / P_Δ(μ))_X` at `point`, compared
/// with the dimension of the inner cell.
fn full_rank_at<K: Scalar>(
    coords: &[(Vec<u32>, bool)],
    limit: &[ParamPoly<K>],
    vars: &[usize],
    inner: &Cell<K>,
    outer: &Cell<K>,
    point: &[K],
) -> bool {
    let plucker = &outer.plucker;
    let den = &limit[plucker.column_index(inner.delta.elements()).unwrap()];
    let q = den.eval(point);
    if q.is_zero() {
        return false;
    }
    if coords.is_empty() {
        return true;
    }
    let q2 = q.clone() * q.clone();
    let mut jac: Vec<Vec<K>> = Vec::with_capacity(coords.len());
    for (cols, _) in coords {
        let num = &limit[plucker.column_index(cols).unwrap()];
        let p = num.eval(point);
        let row = vars
            .iter()
            .map(|&v| (num.derivative(v).eval(point) * q.clone() - p.clone() * den.derivative(v).eval(point)) / q2.clone())
            .collect();
        jac.push(row);
    }
    rank(jac) == coords.len()
}

fn rank<K: Scalar>(mut m: Vec<Vec<K>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in 0..m.len() {
            if i == rank || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / pivot.clone();
            for j in c..cols {
                let sub = m[rank][j].clone() * f.clone();
                m[i][j] = m[i][j].clone() - sub;
            }
        }
        rank += 1;
    }
    rank
}

/// Re-run a certificate and check it still proves what it claims.
pub fn replay<K: Scalar>(outer: &Cell<K>, inner: &Cell<K>, verdict: &ClosureVerdict<K>) -> bool {
    match (&verdict.status, &verdict.certificate) {
        (Status::Contained, Certificate::Reflexive) => outer.delta == inner.delta,
        (Status::Contained, cert @ Certificate::Degeneration { limit_order, rank_point, .. }) => {
            let Some((order, limit)) = degeneration_limit(outer, cert) else { return false };
            if order != *limit_order || !lands_in(&outer.plucker, &limit, inner.delta.elements()) {
                return false;
            }
            let vars: Vec<usize> = (0..rank_point.len()).collect();
            full_rank_at(&inner_coordinates(inner), &limit, &vars, inner, outer, rank_point)
        }
        (Status::NotContained, Certificate::Schubert { .. }) => {
            !closure_leq(&outer.schubert, &inner.schubert).unwrap_or(false)
        }
        (Status::NotContained, Certificate::Dimension { .. }) => inner.dimension() >= outer.dimension(),
        (Status::NotContained, Certificate::VanishingCoordinate { columns }) => {
            outer.plucker.coord(columns).is_some_and(ParamPoly::is_zero)
                && inner.plucker.coord(columns).is_some_and(|c| !c.is_zero())
        }
        (Status::Unknown, _) => true,
        _ => false,
    }
}

/// Limit of the outer cell's Plücker point under a degeneration.
pub fn degeneration_limit<K: Scalar>(outer: &Cell<K>, cert: &Certificate<K>) -> Option<(i64, Vec<ParamPoly<K>>)> {
    let Certificate::Degeneration { substitutions, exponents, .. } = cert else { return None };
    scaled_limit(&apply_substitutions(outer.plucker.coords(), substitutions), exponents).ok()
}

/// Numeric row-reduced matrix of a limit point at `point`, rebuilt from its
/// Plücker coordinates relative to the pivot set `pivots`.
pub fn limit_matrix_at<K: Scalar>(
    plucker: &PluckerPoint<K>,
    limit: &[ParamPoly<K>],
    pivots: &[u32],
    point: &[K],
) -> Option<Vec<Vec<ParamPoly<K>>>> {
    let den = limit[plucker.column_index(pivots)?].eval(point);
    if den.is_zero() {
        return None;
    }
    let width = plucker.width();
    let mut rows = Vec::with_capacity(pivots.len());
    for &p in pivots {
        let mut row = vec![ParamPoly::zero(); width];
        for q in 0..width as u32 {
            if pivots.contains(&q) {
                if q == p {
                    row[q as usize] = ParamPoly::one();
                }
                continue;
            }
            let between = pivots.iter().filter(|&&x| x != p && x > p.min(q) && x < p.max(q)).count();
            let mut cols: Vec<u32> = pivots.iter().copied().filter(|&x| x != p).collect();
            cols.push(q);
            cols.sort_unstable();
            let mut v = limit[plucker.column_index(&cols)?].eval(point) / den.clone();
            if between % 2 == 1 {
                v = -v;
            }
            row[q as usize] = ParamPoly::constant(v);
        }
        rows.push(row);
    }
    Some(rows)
}

/// Goodness of a degeneration limit, checked at a rational point.
pub fn limit_is_good<K: Scalar>(
    gamma: &NumericalSemigroup,
    outer: &Cell<K>,
    inner: &Cell<K>,
    cert: &Certificate<K>,
    point: &[K],
) -> bool {
    let Some((_, limit)) = degeneration_limit(outer, cert) else { return false };
    let Some(m) = limit_matrix_at(&outer.plucker, &limit, inner.delta.elements(), point) else { return false };
    submodule_check(&m, inner.delta.elements(), gamma)
}

/// Pairwise verdicts; `matrix[i][j]` answers "is cell j in the closure of cell i".
pub fn verdict_matrix<K: Scalar>(cells: &[Cell<K>], config: &DegenConfig) -> Vec<Vec<ClosureVerdict<K>>> {
    cells
        .iter()
        .map(|outer| cells.iter().map(|inner| cell_closure_contains(outer, inner, config)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub top: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub components: Vec<Component>,
    /// Set when some Unknown verdict could change the answer.
    pub incomplete: bool,
    /// Transitive closure of the Contained relation.
    pub contains: Vec<Vec<bool>>,
}

/// Maximal cells under containment and the cells certified inside each.
pub fn components(statuses: &[Vec<Status>]) -> ComponentSummary {
    let n = statuses.len();
    let mut contains: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i == j || statuses[i][j] == Status::Contained).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            if contains[i][k] {
                for j in 0..n {
                    if contains[k][j] {
                        contains[i][j] = true;
                    }
                }
            }
        }
    }
    let tops: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| j == i || !contains[j][i])).collect();
    let components: Vec<Component> = tops
        .iter()
        .map(|&t| Component { top: t, members: (0..n).filter(|&j| contains[t][j]).collect() })
        .collect();
    let covered: BTreeSet<usize> = components.iter().flat_map(|c| c.members.iter().copied()).collect();
    let unknown = statuses.iter().flatten().any(|s| *s == Status::Unknown);
    ComponentSummary { incomplete: unknown || covered.len() < n, components, contains }
}

/// `Some(d)` iff the given cells have dimensions exactly `0, 1, ..., d` and
/// each is in the closure of the next one up.
pub fn projective_space_pattern(members: &[usize], dims: &[usize], contains: &[Vec<bool>]) -> Option<usize> {
    let mut by_dim: Vec<usize> = members.to_vec();
    by_dim.sort_by_key(|&i| dims[i]);
    if by_dim.iter().enumerate().any(|(k, &i)| dims[i] != k) {
        return None;
    }
    if by_dim.windows(2).all(|w| contains[w[1]][w[0]]) {
        by_dim.len().checked_sub(1)
    } else {
        None
    }
}
