//! Per-r aggregation of cells, closure verdicts and components, rendered as
//! JSON or an aligned text table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::closure::{
    components, projective_space_pattern, verdict_matrix, Cell, ClosureVerdict, ComponentSummary, DegenConfig,
    Status,
};
use crate::error::{Error, Result};
use crate::gamma::enumerate_colength;
use crate::semigroup::NumericalSemigroup;
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratConfig {
    pub trunc_margin: usize,
    pub degen_window: i64,
    pub seed: u64,
}

impl Default for StratConfig {
    fn default() -> Self {
        Self { trunc_margin: 0, degen_window: 3, seed: 42 }
    }
}

impl StratConfig {
    fn degen(&self) -> DegenConfig {
        DegenConfig { window: self.degen_window, seed: self.seed }
    }
}

/// Everything computed for one `M_r`.
#[derive(Debug, Clone)]
pub struct Stratum<K> {
    pub r: u32,
    pub cells: Vec<Cell<K>>,
    pub verdicts: Vec<Vec<ClosureVerdict<K>>>,
    pub summary: ComponentSummary,
}

impl<K: Scalar> Stratum<K> {
    pub fn dimension(&self) -> usize {
        self.cells.iter().map(Cell::dimension).max().unwrap_or(0)
    }

    pub fn unknown_count(&self) -> usize {
        self.verdicts.iter().flatten().filter(|v| v.status == Status::Unknown).count()
    }

    pub fn is_irreducible(&self) -> bool {
        self.summary.components.len() == 1 && self.unknown_count() == 0
    }

    fn dims(&self) -> Vec<usize> {
        self.cells.iter().map(Cell::dimension).collect()
    }

    pub fn pd_pattern(&self) -> Option<usize> {
        let all: Vec<usize> = (0..self.cells.len()).collect();
        projective_space_pattern(&all, &self.dims(), &self.summary.contains)
    }

    /// Cells lying in at least two component closures.
    pub fn singular_candidates(&self) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|i| self.summary.components.iter().filter(|c| c.members.contains(i)).count() >= 2)
            .collect()
    }
}

pub fn stratify<K: Scalar>(gamma: &NumericalSemigroup, r: u32, config: &StratConfig) -> Result<Stratum<K>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let cells = enumerate_colength(gamma, r as usize)
        .iter()
        .map(|m| Cell::new(gamma, m, r, config.trunc_margin))
        .collect::<Result<Vec<_>>>()?;
    let verdicts = verdict_matrix(&cells, &config.degen());
    let statuses: Vec<Vec<Status>> = verdicts.iter().map(|row| row.iter().map(|v| v.status).collect()).collect();
    let summary = components(&statuses);
    Ok(Stratum { r, cells, verdicts, summary })
}

/// Default range of `r`: up to `2δ`, where `M_r` becomes the whole
/// punctual space.
pub fn default_r_max(gamma: &NumericalSemigroup) -> u32 {
    (2 * gamma.delta() as u32).max(1)
}

pub fn analyze<K: Scalar>(
    gamma: &NumericalSemigroup,
    rs: impl IntoIterator<Item = u32>,
    config: &StratConfig,
) -> Result<Vec<Stratum<K>>> {
    rs.into_iter().map(|r| stratify(gamma, r, config)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupSummary {
    pub gens: Vec<u32>,
    pub gaps: Vec<u32>,
    pub delta: usize,
    pub conductor: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub gaps: Vec<u32>,
    pub min_gens: Vec<u32>,
    pub delta_set: Vec<u32>,
    pub schubert: String,
    pub dim: usize,
    pub generators: Vec<String>,
    pub eliminated: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub top: usize,
    pub members: Vec<usize>,
    pub pd_pattern: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub r: u32,
    pub cells: Vec<CellReport>,
    pub dim: usize,
    pub components: Vec<ComponentReport>,
    pub irreducible: bool,
    pub pd_pattern: Option<usize>,
    pub singular_candidates: Vec<usize>,
    pub unknowns: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratReport {
    pub version: String,
    pub semigroup: SemigroupSummary,
    pub strata: Vec<StratumReport>,
}

impl StratReport {
    pub fn new<K: Scalar>(gamma: &NumericalSemigroup, strata: &[Stratum<K>]) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            semigroup: SemigroupSummary {
                gens: gamma.generators().to_vec(),
                gaps: gamma.gaps().to_vec(),
                delta: gamma.delta(),
                conductor: gamma.conductor(),
            },
            strata: strata.iter().map(stratum_report).collect(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.strata.iter().map(|s| s.unknowns).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let sg = &self.semigroup;
        let gens: Vec<String> = sg.gens.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "semigroup <{}>  gaps {:?}  delta {}  conductor {}", gens.join(","), sg.gaps, sg.delta, sg.conductor);
        for s in &self.strata {
            let _ = writeln!(out);
            let verdict = match (s.components.len(), s.unknowns) {
                (1, 0) => "irreducible".to_string(),
                (1, _) => "irreducible (unverified boundary)".to_string(),
                (n, 0) => format!("{n} components"),
                (n, _) => format!("{n} components (unverified boundary)"),
            };
            let _ = writeln!(out, "M_{}: dim {}, {} cells, {}", s.r, s.dim, s.cells.len(), verdict);
            let rows: Vec<[String; 6]> = s
                .cells
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    [
                        i.to_string(),
                        format!("{:?}", c.gaps),
                        format!("{:?}", c.min_gens),
                        format!("{:?}", c.delta_set),
                        c.schubert.clone(),
                        c.dim.to_string(),
                    ]
                })
                .collect();
            let header = ["#", "gaps", "min gens", "delta", "schubert", "dim"];
            let mut widths = header.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cols: &[String]| {
                let mut l = String::from(" ");
                for (c, w) in cols.iter().zip(&widths) {
                    let _ = write!(l, " {c:<w$}");
                }
                l
            };
            let _ = writeln!(out, "{}", line(&header.map(String::from)));
            for (row, c) in rows.iter().zip(&s.cells) {
                let _ = writeln!(out, "{}  ({})", line(row), c.generators.join(", "));
                for e in &c.eliminated {
                    let _ = writeln!(out, "      {e}");
                }
            }
            for c in &s.components {
                let pd = c.pd_pattern.map(|d| format!("  ~ P^{d} pattern")).unwrap_or_default();
                let _ = writeln!(out, "  component: top {} members {:?}{}", c.top, c.members, pd);
            }
            if let Some(d) = s.pd_pattern {
                let _ = writeln!(out, "  P^{d} pattern");
            }
            if !s.singular_candidates.is_empty() {
                let _ = writeln!(out, "  in several components: {:?}", s.singular_candidates);
            }
            if s.unknowns > 0 {
                let _ = writeln!(out, "  unknown verdicts: {}", s.unknowns);
            }
        }
        out
    }
}

fn stratum_report<K: Scalar>(s: &Stratum<K>) -> StratumReport {
    let dims = s.dims();
    let cells = s
        .cells
        .iter()
        .map(|c| {
            let names = c.family.names();
            let eliminated = c
                .family
                .eliminated()
                .iter()
                .map(|(&v, p)| format!("{} = {}", names[v], p.format_with(names)))
                .collect();
            CellReport {
                gaps: c.module.gaps().to_vec(),
                min_gens: c.module.min_generators().to_vec(),
                delta_set: c.delta.elements().to_vec(),
                schubert: c.schubert.to_string(),
                dim: c.dimension(),
                generators: c.family.formatted_generators(),
                eliminated,
            }
        })
        .collect();
    let components = s
        .summary
        .components
        .iter()
        .map(|c| ComponentReport {
            top: c.top,
            members: c.members.clone(),
            pd_pattern: projective_space_pattern(&c.members, &dims, &s.summary.contains),
        })
        .collect();
    StratumReport {
        r: s.r,
        cells,
        dim: s.dimension(),
        components,
        irreducible: s.is_irreducible(),
        pd_pattern: s.pd_pattern(),
        singular_candidates: s.singular_candidates(),
        unknowns: s.unknown_count(),
    }
}
