use std::cmp::Ordering;

use super::BasisFamily;
use crate::coalg::{as_long_graph, config_graph, Graph};
use crate::lie::Tree;
use crate::pairing::{bar_coefficient, pair_all_methods, PreparedTree};
use crate::words::{compare, Alphabet, MultiDegree, Word, WordFilter, WordSet};

/// The multidegrees a verification covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    /// Every multidegree over `letters` letters with total `1..=max_n`.
    Total {
        letters: usize,
        max_n: usize,
    },
    Exact(MultiDegree),
}

impl Bound {
    pub fn letters(&self) -> usize {
        match self {
            Self::Total { letters, .. } => *letters,
            Self::Exact(md) => md.counts().len(),
        }
    }

    pub fn multidegrees(&self) -> Vec<MultiDegree> {
        match self {
            Self::Total { letters, max_n } => (1..=*max_n).flat_map(|n| MultiDegree::all(*letters, n)).collect(),
            Self::Exact(md) => vec![md.clone()],
        }
    }
}

/// Running count of pairings, optionally cross-checked by every method.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub cross_check: bool,
    pub pairs: u64,
    pub disagreements: Vec<String>,
}

impl Tally {
    pub fn cross_checked() -> Self {
        Self {
            cross_check: true,
            ..Self::default()
        }
    }

    /// `⟨g, t⟩` by the direct method, recording any disagreement with the
    /// other methods when cross-checking.
    pub fn graph(&mut self, g: &Graph, prepared: &PreparedTree, t: &Tree) -> i64 {
        self.pairs += 1;
        let v = prepared.pair(g);
        if self.cross_check {
            self.check(g, t, v);
        }
        v
    }

    /// `⟨w*, t⟩` by coefficient extraction, cross-checked against the long
    /// graph of `w`.
    pub fn bar(&mut self, w: &Word, t: &Tree) -> i64 {
        self.pairs += 1;
        let v = bar_coefficient(w, t);
        if self.cross_check {
            self.check(&as_long_graph(w), t, v);
        }
        v
    }

    fn check(&mut self, g: &Graph, t: &Tree, v: i64) {
        let m = pair_all_methods(g, t);
        if !m.agree() || m.direct != v {
            self.disagreements
                .push(format!("{g:?} vs {t:?}: used {v}, methods {m:?}"));
        }
    }

    pub fn absorb(&mut self, other: Tally) {
        self.pairs += other.pairs;
        self.disagreements.extend(other.disagreements);
    }
}

/// The column family checked against bar-word rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularColumns {
    Config,
    Classical,
}

/// Outcome of [`verify_triangularity`]. Words are written over the numeric
/// alphabet `1, 2, …`.
#[derive(Debug, Clone, Default)]
pub struct TriangularityReport {
    pub multidegrees: usize,
    pub cells: u64,
    /// `(row ω, column υ, value)` with `ω` before `υ` and a nonzero value.
    pub above_diagonal: Vec<(String, String, i64)>,
    /// Diagonal entries outside the allowed set.
    pub bad_diagonal: Vec<(String, i64)>,
    pub diagonal_plus: usize,
    pub diagonal_minus: usize,
    pub tally: Tally,
}

impl TriangularityReport {
    pub fn passed(&self) -> bool {
        self.above_diagonal.is_empty() && self.bad_diagonal.is_empty() && self.tally.disagreements.is_empty()
    }
}

/// Checks that `⟨ω*, τυ⟩ = 0` whenever `ω` comes strictly before `υ` in the
/// order of `rows`, and that diagonal entries are `±1` (`+1` for the
/// classical columns). Config columns use the same word set as the rows;
/// classical columns need `rows` to be Lyndon.
pub fn verify_triangularity(
    rows: WordSet,
    cols: TriangularColumns,
    bound: &Bound,
    cross_check: bool,
) -> TriangularityReport {
    assert!(
        cols == TriangularColumns::Config || rows == WordSet::Lyndon,
        "classical columns are only defined on Lyndon words"
    );
    let alphabet = Alphabet::numeric(bound.letters());
    let mut report = TriangularityReport {
        tally: Tally {
            cross_check,
            ..Tally::default()
        },
        ..Default::default()
    };
    let order = rows.order();
    for md in bound.multidegrees() {
        let family = match cols {
            TriangularColumns::Config => BasisFamily::config(&alphabet, rows, &md),
            TriangularColumns::Classical => BasisFamily::classical(&alphabet, &md),
        };
        if family.is_empty() {
            continue;
        }
        report.multidegrees += 1;
        for (w, _) in family.members() {
            for (u, t) in family.members() {
                let ord = compare(w, u, order);
                if ord == Ordering::Greater {
                    continue;
                }
                let v = report.tally.bar(w, t);
                report.cells += 1;
                let name = |x: &Word| alphabet.format_word(x);
                if ord == Ordering::Less && v != 0 {
                    report.above_diagonal.push((name(w), name(u), v));
                } else if ord == Ordering::Equal {
                    match v {
                        1 => report.diagonal_plus += 1,
                        -1 if cols == TriangularColumns::Config => report.diagonal_minus += 1,
                        _ => report.bad_diagonal.push((name(w), v)),
                    }
                }
            }
        }
    }
    report
}

/// Outcome of [`verify_duality`].
#[derive(Debug, Clone, Default)]
pub struct DualityReport {
    pub multidegrees: usize,
    pub cells: u64,
    /// `(ω, υ, ⟨𝓖ω, 𝓛υ⟩)` for every entry that differs from `δ(ω, υ)`.
    pub violations: Vec<(String, String, i64)>,
    pub tally: Tally,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.tally.disagreements.is_empty()
    }
}

/// Checks `⟨𝓖ω, 𝓛υ⟩ = δ(ω, υ)` for all `ω, υ` in `set` within `bound`.
pub fn verify_duality(set: WordSet, bound: &Bound, cross_check: bool) -> DualityReport {
    let alphabet = Alphabet::numeric(bound.letters());
    let mut report = DualityReport {
        tally: Tally {
            cross_check,
            ..Tally::default()
        },
        ..Default::default()
    };
    for md in bound.multidegrees() {
        let family = BasisFamily::config(&alphabet, set, &md);
        if family.is_empty() {
            continue;
        }
        report.multidegrees += 1;
        let graphs: Vec<Graph> = set
            .words(&alphabet, &WordFilter::MultiDegree(md.clone()))
            .iter()
            .map(|w| config_graph(w, set).expect("generated words are members"))
            .collect();
        for (u, t) in family.members() {
            let prepared = PreparedTree::new(t);
            for ((w, _), g) in family.members().iter().zip(&graphs) {
                let v = report.tally.graph(g, &prepared, t);
                report.cells += 1;
                if v != i64::from(w == u) {
                    report
                        .violations
                        .push((alphabet.format_word(w), alphabet.format_word(u), v));
                }
            }
        }
    }
    report
}
