//! Working with whole bases: expanding Lie elements in the configuration
//! basis, assembling pairing matrices, checking triangularity and duality,
//! the quotient-map check, and the bundled fixture bases.

mod fixture;
mod matrix;
mod quotient;
pub mod suites;
mod verify;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coalg::config_graph;
use crate::error::{Error, Result};
use crate::lie::{classical_bracketing, config_bracketing, LieElement, Tree};
use crate::pairing::PreparedTree;
use crate::words::{Alphabet, MultiDegree, Word, WordFilter, WordOrder, WordSet};

pub use fixture::{fixture_names, load_fixture, parse_fixture};
pub use matrix::{Column, MatrixStyle, PairingMatrix, RowLabel, RowSource};
pub use quotient::{quotient_case, quotient_check, random_quotient_case, AlphabetMap, QuotientCase};
pub use verify::{
    verify_duality, verify_triangularity, Bound, DualityReport, Tally, TriangularColumns, TriangularityReport,
};

/// Which bracketing produced a family's trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    /// `𝓛` applied to 𝓑 or 𝓑̂.
    Config(WordSet),
    /// Classical Lyndon bracketing of 𝓑.
    Classical,
    /// Trees read from a fixture file.
    Fixture(String),
}

impl FamilyKind {
    pub fn name(&self) -> &str {
        match self {
            Self::Config(WordSet::Lyndon) => "config-B",
            Self::Config(WordSet::Bhat) => "config-Bhat",
            Self::Classical => "classical-B",
            Self::Fixture(name) => name,
        }
    }

    /// Order used for rows and columns indexed by this family.
    pub fn order(&self) -> WordOrder {
        match self {
            Self::Config(set) => set.order(),
            Self::Classical | Self::Fixture(_) => WordOrder::Lex,
        }
    }

    fn column_label(&self, word: &str) -> String {
        match self {
            Self::Config(_) => format!("L{word}"),
            Self::Classical => format!("[{word}]"),
            Self::Fixture(name) => format!("{name}({word})"),
        }
    }
}

/// An indexed list of bracket trees: `(ω, tree of ω)` for each basis word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFamily {
    kind: FamilyKind,
    alphabet: Alphabet,
    members: Vec<(Word, Tree)>,
}

impl BasisFamily {
    /// `𝓛ω` for every `ω` in `set` of multidegree `md`, in the set's order.
    pub fn config(alphabet: &Alphabet, set: WordSet, md: &MultiDegree) -> Self {
        let members = set
            .words(alphabet, &WordFilter::MultiDegree(md.clone()))
            .into_iter()
            .map(|w| {
                let t = config_bracketing(&w, set).expect("generated words are members");
                (w, t)
            })
            .collect();
        Self {
            kind: FamilyKind::Config(set),
            alphabet: alphabet.clone(),
            members,
        }
    }

    /// `[ω]` for every Lyndon word of multidegree `md`, in lex order.
    pub fn classical(alphabet: &Alphabet, md: &MultiDegree) -> Self {
        let members = WordSet::Lyndon
            .words(alphabet, &WordFilter::MultiDegree(md.clone()))
            .into_iter()
            .map(|w| {
                let t = classical_bracketing(&w).expect("generated words are Lyndon");
                (w, t)
            })
            .collect();
        Self {
            kind: FamilyKind::Classical,
            alphabet: alphabet.clone(),
            members,
        }
    }

    pub fn fixture(name: impl Into<String>, alphabet: Alphabet, members: Vec<(Word, Tree)>) -> Self {
        Self {
            kind: FamilyKind::Fixture(name.into()),
            alphabet,
            members,
        }
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn members(&self) -> &[(Word, Tree)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn tree(&self, w: &Word) -> Option<&Tree> {
        self.members.iter().find(|(u, _)| u == w).map(|(_, t)| t)
    }

    /// The members of multidegree `md`, order kept.
    pub fn restricted(&self, md: &MultiDegree) -> Self {
        let d = self.alphabet.len();
        Self {
            kind: self.kind.clone(),
            alphabet: self.alphabet.clone(),
            members: self
                .members
                .iter()
                .filter(|(w, _)| w.multidegree(d) == *md)
                .cloned()
                .collect(),
        }
    }

    /// The members listed in `order`; every listed word must be a member.
    pub fn reordered(&self, order: &[Word]) -> Result<Self> {
        let members = order
            .iter()
            .map(|w| {
                self.tree(w)
                    .map(|t| (w.clone(), t.clone()))
                    .ok_or_else(|| Error::NotInBasisSet {
                        word: self.alphabet.format_word(w),
                        set: "the column family",
                    })
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            kind: self.kind.clone(),
            alphabet: self.alphabet.clone(),
            members,
        })
    }

    pub(crate) fn columns(&self) -> Vec<Column> {
        self.members
            .iter()
            .map(|(w, t)| Column {
                label: self.kind.column_label(&self.alphabet.format_word(w)),
                tree: t.clone(),
            })
            .collect()
    }
}

/// Coefficients of `e` in the configuration basis indexed by `set`.
///
/// The coefficient of `𝓛ω` is `⟨𝓖ω, e⟩`. Components of different
/// multidegree are expanded separately. Only nonzero coefficients are
/// returned, grouped by multidegree and in the set's order within each.
pub fn expand_config(e: &LieElement, set: WordSet, alphabet: &Alphabet) -> Vec<(Word, BigInt)> {
    let mut out = Vec::new();
    for (md, part) in e.split_by_multidegree(alphabet.len()) {
        let prepared: Vec<(PreparedTree, &BigInt)> = part.terms().map(|(t, c)| (PreparedTree::new(t), c)).collect();
        for w in set.words(alphabet, &WordFilter::MultiDegree(md)) {
            let g = config_graph(&w, set).expect("generated words are members");
            let mut c = BigInt::zero();
            for (t, k) in &prepared {
                let v = t.pair(&g);
                if v != 0 {
                    c += *k * v;
                }
            }
            if !c.is_zero() {
                out.push((w, c));
            }
        }
    }
    out
}

/// `Σ c_ω 𝓛ω`, the inverse of [`expand_config`].
pub fn reconstruct(expansion: &[(Word, BigInt)], set: WordSet) -> Result<LieElement> {
    let mut e = LieElement::zero();
    for (w, c) in expansion {
        e.add_term(config_bracketing(w, set)?, c.clone());
    }
    Ok(e)
}
