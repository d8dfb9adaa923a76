use serde::Serialize;

use super::BasisFamily;
use crate::coalg::{config_graph, Graph};
use crate::error::{Error, Result};
use crate::lie::Tree;
use crate::pairing::{bar_coefficient, PreparedTree};
use crate::words::{Alphabet, MultiDegree, Word, WordFilter, WordSet};

/// A matrix row: the dual bar word `ω*` or the graph `𝓖ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowLabel {
    Bar(Word),
    Graph(Word, Graph),
}

impl RowLabel {
    pub fn word(&self) -> &Word {
        match self {
            Self::Bar(w) | Self::Graph(w, _) => w,
        }
    }

    fn label(&self, a: &Alphabet) -> String {
        match self {
            Self::Bar(w) => format!("{}*", a.format_word(w)),
            Self::Graph(w, _) => format!("G{}", a.format_word(w)),
        }
    }

    fn pair(&self, t: &PreparedTree, tree: &Tree) -> i64 {
        match self {
            Self::Bar(w) => bar_coefficient(w, tree),
            Self::Graph(_, g) => t.pair(g),
        }
    }
}

/// Which dual objects index the rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSource {
    Bar,
    Graph,
}

impl RowSource {
    /// One row per word of `set` with multidegree `md`, in the set's order.
    pub fn rows(self, set: WordSet, alphabet: &Alphabet, md: &MultiDegree) -> Vec<RowLabel> {
        set.words(alphabet, &WordFilter::MultiDegree(md.clone()))
            .into_iter()
            .map(|w| match self {
                Self::Bar => RowLabel::Bar(w),
                Self::Graph => {
                    let g = config_graph(&w, set).expect("generated words are members");
                    RowLabel::Graph(w, g)
                }
            })
            .collect()
    }
}

/// A labeled bracket tree heading a column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Column {
    pub label: String,
    pub tree: Tree,
}

impl Column {
    /// A column labeled by the tree itself.
    pub fn tree(alphabet: &Alphabet, tree: Tree) -> Self {
        Self {
            label: tree.display(alphabet).to_string(),
            tree,
        }
    }

    pub fn of_family(family: &BasisFamily) -> Vec<Column> {
        family.columns()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatrixStyle {
    /// Tab-separated with every entry written out.
    #[default]
    Plain,
    /// Tab-separated with zero entries left blank.
    Paper,
    Json,
}

/// Pairings of a list of dual elements against a list of trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingMatrix {
    alphabet: Alphabet,
    rows: Vec<RowLabel>,
    cols: Vec<Column>,
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct JsonMatrix<'a> {
    rows: Vec<String>,
    cols: &'a [String],
    entries: &'a [Vec<i64>],
}

impl PairingMatrix {
    pub fn new(alphabet: &Alphabet, rows: Vec<RowLabel>, cols: Vec<Column>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyMatrix("row"));
        }
        if cols.is_empty() {
            return Err(Error::EmptyMatrix("column"));
        }
        let prepared: Vec<PreparedTree> = cols.iter().map(|c| PreparedTree::new(&c.tree)).collect();
        let entries = rows
            .iter()
            .map(|r| prepared.iter().zip(&cols).map(|(p, c)| r.pair(p, &c.tree)).collect())
            .collect();
        Ok(Self {
            alphabet: alphabet.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[Column] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Recomputes one cell from scratch.
    pub fn recompute(&self, i: usize, j: usize) -> i64 {
        let tree = &self.cols[j].tree;
        self.rows[i].pair(&PreparedTree::new(tree), tree)
    }

    /// Keeps only the rows whose words appear in `order`, in that order.
    pub fn reorder_rows(&mut self, order: &[Word]) -> Result<()> {
        let mut idx = Vec::with_capacity(order.len());
        for w in order {
            let i = self
                .rows
                .iter()
                .position(|r| r.word() == w)
                .ok_or_else(|| Error::NotInBasisSet {
                    word: self.alphabet.format_word(w),
                    set: "the matrix rows",
                })?;
            idx.push(i);
        }
        self.rows = idx.iter().map(|&i| self.rows[i].clone()).collect();
        self.entries = idx.iter().map(|&i| self.entries[i].clone()).collect();
        Ok(())
    }

    pub fn render(&self, style: MatrixStyle) -> String {
        let labels: Vec<String> = self.cols.iter().map(|c| c.label.clone()).collect();
        if style == MatrixStyle::Json {
            let m = JsonMatrix {
                rows: self.rows.iter().map(|r| r.label(&self.alphabet)).collect(),
                cols: &labels,
                entries: &self.entries,
            };
            return serde_json::to_string(&m).expect("plain data serializes") + "\n";
        }
        let mut out = String::new();
        out.push('\t');
        out.push_str(&labels.join("\t"));
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(&r.label(&self.alphabet));
            for &v in row {
                out.push('\t');
                if v != 0 || style == MatrixStyle::Plain {
                    out.push_str(&v.to_string());
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrix() {
        let a = Alphabet::parse("x,y").unwrap();
        let md = MultiDegree::new(vec![1, 2]).unwrap();
        let f = BasisFamily::config(&a, WordSet::Lyndon, &md);
        let rows = RowSource::Graph.rows(WordSet::Lyndon, &a, &md);
        let m = PairingMatrix::new(&a, rows, Column::of_family(&f)).unwrap();
        assert_eq!(m.entries(), &[vec![1]]);
        assert_eq!(m.render(MatrixStyle::Plain), "\tLxyy\nGxyy\t1\n");
        assert_eq!(m.recompute(0, 0), 1);
        let rows = RowSource::Bar.rows(WordSet::Lyndon, &a, &md);
        let col = Column::tree(&a, Tree::parse(&a, "[[x,y],y]").unwrap());
        let m = PairingMatrix::new(&a, rows, vec![col]).unwrap();
        assert_eq!(m.render(MatrixStyle::Paper), "\t[[x,y],y]\nxyy*\t1\n");
        assert_eq!(
            m.render(MatrixStyle::Json),
            "{\"rows\":[\"xyy*\"],\"cols\":[\"[[x,y],y]\"],\"entries\":[[1]]}\n"
        );
    }

    #[test]
    fn empty_sides_are_errors() {
        let a = Alphabet::parse("x").unwrap();
        let md = MultiDegree::new(vec![2]).unwrap();
        let rows = RowSource::Bar.rows(WordSet::Lyndon, &a, &md);
        let col = Column::tree(&a, Tree::parse(&a, "[x,x]").unwrap());
        assert_eq!(PairingMatrix::new(&a, rows, vec![col]), Err(Error::EmptyMatrix("row")));
        let rows = vec![RowLabel::Bar(a.parse_word("xx").unwrap())];
        assert_eq!(PairingMatrix::new(&a, rows, vec![]), Err(Error::EmptyMatrix("column")));
    }
}
