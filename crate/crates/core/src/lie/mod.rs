//! Planar binary bracket trees, formal Lie elements and their expansions in
//! the free associative algebra.

mod bracketing;
mod element;

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, MultiDegree, RESERVED};

pub use bracketing::{antisymmetrizer, classical_bracketing, config_bracketing, jacobiator};
pub use element::{uea_expand, LieElement, NCPolynomial};

/// A rooted planar binary tree with labeled leaves: a bracket monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(Letter),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(l: Letter) -> Self {
        Self::Leaf(l)
    }

    pub fn node(left: Tree, right: Tree) -> Self {
        Self::Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Self::Leaf(_))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf(_) => 1,
            Self::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn internal_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// Leaf labels in planar (left to right) order.
    pub fn leaves(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            Self::Leaf(l) => out.push(*l),
            Self::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn multidegree(&self, alphabet_len: usize) -> MultiDegree {
        let mut counts = vec![0; alphabet_len];
        for l in self.leaves() {
            counts[l.index()] += 1;
        }
        MultiDegree::new(counts).expect("trees have at least one leaf")
    }

    pub fn relabel(&self, f: &impl Fn(Letter) -> Letter) -> Tree {
        match self {
            Self::Leaf(l) => Self::Leaf(f(*l)),
            Self::Node(l, r) => Self::node(l.relabel(f), r.relabel(f)),
        }
    }

    /// Replaces the leaf labels, in planar order, by `labels`.
    pub fn with_leaves(&self, labels: &[Letter]) -> Tree {
        assert_eq!(labels.len(), self.leaf_count());
        let mut it = labels.iter().copied();
        self.fill(&mut it)
    }

    fn fill(&self, it: &mut impl Iterator<Item = Letter>) -> Tree {
        match self {
            Self::Leaf(_) => Self::Leaf(it.next().expect("enough labels")),
            Self::Node(l, r) => {
                let l = l.fill(it);
                Self::node(l, r.fill(it))
            }
        }
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Tree> {
        let mut p = Parser {
            alphabet,
            src: text,
            pos: 0,
        };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(t)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> TreeDisplay<'a> {
        TreeDisplay { tree: self, alphabet }
    }

    /// Every planar binary tree shape with `n` leaves, all labeled by letter 0.
    pub fn shapes(n: usize) -> Vec<Tree> {
        let mut memo: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf(Letter(0))]];
        for m in 2..=n {
            let mut out = Vec::new();
            for i in 1..m {
                for l in &memo[i] {
                    for r in &memo[m - i] {
                        out.push(Tree::node(l.clone(), r.clone()));
                    }
                }
            }
            memo.push(out);
        }
        memo.swap_remove(n.min(memo.len() - 1))
    }

    /// Every labeled tree whose leaf labels have multidegree `md`.
    pub fn all_with_multidegree(md: &MultiDegree) -> Vec<Tree> {
        let letters = md.sorted_letters();
        let arrangements = crate::words::words_matching(
            &Alphabet::numeric(md.counts().len()),
            &crate::words::WordFilter::MultiDegree(md.clone()),
        );
        let shapes = Tree::shapes(letters.len());
        let mut out = Vec::with_capacity(shapes.len() * arrangements.len());
        for s in &shapes {
            for w in &arrangements {
                out.push(s.with_leaves(w));
            }
        }
        out
    }

    /// A random shape with the given leaf labels in shuffled order.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, labels: &[Letter]) -> Tree {
        assert!(!labels.is_empty());
        let mut labels = labels.to_vec();
        labels.shuffle(rng);
        random_shape(rng, labels.len()).with_leaves(&labels)
    }
}

fn random_shape<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Tree {
    if n == 1 {
        return Tree::Leaf(Letter(0));
    }
    let k = rng.gen_range(1..n);
    Tree::node(random_shape(rng, k), random_shape(rng, n - k))
}

pub struct TreeDisplay<'a> {
    tree: &'a Tree,
    alphabet: &'a Alphabet,
}

impl fmt::Display for TreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            Tree::Leaf(l) => f.write_str(self.alphabet.token(*l)),
            Tree::Node(l, r) => write!(f, "[{},{}]", l.display(self.alphabet), r.display(self.alphabet)),
        }
    }
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::TreeParse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let l = self.tree()?;
                self.expect(',')?;
                let r = self.tree()?;
                self.expect(']')?;
                Ok(Tree::node(l, r))
            }
            Some(_) => {
                let rest = &self.src[self.pos..];
                let end = rest
                    .find(|c: char| RESERVED.contains(&c) || c.is_whitespace())
                    .unwrap_or(rest.len());
                if end == 0 {
                    return Err(self.error("expected a leaf or '['"));
                }
                let tok = &rest[..end];
                let l = self
                    .alphabet
                    .letter(tok)
                    .map_err(|_| self.error(&format!("unknown letter {tok:?}")))?;
                self.pos += end;
                Ok(Tree::Leaf(l))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}
