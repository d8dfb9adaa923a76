use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Tree;
use crate::words::{Alphabet, MultiDegree, Word};

/// A finite integer combination of bracket trees. Trees are compared
/// structurally; no Lie relations are applied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<Tree, BigInt>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_tree(t: Tree) -> Self {
        Self::term(t, BigInt::one())
    }

    pub fn term(t: Tree, c: impl Into<BigInt>) -> Self {
        let mut e = Self::zero();
        e.add_term(t, c);
        e
    }

    pub fn add_term(&mut self, t: Tree, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tree, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Tree) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    /// Formal bilinear bracket.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(Tree::node(a.clone(), b.clone()), x * y);
            }
        }
        out
    }

    /// Splits the element into its homogeneous multidegree components.
    pub fn split_by_multidegree(&self, alphabet_len: usize) -> BTreeMap<MultiDegree, LieElement> {
        let mut out: BTreeMap<MultiDegree, LieElement> = BTreeMap::new();
        for (t, c) in &self.terms {
            out.entry(t.multidegree(alphabet_len))
                .or_default()
                .add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        Combination(
            self.terms
                .iter()
                .map(|(t, c)| (t.display(alphabet).to_string(), c))
                .collect(),
        )
    }
}

impl From<Tree> for LieElement {
    fn from(t: Tree) -> Self {
        Self::from_tree(t)
    }
}

impl Add for &LieElement {
    type Output = LieElement;

    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LieElement {
    type Output = LieElement;

    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &-rhs
    }
}

impl Neg for &LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        self.scale(&BigInt::from(-1))
    }
}

/// A polynomial in noncommuting variables with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, BigInt>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, BigInt::one());
        p
    }

    pub fn add_term(&mut self, w: Word, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        Combination(self.terms.iter().map(|(w, c)| (alphabet.format_word(w), c)).collect())
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;

    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;

    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &NCPolynomial {
    type Output = NCPolynomial;

    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.letters().to_vec();
                w.extend_from_slice(v);
                out.add_term(Word::new(w).expect("nonempty"), a * b);
            }
        }
        out
    }
}

/// The image in the free associative algebra: leaves become one-letter words
/// and brackets become commutators.
pub fn uea_expand(e: &LieElement) -> NCPolynomial {
    let mut out = NCPolynomial::zero();
    for (t, c) in e.terms() {
        for (w, v) in uea_tree(t).terms {
            out.add_term(w, v * c);
        }
    }
    out
}

fn uea_tree(t: &Tree) -> NCPolynomial {
    match t {
        Tree::Leaf(l) => NCPolynomial::monomial(Word::letter(*l)),
        Tree::Node(a, b) => {
            let (pa, pb) = (uea_tree(a), uea_tree(b));
            &(&pa * &pb) - &(&pb * &pa)
        }
    }
}

// Prints `c1*x1 + c2*x2 - …`, or `0`.
struct Combination<'a>(Vec<(String, &'a BigInt)>);

impl fmt::Display for Combination<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.0.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -*c } else { (*c).clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str(s)?;
        }
        Ok(())
    }
}
