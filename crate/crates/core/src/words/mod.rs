//! Ordered alphabets and words over them.
//!
//! Letters are stored as indices into an [`Alphabet`], so the derived ordering
//! on [`Letter`] is the alphabet order and the derived ordering on [`Word`] is
//! the lexicographic (dictionary) order, with a proper prefix sorting first.

mod count;
mod grading;
mod lyndon;
mod order;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use count::{fine_witt_count, mobius, witt_count};
pub use grading::{head_blocks, simple_grade, GradedDecomposition, Grading};
pub use lyndon::{is_lyndon, lyndon_words, words_matching};
pub use order::{bhat_words, compare, is_bhat, sort_words, WordOrder};

/// Characters that may not appear inside an alphabet token.
pub const RESERVED: &[char] = &['|', '[', ']', '(', ')', ',', '*', ' ', '.', '\t', '\n', '\r'];

/// A letter, identified by its position in the owning alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, totally ordered set of tokens. Order is list position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut lookup = HashMap::with_capacity(tokens.len());
        for (i, tok) in tokens.iter().enumerate() {
            if tok.is_empty() || tok.contains(RESERVED) {
                return Err(Error::InvalidToken(tok.clone()));
            }
            if lookup.insert(tok.clone(), Letter(i as u16)).is_some() {
                return Err(Error::DuplicateToken(tok.clone()));
            }
        }
        Ok(Self { tokens, lookup })
    }

    /// Parses a comma separated token list such as `x,y,z`.
    pub fn parse(spec: &str) -> Result<Self> {
        if spec.trim().is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Self::new(spec.split(',').map(str::trim))
    }

    /// The alphabet `1 < 2 < … < d`.
    pub fn numeric(d: usize) -> Self {
        Self::new((1..=d).map(|i| i.to_string())).expect("numeric tokens are valid")
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.tokens.len()).map(|i| Letter(i as u16))
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.tokens[letter.index()]
    }

    pub fn letter(&self, token: &str) -> Result<Letter> {
        self.lookup
            .get(token)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(token.to_string()))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.tokens.len()
    }

    /// True when every token is a single character, in which case words are
    /// written by plain concatenation.
    pub fn is_single_char(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters = if self.is_single_char() && !text.contains('.') {
            text.chars()
                .map(|c| self.letter(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split('.').map(|t| self.letter(t)).collect::<Result<Vec<_>>>()?
        };
        Ok(Word(letters))
    }

    /// Parses a bar word such as `x|y|z`.
    pub fn parse_bar(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters = text
            .split('|')
            .map(|t| self.letter(t.trim().trim_end_matches('*')))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }

    pub fn format_word(&self, word: &Word) -> String {
        let sep = if self.is_single_char() { "" } else { "." };
        word.iter().map(|&l| self.token(l)).collect::<Vec<_>>().join(sep)
    }

    pub fn format_bar(&self, word: &Word) -> String {
        word.iter().map(|&l| self.token(l)).collect::<Vec<_>>().join("|")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens.join(","))
    }
}

/// A nonempty sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    /// Builds a word from raw letter indices; handy in tests.
    pub fn from_indices(indices: &[u16]) -> Self {
        assert!(!indices.is_empty(), "words are nonempty");
        Self(indices.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn first(&self) -> Letter {
        self.0[0]
    }

    /// The cyclic rotation starting at position `i`.
    pub fn rotation(&self, i: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    pub fn multidegree(&self, alphabet_len: usize) -> MultiDegree {
        let mut counts = vec![0; alphabet_len];
        for l in &self.0 {
            counts[l.index()] += 1;
        }
        MultiDegree { counts }
    }

    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }
}

impl std::ops::Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

/// Letter multiplicities, indexed by letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree {
    counts: Vec<usize>,
}

impl MultiDegree {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.iter().sum::<usize>() == 0 {
            return Err(Error::ZeroMultiDegree);
        }
        Ok(Self { counts })
    }

    /// Checks the arity against `alphabet` as well.
    pub fn for_alphabet(alphabet: &Alphabet, counts: Vec<usize>) -> Result<Self> {
        if counts.len() != alphabet.len() {
            return Err(Error::MultiDegreeArity {
                expected: alphabet.len(),
                got: counts.len(),
            });
        }
        Self::new(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, l: Letter) -> usize {
        self.counts.get(l.index()).copied().unwrap_or(0)
    }

    /// Total number of letters.
    pub fn n(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The letters in nondecreasing order, each repeated by its count.
    pub fn sorted_letters(&self) -> Vec<Letter> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(Letter(i as u16), c))
            .collect()
    }

    /// Every multidegree over `d` letters with total `n`.
    pub fn all(d: usize, n: usize) -> Vec<MultiDegree> {
        fn rec(d: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiDegree>) {
            if cur.len() + 1 == d {
                cur.push(left);
                out.push(MultiDegree { counts: cur.clone() });
                cur.pop();
                return;
            }
            for c in (0..=left).rev() {
                cur.push(c);
                rec(d, left - c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if d > 0 && n > 0 {
            rec(d, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Selects words either by length or by exact multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordFilter {
    Length(usize),
    MultiDegree(MultiDegree),
}

/// The two word sets that index configuration bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordSet {
    /// Lyndon-Shirshov words, 𝓑.
    Lyndon,
    /// Words strictly `≺`-minimal among their rotations, 𝓑̂.
    Bhat,
}

impl WordSet {
    pub fn name(self) -> &'static str {
        match self {
            Self::Lyndon => "lyndon",
            Self::Bhat => "bhat",
        }
    }

    pub fn contains(self, w: &[Letter]) -> bool {
        match self {
            Self::Lyndon => is_lyndon(w),
            Self::Bhat => is_bhat(w),
        }
    }

    /// Members selected by `filter`, in the set's canonical order.
    pub fn words(self, alphabet: &Alphabet, filter: &WordFilter) -> Vec<Word> {
        match self {
            Self::Lyndon => lyndon_words(alphabet, filter),
            Self::Bhat => bhat_words(alphabet, filter),
        }
    }

    /// Lex for 𝓑, `≺` for 𝓑̂.
    pub fn order(self) -> WordOrder {
        match self {
            Self::Lyndon => WordOrder::Lex,
            Self::Bhat => WordOrder::Block,
        }
    }

    pub(crate) fn check(self, w: &Word) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInBasisSet {
                word: w.iter().map(|l| format!("v{}", l.0 + 1)).collect::<Vec<_>>().join("."),
                set: self.name(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_bad_tokens() {
        assert_eq!(Alphabet::parse(""), Err(Error::EmptyAlphabet));
        assert!(matches!(Alphabet::parse("x,x"), Err(Error::DuplicateToken(_))));
        assert!(matches!(Alphabet::parse("x,[y"), Err(Error::InvalidToken(_))));
        assert!(matches!(Alphabet::parse("x,,y"), Err(Error::InvalidToken(_))));
    }

    #[test]
    fn word_text_formats() {
        let a = Alphabet::parse("x,y,z").unwrap();
        let w = a.parse_word("xxyzz").unwrap();
        assert_eq!(a.format_word(&w), "xxyzz");
        assert_eq!(a.format_bar(&w), "x|x|y|z|z");
        assert_eq!(a.parse_bar("x|x|y|z|z").unwrap(), w);
        assert!(matches!(a.parse_word("xq"), Err(Error::UnknownLetter(_))));

        let v = Alphabet::parse("v1,v2,v10").unwrap();
        let w = v.parse_word("v1.v10.v2").unwrap();
        assert_eq!(w.letters(), &[Letter(0), Letter(2), Letter(1)]);
        assert_eq!(v.format_word(&w), "v1.v10.v2");
    }

    #[test]
    fn word_order_is_dictionary_order() {
        let a = Alphabet::numeric(2);
        assert!(a.parse_word("112").unwrap() < a.parse_word("12").unwrap());
        assert!(a.parse_word("1").unwrap() < a.parse_word("11").unwrap());
    }

    #[test]
    fn multidegrees_enumerate() {
        let all = MultiDegree::all(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|m| m.n() == 2));
        assert_eq!(MultiDegree::new(vec![0, 0]), Err(Error::ZeroMultiDegree));
    }
}
