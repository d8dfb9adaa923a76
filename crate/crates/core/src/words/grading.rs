//! The simple-word grading.
//!
//! Level 0 holds single letters. A word at level `m` factors uniquely as
//! `ω^k ψ_1 … ψ_ℓ` over level `m - 1` blocks that all share the initial block
//! `ω`, with `k, ℓ ≥ 1` and every `ψ_i ≠ ω`.

use super::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedDecomposition {
    Letter(Letter),
    Simple {
        level: usize,
        head: Box<GradedDecomposition>,
        exponent: usize,
        tail: Vec<GradedDecomposition>,
    },
}

impl GradedDecomposition {
    pub fn level(&self) -> usize {
        match self {
            Self::Letter(_) => 0,
            Self::Simple { level, .. } => *level,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Self::Letter(_) => 1,
            Self::Simple {
                head, exponent, tail, ..
            } => head.len() * exponent + tail.iter().map(Self::len).sum::<usize>(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn flatten(&self) -> Word {
        let mut out = Vec::with_capacity(self.len());
        self.flatten_into(&mut out);
        Word(out)
    }

    fn flatten_into(&self, out: &mut Vec<Letter>) {
        match self {
            Self::Letter(l) => out.push(*l),
            Self::Simple {
                head, exponent, tail, ..
            } => {
                for _ in 0..*exponent {
                    head.flatten_into(out);
                }
                for t in tail {
                    t.flatten_into(out);
                }
            }
        }
    }
}

/// Result of grading a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grading {
    /// The word lies in `A_m` for `m = decomposition.level()`.
    Graded(GradedDecomposition),
    /// The word factors into two or more level-`level` blocks that admit no
    /// further simple-word grouping (for example `121`, or `11`).
    Partial {
        level: usize,
        blocks: Vec<GradedDecomposition>,
    },
}

impl Grading {
    /// The greatest level at which the word has a block factorization.
    pub fn level(&self) -> usize {
        match self {
            Self::Graded(d) => d.level(),
            Self::Partial { level, .. } => *level,
        }
    }

    pub fn decomposition(&self) -> Option<&GradedDecomposition> {
        match self {
            Self::Graded(d) => Some(d),
            Self::Partial { .. } => None,
        }
    }

    pub fn into_decomposition(self) -> Option<GradedDecomposition> {
        match self {
            Self::Graded(d) => Some(d),
            Self::Partial { .. } => None,
        }
    }

    pub fn flatten(&self) -> Word {
        match self {
            Self::Graded(d) => d.flatten(),
            Self::Partial { blocks, .. } => {
                let mut out = Vec::new();
                for b in blocks {
                    b.flatten_into(&mut out);
                }
                Word(out)
            }
        }
    }
}

struct Block {
    word: Vec<Letter>,
    tree: GradedDecomposition,
}

/// Computes the unique maximal-level decomposition of `w`.
pub fn simple_grade(w: &[Letter]) -> Grading {
    let mut items: Vec<Block> = w
        .iter()
        .map(|&l| Block {
            word: vec![l],
            tree: GradedDecomposition::Letter(l),
        })
        .collect();
    let mut level = 0;
    while items.len() > 1 {
        match group(&items, level + 1) {
            Some(next) => {
                items = next;
                level += 1;
            }
            None => {
                return Grading::Partial {
                    level,
                    blocks: items.into_iter().map(|b| b.tree).collect(),
                }
            }
        }
    }
    Grading::Graded(items.pop().expect("nonempty word").tree)
}

// Groups a block sequence into simple words over its first block, or None if
// some group would have an empty tail.
fn group(items: &[Block], level: usize) -> Option<Vec<Block>> {
    let head = &items[0].word;
    let mut out = Vec::new();
    let mut i = 0;
    while i < items.len() {
        let mut k = 0;
        while i < items.len() && items[i].word == *head {
            k += 1;
            i += 1;
        }
        let start = i;
        while i < items.len() && items[i].word != *head {
            i += 1;
        }
        if k == 0 || start == i {
            return None;
        }
        let mut word = Vec::new();
        for _ in 0..k {
            word.extend_from_slice(head);
        }
        for b in &items[start..i] {
            word.extend_from_slice(&b.word);
        }
        out.push(Block {
            word,
            tree: GradedDecomposition::Simple {
                level,
                head: Box::new(items[0].tree.clone()),
                exponent: k,
                tail: items[start..i].iter().map(|b| b.tree.clone()).collect(),
            },
        });
    }
    Some(out)
}

/// Splits `w` into level-1 blocks relative to its first letter `x`: each block
/// is a run of `x` followed by the non-`x` letters up to the next `x`. Only
/// the final block can lack non-`x` letters.
pub fn head_blocks(w: &[Letter]) -> Vec<&[Letter]> {
    let Some(&x) = w.first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..w.len() {
        if w[i] == x && w[i - 1] != x {
            out.push(&w[start..i]);
            start = i;
        }
    }
    out.push(&w[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn grade(a: &Alphabet, s: &str) -> Grading {
        simple_grade(&a.parse_word(s).unwrap())
    }

    #[test]
    fn level_one_example() {
        let a = Alphabet::numeric(9);
        let g = grade(&a, "112");
        let GradedDecomposition::Simple {
            level,
            head,
            exponent,
            tail,
        } = g.decomposition().unwrap()
        else {
            panic!("expected simple word");
        };
        assert_eq!(*level, 1);
        assert_eq!(head.flatten(), a.parse_word("1").unwrap());
        assert_eq!(*exponent, 2);
        assert_eq!(tail.len(), 1);
        assert_eq!(tail[0].flatten(), a.parse_word("2").unwrap());
        for w in ["12", "122", "13"] {
            assert_eq!(grade(&a, w).level(), 1);
        }
    }

    #[test]
    fn higher_level_examples() {
        let a = Alphabet::numeric(9);
        let g = grade(&a, "112112122");
        let GradedDecomposition::Simple {
            level,
            head,
            exponent,
            tail,
        } = g.decomposition().unwrap()
        else {
            panic!("expected simple word");
        };
        assert_eq!(*level, 2);
        assert_eq!(a.format_word(&head.flatten()), "112");
        assert_eq!(*exponent, 2);
        assert_eq!(tail.len(), 1);
        assert_eq!(a.format_word(&tail[0].flatten()), "122");
        assert_eq!(grade(&a, "11212").level(), 2);
        assert_eq!(grade(&a, &["112112", "12", "1121122"].concat()).level(), 3);
        assert_eq!(grade(&a, &["11211212", "11212", "1121122"].concat()).level(), 3);
        let a4 = ["11211212", "11212", "112122", "11211212", "112122"].concat();
        assert_eq!(grade(&a, &a4).level(), 4);
    }

    #[test]
    fn ungraded_words_report_partial_level() {
        let a = Alphabet::numeric(3);
        assert_eq!(grade(&a, "1"), Grading::Graded(GradedDecomposition::Letter(Letter(0))));
        let g = grade(&a, "121");
        assert!(matches!(g, Grading::Partial { level: 0, .. }));
        assert_eq!(g.flatten(), a.parse_word("121").unwrap());
        assert!(matches!(grade(&a, "11"), Grading::Partial { level: 0, .. }));
        // (12)(12) groups no further: the head block has no tail.
        assert!(matches!(grade(&a, "1212"), Grading::Partial { level: 1, .. }));
    }

    #[test]
    fn head_blocks_split_before_each_new_run() {
        let a = Alphabet::numeric(3);
        let w = a.parse_word("1213112").unwrap();
        let blocks: Vec<String> = head_blocks(&w)
            .into_iter()
            .map(|b| a.format_word(&Word(b.to_vec())))
            .collect();
        assert_eq!(blocks, ["12", "13", "112"]);
        let w = a.parse_word("1211").unwrap();
        assert_eq!(head_blocks(&w).len(), 2);
    }
}
