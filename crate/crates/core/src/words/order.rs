//! Word orders and the rotation-minimal set 𝓑̂.

use std::cmp::Ordering;

use super::grading::head_blocks;
use super::lyndon::words_matching;
use super::{Alphabet, Letter, Word, WordFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordOrder {
    /// Dictionary order; a proper prefix sorts first.
    Lex,
    /// Shorter words first, then dictionary order.
    DegLex,
    /// The compatible-block order `≺`.
    Block,
}

pub fn compare(a: &[Letter], b: &[Letter], order: WordOrder) -> Ordering {
    match order {
        WordOrder::Lex => a.cmp(b),
        WordOrder::DegLex => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        WordOrder::Block => block_compare(a, b),
    }
}

// Words compare by first letter, then as sequences of head blocks. A block
// `x^k t` ranks before `x^k' t'` when it has the longer run of `x`, then the
// shorter tail, then the lex smaller tail. A proper prefix sequence sorts first.
fn block_compare(a: &[Letter], b: &[Letter]) -> Ordering {
    match (a.first(), b.first()) {
        (None, None) => return Ordering::Equal,
        (None, Some(_)) => return Ordering::Less,
        (Some(_), None) => return Ordering::Greater,
        (Some(x), Some(y)) if x != y => return x.cmp(y),
        _ => {}
    }
    let ba = head_blocks(a);
    let bb = head_blocks(b);
    for (p, q) in ba.iter().zip(&bb) {
        let c = block_key(p).cmp(&block_key(q));
        if c != Ordering::Equal {
            return c;
        }
    }
    ba.len().cmp(&bb.len())
}

fn block_key(b: &[Letter]) -> (std::cmp::Reverse<usize>, usize, &[Letter]) {
    let k = b.iter().take_while(|&&l| l == b[0]).count();
    (std::cmp::Reverse(k), b.len() - k, &b[k..])
}

/// True iff `w` is strictly `≺`-smaller than each of its nontrivial rotations.
pub fn is_bhat(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    let mut rot = Vec::with_capacity(n);
    (1..n).all(|i| {
        rot.clear();
        rot.extend_from_slice(&w[i..]);
        rot.extend_from_slice(&w[..i]);
        block_compare(w, &rot) == Ordering::Less
    })
}

/// Words of 𝓑̂ selected by `filter`, sorted by `≺`.
pub fn bhat_words(alphabet: &Alphabet, filter: &WordFilter) -> Vec<Word> {
    let mut out: Vec<Word> = words_matching(alphabet, filter)
        .into_iter()
        .filter(|w| {
            // A rotation-minimal word starts with its smallest letter.
            let min = *w.iter().min().expect("nonempty");
            w[0] == min && is_bhat(w)
        })
        .collect();
    sort_words(&mut out, WordOrder::Block);
    out
}

pub fn sort_words(words: &mut [Word], order: WordOrder) {
    words.sort_by(|a, b| compare(a, b, order));
}
