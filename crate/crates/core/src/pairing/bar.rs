use num_bigint::BigInt;
use num_traits::Zero;

use crate::lie::{LieElement, Tree};
use crate::words::{Letter, Word};

/// The coefficient of the word `w` in the commutator expansion of `t`.
///
/// Since every word in the expansion of a subtree has that subtree's length,
/// `p([a,b]) = p(a)p(b) − p(b)p(a)` contributes to `w` only through the split
/// of `w` at `|a|` and at `|b|`.
pub fn bar_coefficient(w: &[Letter], t: &Tree) -> i64 {
    if w.len() != t.leaf_count() {
        return 0;
    }
    coefficient(w, t)
}

fn coefficient(w: &[Letter], t: &Tree) -> i64 {
    match t {
        Tree::Leaf(l) => i64::from(w[0] == *l),
        Tree::Node(a, b) => {
            let (na, nb) = (a.leaf_count(), b.leaf_count());
            let mut c = 0;
            let x = coefficient(&w[..na], a);
            if x != 0 {
                c += x * coefficient(&w[na..], b);
            }
            let y = coefficient(&w[..nb], b);
            if y != 0 {
                c -= y * coefficient(&w[nb..], a);
            }
            c
        }
    }
}

/// `⟨w*, e⟩`, the coefficient of `w` in the expansion of `e`.
pub fn pair_bar(w: &Word, e: &LieElement) -> BigInt {
    let mut total = BigInt::zero();
    for (t, c) in e.terms() {
        let v = bar_coefficient(w, t);
        if v != 0 {
            total += c * v;
        }
    }
    total
}
