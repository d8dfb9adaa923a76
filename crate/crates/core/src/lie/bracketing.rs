use super::{LieElement, Tree};
use crate::error::Result;
use crate::words::{is_lyndon, simple_grade, GradedDecomposition, Word, WordSet};

/// The configuration bracketing `𝓛w` of a word in 𝓑 or 𝓑̂.
///
/// `𝓛(ω^k ψ_1 … ψ_ℓ)` brackets `k` copies of `𝓛ω` onto `𝓛ψ_1` from the right,
/// then `𝓛ψ_2, …, 𝓛ψ_ℓ` in turn.
pub fn config_bracketing(w: &Word, set: WordSet) -> Result<Tree> {
    set.check(w)?;
    let d = simple_grade(w)
        .into_decomposition()
        .expect("basis words are simple at their top level");
    Ok(config_tree(&d))
}

pub(crate) fn config_tree(d: &GradedDecomposition) -> Tree {
    match d {
        GradedDecomposition::Letter(l) => Tree::Leaf(*l),
        GradedDecomposition::Simple {
            head, exponent, tail, ..
        } => {
            let h = config_tree(head);
            let mut t = config_tree(&tail[0]);
            for _ in 0..*exponent {
                t = Tree::node(t, h.clone());
            }
            for p in &tail[1..] {
                t = Tree::node(t, config_tree(p));
            }
            t
        }
    }
}

/// The classical Lyndon bracketing `[w] = [[α],[β]]`, where `β` is the
/// lexicographically least proper suffix of `w`.
pub fn classical_bracketing(w: &Word) -> Result<Tree> {
    WordSet::Lyndon.check(w)?;
    Ok(classical(w))
}

fn classical(w: &[crate::words::Letter]) -> Tree {
    if w.len() == 1 {
        return Tree::Leaf(w[0]);
    }
    // Suffixes have distinct lengths, so the minimum is unique.
    let split = (1..w.len()).min_by(|&i, &j| w[i..].cmp(&w[j..])).expect("len >= 2");
    debug_assert!(is_lyndon(&w[..split]) && is_lyndon(&w[split..]));
    Tree::node(classical(&w[..split]), classical(&w[split..]))
}

/// `[[a,b],c] + [[b,c],a] + [[c,a],b]`.
pub fn jacobiator(a: &Tree, b: &Tree, c: &Tree) -> LieElement {
    let mut e = LieElement::zero();
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        e.add_term(Tree::node(Tree::node(x.clone(), y.clone()), z.clone()), 1);
    }
    e
}

/// `[a,b] + [b,a]`.
pub fn antisymmetrizer(a: &Tree, b: &Tree) -> LieElement {
    let mut e = LieElement::from_tree(Tree::node(a.clone(), b.clone()));
    e.add_term(Tree::node(b.clone(), a.clone()), 1);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::uea_expand;
    use crate::words::{lyndon_words, Alphabet, WordFilter};
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn show(a: &Alphabet, t: &Tree) -> String {
        t.display(a).to_string()
    }

    #[test]
    fn configuration_bracketing_examples() {
        let n = Alphabet::numeric(4);
        let t = config_bracketing(&n.parse_word("112").unwrap(), WordSet::Lyndon).unwrap();
        assert_eq!(show(&n, &t), "[[2,1],1]");
        let t = config_bracketing(&n.parse_word("11234").unwrap(), WordSet::Lyndon).unwrap();
        assert_eq!(show(&n, &t), "[[[[2,1],1],3],4]");
        let a = Alphabet::parse("x,y,z").unwrap();
        let t = config_bracketing(&a.parse_word("xyyzxz").unwrap(), WordSet::Lyndon).unwrap();
        assert_eq!(show(&a, &t), "[[z,x],[[[y,x],y],z]]");
        let t = config_bracketing(&a.parse_word("xzxyyz").unwrap(), WordSet::Bhat).unwrap();
        assert_eq!(t.leaf_count(), 6);
        assert!(config_bracketing(&a.parse_word("yx").unwrap(), WordSet::Lyndon).is_err());
        assert!(config_bracketing(&a.parse_word("xzxyyz").unwrap(), WordSet::Lyndon).is_err());
    }

    #[test]
    fn classical_bracketing_examples() {
        let a = Alphabet::parse("x,y").unwrap();
        let c = |s: &str| show(&a, &classical_bracketing(&a.parse_word(s).unwrap()).unwrap());
        assert_eq!(c("xxxyyyy"), "[x,[x,[[[[x,y],y],y],y]]]");
        assert_eq!(c("xxyyxyy"), "[[x,[[x,y],y]],[[x,y],y]]");
        assert_eq!(c("xy"), "[x,y]");
        assert_eq!(c("x"), "x");
        assert!(classical_bracketing(&a.parse_word("yx").unwrap()).is_err());
    }

    #[test]
    fn basis_words_are_fully_graded() {
        let a = Alphabet::numeric(3);
        for n in 1..=8 {
            for set in [WordSet::Lyndon, WordSet::Bhat] {
                for w in set.words(&a, &WordFilter::Length(n)) {
                    let g = simple_grade(&w);
                    assert!(g.decomposition().is_some(), "{w:?}");
                    assert_eq!(g.flatten(), w);
                }
            }
        }
    }

    #[test]
    fn least_suffix_is_unique() {
        let a = Alphabet::numeric(3);
        for n in 2..=7 {
            for w in lyndon_words(&a, &WordFilter::Length(n)) {
                let mut suffixes: Vec<&[_]> = (1..n).map(|i| &w[i..]).collect();
                suffixes.sort();
                assert!(suffixes.windows(2).all(|p| p[0] != p[1]));
            }
        }
    }

    #[test]
    fn expansions_keep_multidegree_and_telescope() {
        let a = Alphabet::numeric(3);
        for n in 2..=7 {
            for w in lyndon_words(&a, &WordFilter::Length(n)) {
                let t = config_bracketing(&w, WordSet::Lyndon).unwrap();
                let p = uea_expand(&t.clone().into());
                let md = w.multidegree(3);
                assert!(p.terms().all(|(u, _)| u.multidegree(3) == md));
                assert_eq!(p.total(), BigInt::zero());
                // Leading coefficient in p(𝓛w) at w itself is ±1.
                let c = p.coefficient(&w);
                assert!(c == BigInt::from(1) || c == BigInt::from(-1), "{w:?}");
            }
        }
    }

    #[test]
    fn relation_generators() {
        let a = Alphabet::parse("x,y,z").unwrap();
        let t = |s: &str| Tree::parse(&a, s).unwrap();
        let e = antisymmetrizer(&t("x"), &t("x"));
        assert_eq!(e.coefficient(&t("[x,x]")), BigInt::from(2));
        assert_eq!(e.len(), 1);
        let j = jacobiator(&t("x"), &t("y"), &t("z"));
        assert_eq!(j.len(), 3);
        assert!(uea_expand(&j).is_zero());
        assert!(uea_expand(&antisymmetrizer(&t("[x,y]"), &t("z"))).is_zero());
    }
}
