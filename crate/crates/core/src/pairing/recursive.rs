use crate::coalg::{cobracket, Graph};
use crate::lie::Tree;

/// The pairing by the cobracket recursion
/// `⟨γ, [τ₁, τ₂]⟩ = Σ s·⟨α, τ₁⟩⟨β, τ₂⟩` over cobracket terms `s·α ⊗ β`.
pub fn pair_recursive(g: &Graph, t: &Tree) -> i64 {
    if g.len() != t.leaf_count() {
        return 0;
    }
    match t {
        Tree::Leaf(l) => i64::from(g.label(0) == *l),
        Tree::Node(a, b) => {
            let mut gl = g.labels().to_vec();
            let mut tl = t.leaves();
            gl.sort_unstable();
            tl.sort_unstable();
            if gl != tl {
                return 0;
            }
            let na = a.leaf_count();
            let mut total = 0;
            for c in cobracket(g) {
                if c.left.len() != na {
                    continue;
                }
                let x = pair_recursive(&c.left, a);
                if x != 0 {
                    total += i64::from(c.sign) * x * pair_recursive(&c.right, b);
                }
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::pair;
    use crate::words::{Alphabet, Letter};
    use rand::{Rng, SeedableRng};

    #[test]
    fn matches_direct_pairing() {
        let a = Alphabet::parse("a,b").unwrap();
        let t = |s: &str| Tree::parse(&a, s).unwrap();
        let path = |l: [u16; 3]| Graph::new(l.iter().map(|&i| Letter(i)).collect(), vec![(0, 1), (1, 2)], 0).unwrap();
        assert_eq!(pair_recursive(&path([1, 0, 1]), &t("[[a,b],b]")), -2);
        assert_eq!(pair_recursive(&path([0, 1, 1]), &t("[[a,b],b]")), 1);
        assert_eq!(pair_recursive(&path([0, 1, 1]), &t("[[b,b],a]")), 0);
        assert_eq!(pair_recursive(&Graph::single(Letter(0)), &t("a")), 1);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 1..=7 {
            for _ in 0..60 {
                let labels: Vec<Letter> = (0..n).map(|_| Letter(rng.gen_range(0..3))).collect();
                let g = Graph::random(&mut rng, &labels);
                let t = Tree::random(&mut rng, &labels);
                assert_eq!(pair_recursive(&g, &t), pair(&g, &t));
            }
        }
    }
}
