use super::Graph;
use crate::words::Word;

/// One term `sign · left ⊗ right` of a cobracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut<T> {
    pub sign: i8,
    pub left: T,
    pub right: T,
}

/// The cobracket: for each edge `e`, with `γ₁` the piece holding the source
/// and `γ₂` the piece holding the target once `e` is removed, the terms
/// `+γ₁ ⊗ γ₂` and `−γ₂ ⊗ γ₁`, in edge order.
///
/// Each piece is pivoted at its vertex that comes first in breadth-first
/// order from the original pivot; vertices keep their relative numbering.
pub fn cobracket(g: &Graph) -> Vec<Cut<Graph>> {
    let n = g.len();
    let adj = g.adjacency();
    let mut rank = vec![0; n];
    for (i, v) in g.bfs_order().into_iter().enumerate() {
        rank[v] = i;
    }
    let mut out = Vec::with_capacity(2 * g.edges().len());
    for (cut, &(src, dst)) in g.edges().iter().enumerate() {
        let side = component_mask(&adj, src, cut);
        let a = piece(g, &side, true, &rank);
        let b = piece(g, &side, false, &rank);
        out.push(Cut {
            sign: 1,
            left: a.clone(),
            right: b.clone(),
        });
        out.push(Cut {
            sign: -1,
            left: b,
            right: a,
        });
        debug_assert!(!side[dst]);
    }
    out
}

// Marks the vertices reachable from `start` without crossing edge `skip`.
fn component_mask(adj: &[Vec<(usize, usize)>], start: usize, skip: usize) -> Vec<bool> {
    let mut mark = vec![false; adj.len()];
    let mut stack = vec![start];
    mark[start] = true;
    while let Some(v) = stack.pop() {
        for &(w, e) in &adj[v] {
            if e != skip && !mark[w] {
                mark[w] = true;
                stack.push(w);
            }
        }
    }
    mark
}

fn piece(g: &Graph, side: &[bool], keep: bool, rank: &[usize]) -> Graph {
    let mut index = vec![usize::MAX; g.len()];
    let mut labels = Vec::new();
    for v in 0..g.len() {
        if side[v] == keep {
            index[v] = labels.len();
            labels.push(g.label(v));
        }
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| side[u] == keep && side[v] == keep)
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    let pivot = (0..g.len())
        .filter(|&v| side[v] == keep)
        .min_by_key(|&v| rank[v])
        .expect("pieces are nonempty");
    Graph::new(labels, edges, index[pivot]).expect("pieces of trees are trees")
}

/// Cuts of a bar word: for each position `i`, `+w[..i] ⊗ w[i..]` and
/// `−w[i..] ⊗ w[..i]`.
pub fn bar_cut(w: &Word) -> Vec<Cut<Word>> {
    let mut out = Vec::with_capacity(2 * w.len().saturating_sub(1));
    for i in 1..w.len() {
        let a = Word::new(w[..i].to_vec()).expect("nonempty");
        let b = Word::new(w[i..].to_vec()).expect("nonempty");
        out.push(Cut {
            sign: 1,
            left: a.clone(),
            right: b.clone(),
        });
        out.push(Cut {
            sign: -1,
            left: b,
            right: a,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::as_long_graph;
    use crate::words::{words_matching, Alphabet, Letter, WordFilter};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn l(i: u16) -> Letter {
        Letter(i)
    }

    #[test]
    fn single_edge_and_vertex() {
        let g = Graph::new(vec![l(0), l(1)], vec![(0, 1)], 0).unwrap();
        let c = cobracket(&g);
        assert_eq!(c.len(), 2);
        assert_eq!(
            (c[0].sign, c[0].left.labels(), c[0].right.labels()),
            (1, &[l(0)][..], &[l(1)][..])
        );
        assert_eq!(
            (c[1].sign, c[1].left.labels(), c[1].right.labels()),
            (-1, &[l(1)][..], &[l(0)][..])
        );
        assert!(cobracket(&Graph::single(l(0))).is_empty());
    }

    #[test]
    fn path_of_three() {
        let g = Graph::new(vec![l(0), l(1), l(2)], vec![(0, 1), (1, 2)], 0).unwrap();
        let c = cobracket(&g);
        assert_eq!(c.len(), 4);
        assert_eq!(c[0].left.labels(), &[l(0)]);
        assert_eq!(c[0].right.labels(), &[l(1), l(2)]);
        assert_eq!(c[0].right.edges(), &[(0, 1)]);
        assert_eq!(c[2].left.labels(), &[l(0), l(1)]);
        assert_eq!(c[2].right.labels(), &[l(2)]);
        assert_eq!(c[3].sign, -1);
    }

    #[test]
    fn cobracket_is_antisymmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=7 {
            for _ in 0..20 {
                let labels: Vec<Letter> = (0..n).map(|i| l(i % 3)).collect();
                let g = Graph::random(&mut rng, &labels);
                let c = cobracket(&g);
                for t in &c {
                    assert!(c
                        .iter()
                        .any(|u| u.sign == -t.sign && u.left == t.right && u.right == t.left));
                    assert_eq!(t.left.len() + t.right.len(), n as usize);
                }
            }
        }
    }

    #[test]
    fn bar_cuts_match_long_graph_cuts() {
        let a = Alphabet::numeric(3);
        assert!(bar_cut(&a.parse_word("1").unwrap()).is_empty());
        assert_eq!(bar_cut(&a.parse_word("123").unwrap()).len(), 4);
        for n in 1..=5 {
            for w in words_matching(&a, &WordFilter::Length(n)) {
                let bars = bar_cut(&w);
                let graphs = cobracket(&as_long_graph(&w));
                assert_eq!(bars.len(), graphs.len());
                for (b, g) in bars.iter().zip(&graphs) {
                    assert_eq!(b.sign, g.sign);
                    assert_eq!(as_long_graph(&b.left), g.left);
                    assert_eq!(as_long_graph(&b.right), g.right);
                }
            }
        }
    }
}
