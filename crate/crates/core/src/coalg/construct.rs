use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::error::Result;
use crate::words::{simple_grade, GradedDecomposition, Letter, Word, WordSet};

/// The configuration graph `𝓖w` of a word in 𝓑 or 𝓑̂.
///
/// For `w = ω^k ψ_1 … ψ_ℓ` this joins `𝓖ψ_1`, `k` copies of `𝓖ω` and
/// `𝓖ψ_2, …, 𝓖ψ_ℓ` by two chains of edges out of the pivot of `𝓖ψ_1`: one
/// through the pivots of the `𝓖ω` copies, one through the pivots of
/// `𝓖ψ_2, …, 𝓖ψ_ℓ`. The pivot of `𝓖ψ_1` stays the pivot.
pub fn config_graph(w: &Word, set: WordSet) -> Result<Graph> {
    set.check(w)?;
    let d = simple_grade(w)
        .into_decomposition()
        .expect("basis words are simple at their top level");
    let mut labels = Vec::with_capacity(w.len());
    let mut edges = Vec::with_capacity(w.len() - 1);
    let pivot = build(&d, &mut labels, &mut edges);
    Graph::new(labels, edges, pivot)
}

fn build(d: &GradedDecomposition, labels: &mut Vec<Letter>, edges: &mut Vec<(usize, usize)>) -> usize {
    match d {
        GradedDecomposition::Letter(l) => {
            labels.push(*l);
            labels.len() - 1
        }
        GradedDecomposition::Simple {
            head, exponent, tail, ..
        } => {
            let pivot = build(&tail[0], labels, edges);
            let mut prev = pivot;
            for _ in 0..*exponent {
                let p = build(head, labels, edges);
                edges.push((prev, p));
                prev = p;
            }
            prev = pivot;
            for t in &tail[1..] {
                let p = build(t, labels, edges);
                edges.push((prev, p));
                prev = p;
            }
            pivot
        }
    }
}

/// The path `w_1 → w_2 → … → w_n`, pivoted at its first vertex.
pub fn as_long_graph(w: &Word) -> Graph {
    let edges = (1..w.len()).map(|i| (i - 1, i)).collect();
    Graph::new(w.to_vec(), edges, 0).expect("paths are trees")
}

impl Graph {
    /// Every directed tree on vertices labeled `labels[0], labels[1], …`,
    /// pivoted at vertex 0. Isomorphic copies are not merged.
    pub fn all_with_labels(labels: &[Letter]) -> Vec<Graph> {
        let n = labels.len();
        let mut shapes = Vec::new();
        if n == 1 {
            shapes.push(Vec::new());
        } else if n == 2 {
            shapes.push(vec![(0, 1)]);
        } else if n > 2 {
            let mut code = vec![0usize; n - 2];
            'next: loop {
                shapes.push(prufer_edges(&code, n));
                for i in (0..n - 2).rev() {
                    code[i] += 1;
                    if code[i] < n {
                        continue 'next;
                    }
                    code[i] = 0;
                }
                break;
            }
        }
        let mut out = Vec::new();
        for edges in shapes {
            let m = edges.len();
            for mask in 0u32..(1 << m) {
                let oriented = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                out.push(Graph::new(labels.to_vec(), oriented, 0).expect("Prüfer trees"));
            }
        }
        out
    }

    /// A uniformly random labeled tree with random orientations and a random
    /// pivot; `labels` are assigned to vertices in shuffled order.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, labels: &[Letter]) -> Graph {
        let n = labels.len();
        assert!(n > 0);
        let mut labels = labels.to_vec();
        labels.shuffle(rng);
        let edges = match n {
            1 => Vec::new(),
            2 => vec![(0, 1)],
            _ => {
                let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
                prufer_edges(&code, n)
            }
        };
        let edges = edges
            .into_iter()
            .map(|(u, v)| if rng.gen() { (v, u) } else { (u, v) })
            .collect();
        let pivot = rng.gen_range(0..n);
        Graph::new(labels, edges, pivot).expect("Prüfer trees")
    }
}

fn prufer_edges(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Alphabet, WordFilter};
    use std::collections::HashSet;

    #[test]
    fn small_drawn_graphs() {
        let a = Alphabet::numeric(4);
        let g = config_graph(&a.parse_word("112").unwrap(), WordSet::Lyndon).unwrap();
        assert_eq!(g.labels(), &[Letter(1), Letter(0), Letter(0)]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.pivot(), 0);
        let g = config_graph(&a.parse_word("11234").unwrap(), WordSet::Lyndon).unwrap();
        let lab = |v: usize| a.token(g.label(v)).to_string();
        let mut drawn: Vec<String> = g.edges().iter().map(|&(u, v)| lab(u) + ">" + &lab(v)).collect();
        drawn.sort();
        assert_eq!(drawn, ["1>1", "2>1", "2>3", "3>4"]);
        assert_eq!(lab(g.pivot()), "2");
        let g = config_graph(&a.parse_word("1").unwrap(), WordSet::Lyndon).unwrap();
        assert_eq!(g.len(), 1);
        assert!(config_graph(&a.parse_word("21").unwrap(), WordSet::Lyndon).is_err());
    }

    #[test]
    fn structure_of_configuration_graphs() {
        let a = Alphabet::numeric(3);
        for n in 1..=7 {
            let mut seen = HashSet::new();
            for w in WordSet::Lyndon.words(&a, &WordFilter::Length(n)) {
                let g = config_graph(&w, WordSet::Lyndon).unwrap();
                assert_eq!(g.len(), n);
                let mut got = g.labels().to_vec();
                got.sort();
                let mut want = w.to_vec();
                want.sort();
                assert_eq!(got, want);
                let x = w[0];
                for v in 0..n {
                    if g.label(v) == x {
                        assert!(g.degree(v) <= 2, "{w:?}");
                        assert!(n == 1 || v != g.pivot());
                    }
                    if g.label(v) != x {
                        let adj_x = g
                            .edges()
                            .iter()
                            .filter(|&&(p, q)| (p == v && g.label(q) == x) || (q == v && g.label(p) == x))
                            .count();
                        assert!(adj_x <= 1, "{w:?}");
                    }
                }
                assert!(seen.insert(g.canonical()), "canonical collision at {w:?}");
            }
        }
    }

    #[test]
    fn long_graphs() {
        let a = Alphabet::parse("x,y,z").unwrap();
        let g = as_long_graph(&a.parse_word("xyz").unwrap());
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.is_long());
        assert_eq!(as_long_graph(&a.parse_word("x").unwrap()).len(), 1);
    }

    #[test]
    fn enumeration_counts() {
        // n^(n-2) labeled trees, 2^(n-1) orientations each.
        let labels = [Letter(0); 5];
        assert_eq!(Graph::all_with_labels(&labels[..1]).len(), 1);
        assert_eq!(Graph::all_with_labels(&labels[..2]).len(), 2);
        assert_eq!(Graph::all_with_labels(&labels[..3]).len(), 3 * 4);
        assert_eq!(Graph::all_with_labels(&labels[..4]).len(), 16 * 8);
        assert_eq!(Graph::all_with_labels(&labels).len(), 125 * 16);
    }
}
