use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Graph;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A coalgebra monomial: a graph (kept in canonical form) or a bar word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoKey {
    Graph(Graph),
    Bar(Word),
}

impl CoKey {
    pub fn display(&self, alphabet: &Alphabet) -> String {
        match self {
            Self::Graph(g) => g.to_json(alphabet),
            Self::Bar(w) => alphabet.format_bar(w),
        }
    }
}

/// A finite integer combination of graphs and bar words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoElement {
    terms: BTreeMap<CoKey, BigInt>,
}

impl CoElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn graph(g: &Graph) -> Self {
        let mut e = Self::zero();
        e.add_graph(g, 1);
        e
    }

    pub fn bar(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_bar(w, 1);
        e
    }

    pub fn add_graph(&mut self, g: &Graph, c: impl Into<BigInt>) {
        self.add(CoKey::Graph(g.canonical()), c.into());
    }

    pub fn add_bar(&mut self, w: Word, c: impl Into<BigInt>) {
        self.add(CoKey::Bar(w), c.into());
    }

    fn add(&mut self, k: CoKey, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&CoKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &CoKey) -> BigInt {
        self.terms.get(k).cloned().unwrap_or_default()
    }
}

/// The shuffle product of `u` and `v` as a sum of bar words.
pub fn shuffle(u: &Word, v: &Word) -> CoElement {
    let mut out = CoElement::zero();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    interleave(u, v, &mut buf, &mut |w| {
        out.add_bar(Word::new(w.to_vec()).expect("nonempty"), 1)
    });
    out
}

fn interleave(u: &[Letter], v: &[Letter], buf: &mut Vec<Letter>, emit: &mut impl FnMut(&[Letter])) {
    if u.is_empty() && v.is_empty() {
        emit(buf);
        return;
    }
    if let Some((&x, rest)) = u.split_first() {
        buf.push(x);
        interleave(rest, v, buf, emit);
        buf.pop();
    }
    if let Some((&y, rest)) = v.split_first() {
        buf.push(y);
        interleave(u, rest, buf, emit);
        buf.pop();
    }
}

/// `g` with edge `e` reversed.
pub fn reverse_edge(g: &Graph, e: usize) -> Result<Graph> {
    let mut edges = g.edges().to_vec();
    let (u, v) = *edges.get(e).ok_or_else(|| Error::Graph(format!("no edge {e}")))?;
    edges[e] = (v, u);
    g.with_edges(edges)
}

/// The Arnold combination on vertices `a, b, c` of `g`, which must contain
/// the edges `a → b` and `b → c`:
/// `g(a→b, b→c) + g(b→c, c→a) + g(a→b, c→a)`, the rest of `g` unchanged.
pub fn arnold_triples(g: &Graph, a: usize, b: usize, c: usize) -> Result<CoElement> {
    let find = |p: (usize, usize)| {
        g.edges()
            .iter()
            .position(|&e| e == p)
            .ok_or_else(|| Error::Graph(format!("no edge {}->{}", p.0, p.1)))
    };
    let ab = find((a, b))?;
    let bc = find((b, c))?;
    let mut out = CoElement::graph(g);
    for replace in [ab, bc] {
        let mut edges = g.edges().to_vec();
        edges[replace] = (c, a);
        out.add_graph(&g.with_edges(edges)?, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn shuffles() {
        let a = Alphabet::parse("x,y,z").unwrap();
        let w = |s: &str| a.parse_word(s).unwrap();
        let s = shuffle(&w("x"), &w("y"));
        let bars: Vec<String> = s.terms().map(|(k, _)| k.display(&a)).collect();
        assert_eq!(bars, ["x|y", "y|x"]);
        let s = shuffle(&w("xy"), &w("z"));
        let bars: Vec<String> = s.terms().map(|(k, _)| k.display(&a)).collect();
        assert_eq!(bars, ["x|y|z", "x|z|y", "z|x|y"]);
        let s = shuffle(&w("xx"), &w("x"));
        assert_eq!(s.coefficient(&CoKey::Bar(w("xxx"))), BigInt::from(3));
        let s = shuffle(&w("xyz"), &w("yx"));
        let total: i64 = s.terms().map(|(_, c)| c.to_i64().unwrap()).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn reversing_and_arnold() {
        let g = Graph::new(vec![Letter(0), Letter(1)], vec![(0, 1)], 0).unwrap();
        assert_eq!(reverse_edge(&g, 0).unwrap().edges(), &[(1, 0)]);
        assert!(reverse_edge(&g, 1).is_err());
        let p = Graph::new(vec![Letter(0), Letter(1), Letter(2)], vec![(0, 1), (1, 2)], 0).unwrap();
        let e = arnold_triples(&p, 0, 1, 2).unwrap();
        assert_eq!(e.len(), 3);
        assert!(arnold_triples(&p, 2, 1, 0).is_err());
    }

    #[test]
    fn graph_terms_merge_by_isomorphism() {
        let g = Graph::new(vec![Letter(0), Letter(1)], vec![(0, 1)], 0).unwrap();
        let h = Graph::new(vec![Letter(1), Letter(0)], vec![(1, 0)], 1).unwrap();
        let mut e = CoElement::graph(&g);
        e.add_graph(&h, -1);
        assert!(e.is_zero());
    }
}
