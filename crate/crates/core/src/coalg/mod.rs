//! Labeled directed trees with a pivot vertex (graph monomials), bar words,
//! the cobracket and the shuffle product.

mod construct;
mod cut;
mod element;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, MultiDegree};

pub use construct::{as_long_graph, config_graph};
pub use cut::{bar_cut, cobracket, Cut};
pub use element::{arnold_triples, reverse_edge, shuffle, CoElement, CoKey};

/// A connected acyclic directed graph with labeled vertices and a pivot.
///
/// Vertices are numbered `0..n` in the order given; an edge is a pair
/// `(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    labels: Vec<Letter>,
    edges: Vec<(usize, usize)>,
    pivot: usize,
}

impl Graph {
    pub fn new(labels: Vec<Letter>, edges: Vec<(usize, usize)>, pivot: usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Graph("no vertices".into()));
        }
        if pivot >= n {
            return Err(Error::Graph(format!("pivot {pivot} is not a vertex")));
        }
        if edges.len() + 1 != n {
            return Err(Error::Graph(format!(
                "{} edges on {n} vertices; a tree needs {}",
                edges.len(),
                n - 1
            )));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Graph(format!("edge {u}->{v} leaves the vertex set")));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::Graph(format!("edge {u}->{v} closes a cycle")));
            }
            parent[ru] = rv;
        }
        Ok(Self { labels, edges, pivot })
    }

    pub fn single(label: Letter) -> Self {
        Self {
            labels: vec![label],
            edges: Vec::new(),
            pivot: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[Letter] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Letter {
        self.labels[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn multidegree(&self, alphabet_len: usize) -> MultiDegree {
        let mut counts = vec![0; alphabet_len];
        for l in &self.labels {
            counts[l.index()] += 1;
        }
        MultiDegree::new(counts).expect("graphs have a vertex")
    }

    /// Undirected adjacency; each entry is `(neighbor, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Vertices in breadth-first order from the pivot.
    pub fn bfs_order(&self) -> Vec<usize> {
        self.bfs(&self.adjacency()).0
    }

    // Breadth-first order from the pivot and each vertex's parent in it.
    fn bfs(&self, adj: &[Vec<(usize, usize)>]) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.len()];
        let mut seen = vec![false; self.len()];
        let mut order = Vec::with_capacity(self.len());
        let mut queue = VecDeque::from([self.pivot]);
        seen[self.pivot] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    pub(crate) fn with_edges(&self, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(self.labels.clone(), edges, self.pivot)
    }

    /// An isomorphic copy in canonical form: vertices renumbered breadth-first
    /// from the pivot, siblings ordered by label, edge direction and subtree
    /// code, and edges sorted. Two graphs are isomorphic as pivoted labeled
    /// directed trees exactly when their canonical forms are equal.
    pub fn canonical(&self) -> Graph {
        let adj = self.adjacency();
        let n = self.len();
        let mut code = vec![String::new(); n];
        let (order, parent) = self.bfs(&adj);
        // Each child gets a key: direction flag, then its subtree code.
        let key = |code: &[String], v: usize, w: usize| -> String {
            let out = self.edges.contains(&(v, w));
            format!("{}{}", if out { '>' } else { '<' }, code[w])
        };
        for &v in order.iter().rev() {
            let mut kids: Vec<String> = adj[v]
                .iter()
                .filter(|&&(w, _)| parent[w] == v)
                .map(|&(w, _)| key(&code, v, w))
                .collect();
            kids.sort();
            code[v] = format!("({}{})", self.labels[v].0, kids.concat());
        }
        let mut new_index = vec![usize::MAX; n];
        let mut seq = vec![self.pivot];
        new_index[self.pivot] = 0;
        let mut i = 0;
        while i < seq.len() {
            let v = seq[i];
            let mut kids: Vec<usize> = adj[v].iter().map(|&(w, _)| w).filter(|&w| parent[w] == v).collect();
            kids.sort_by_cached_key(|&w| key(&code, v, w));
            for w in kids {
                new_index[w] = seq.len();
                seq.push(w);
            }
            i += 1;
        }
        let labels = seq.iter().map(|&v| self.labels[v]).collect();
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (new_index[u], new_index[v])).collect();
        edges.sort_unstable();
        Graph {
            labels,
            edges,
            pivot: 0,
        }
    }

    /// True iff the graph is a directed path through its vertices in
    /// numbering order, as produced by [`as_long_graph`].
    pub fn is_long(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, &e)| e == (i, i + 1))
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> String {
        let doc = GraphDoc {
            vertices: self
                .labels
                .iter()
                .enumerate()
                .map(|(id, &l)| VertexDoc {
                    id: id as u64,
                    label: alphabet.token(l).to_string(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| EdgeDoc {
                    from: u as u64,
                    to: v as u64,
                })
                .collect(),
            pivot: self.pivot as u64,
        };
        serde_json::to_string(&doc).expect("graph documents serialize")
    }

    /// Reads the JSON graph format. Vertex ids may be any distinct
    /// nonnegative integers; they are renumbered in list order.
    pub fn from_json(alphabet: &Alphabet, text: &str) -> Result<Graph> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Graph(format!("bad JSON: {e}")))?;
        let mut index = HashMap::new();
        let mut labels = Vec::with_capacity(doc.vertices.len());
        for (i, v) in doc.vertices.iter().enumerate() {
            if index.insert(v.id, i).is_some() {
                return Err(Error::Graph(format!("duplicate vertex id {}", v.id)));
            }
            labels.push(alphabet.letter(v.label.trim_end_matches('*'))?);
        }
        let lookup = |id: u64| {
            index
                .get(&id)
                .copied()
                .ok_or_else(|| Error::Graph(format!("unknown vertex id {id}")))
        };
        let edges = doc
            .edges
            .iter()
            .map(|e| Ok((lookup(e.from)?, lookup(e.to)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(labels, edges, lookup(doc.pivot)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
    pivot: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: u64,
    label: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    from: u64,
    to: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(i: u16) -> Letter {
        Letter(i)
    }

    #[test]
    fn validation() {
        assert!(Graph::new(vec![], vec![], 0).is_err());
        assert!(Graph::new(vec![l(0)], vec![], 1).is_err());
        assert!(Graph::new(vec![l(0), l(1)], vec![], 0).is_err());
        assert!(Graph::new(vec![l(0), l(1), l(0)], vec![(0, 1), (1, 0)], 0).is_err());
        assert!(Graph::new(vec![l(0), l(1)], vec![(0, 2)], 0).is_err());
        assert!(Graph::new(vec![l(0), l(1), l(2)], vec![(0, 1), (2, 1)], 2).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let a = Alphabet::parse("a,b").unwrap();
        let g = Graph::new(vec![l(1), l(0), l(1)], vec![(0, 1), (1, 2)], 1).unwrap();
        let text = g.to_json(&a);
        assert_eq!(
            text,
            r#"{"vertices":[{"id":0,"label":"b"},{"id":1,"label":"a"},{"id":2,"label":"b"}],"edges":[{"from":0,"to":1},{"from":1,"to":2}],"pivot":1}"#
        );
        assert_eq!(Graph::from_json(&a, &text).unwrap(), g);
        let sparse = r#"{"vertices":[{"id":7,"label":"a*"},{"id":3,"label":"b"}],
                         "edges":[{"from":3,"to":7}],"pivot":3}"#;
        let h = Graph::from_json(&a, sparse).unwrap();
        assert_eq!(h.edges(), &[(1, 0)]);
        assert_eq!(h.pivot(), 1);
        assert!(Graph::from_json(&a, r#"{"vertices":[],"edges":[],"pivot":0}"#).is_err());
        assert!(Graph::from_json(&a, "[").is_err());
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        // b <- a -> c  with pivot a, listed two different ways.
        let g = Graph::new(vec![l(0), l(1), l(2)], vec![(0, 1), (0, 2)], 0).unwrap();
        let h = Graph::new(vec![l(2), l(1), l(0)], vec![(2, 0), (2, 1)], 2).unwrap();
        assert_eq!(g.canonical(), h.canonical());
        // Reversing an edge or moving the pivot changes the class.
        let r = Graph::new(vec![l(0), l(1), l(2)], vec![(1, 0), (0, 2)], 0).unwrap();
        assert_ne!(g.canonical(), r.canonical());
        let p = Graph::new(vec![l(0), l(1), l(2)], vec![(0, 1), (0, 2)], 1).unwrap();
        assert_ne!(g.canonical(), p.canonical());
        assert_eq!(g.canonical().canonical(), g.canonical());
    }
}
