//! The configuration pairing of graphs against trees, computed three ways:
//! by summing over vertex-to-leaf bijections, by the cobracket recursion, and
//! for bar words by coefficient extraction in the free associative algebra.

mod bar;
mod recursive;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coalg::{as_long_graph, CoElement, CoKey, Graph};
use crate::error::{Error, Result};
use crate::lie::{LieElement, Tree};
use crate::words::Letter;

pub use bar::{bar_coefficient, pair_bar};
pub use recursive::pair_recursive;

/// A bijection from graph vertices to tree leaves, leaves numbered left to
/// right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafAssignment {
    mapping: Vec<usize>,
}

impl LeafAssignment {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &leaf in &mapping {
            if leaf >= mapping.len() || std::mem::replace(&mut seen[leaf], true) {
                return Err(Error::Assignment(format!("{mapping:?} is not a permutation")));
            }
        }
        Ok(Self { mapping })
    }

    pub fn leaf(&self, vertex: usize) -> usize {
        self.mapping[vertex]
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    /// True iff every vertex goes to a leaf with the same label.
    pub fn is_label_compatible(&self, g: &Graph, t: &Tree) -> bool {
        let leaves = t.leaves();
        (0..g.len()).all(|v| g.label(v) == leaves[self.mapping[v]])
    }
}

/// A tree flattened for repeated pairing: leaf labels in planar order and the
/// lowest common ancestor of every pair of leaves. Internal nodes are
/// numbered in preorder, so the root is node 0.
#[derive(Debug, Clone)]
pub struct PreparedTree {
    leaves: Vec<Letter>,
    // Row-major `n × n`; the diagonal is unused.
    lca: Vec<usize>,
    n: usize,
}

impl PreparedTree {
    pub fn new(t: &Tree) -> Self {
        let n = t.leaf_count();
        let mut p = Self {
            leaves: Vec::with_capacity(n),
            lca: vec![usize::MAX; n * n],
            n,
        };
        let mut next_node = 0;
        p.walk(t, &mut next_node);
        p
    }

    // Returns the leaf range covered by `t`.
    fn walk(&mut self, t: &Tree, next_node: &mut usize) -> (usize, usize) {
        match t {
            Tree::Leaf(l) => {
                self.leaves.push(*l);
                (self.leaves.len() - 1, self.leaves.len())
            }
            Tree::Node(a, b) => {
                let node = *next_node;
                *next_node += 1;
                let (lo, mid) = self.walk(a, next_node);
                let (_, hi) = self.walk(b, next_node);
                let n = self.n;
                for i in lo..mid {
                    for j in mid..hi {
                        self.lca[i * n + j] = node;
                        self.lca[j * n + i] = node;
                    }
                }
                (lo, hi)
            }
        }
    }

    pub fn leaves(&self) -> &[Letter] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn lca(&self, i: usize, j: usize) -> usize {
        self.lca[i * self.n + j]
    }

    /// The configuration pairing `⟨g, t⟩` by direct enumeration of
    /// label-compatible bijections, abandoning a partial bijection as soon as
    /// two edges land on the same internal node.
    pub fn pair(&self, g: &Graph) -> i64 {
        let n = g.len();
        if n != self.leaves.len() {
            return 0;
        }
        if n == 1 {
            return i64::from(g.label(0) == self.leaves[0]);
        }
        let mut glabels = g.labels().to_vec();
        let mut tlabels = self.leaves.clone();
        glabels.sort_unstable();
        tlabels.sort_unstable();
        if glabels != tlabels {
            return 0;
        }
        assert!(n <= 64, "direct pairing supports at most 64 vertices");
        // Visit vertices breadth-first so each new vertex closes one edge.
        let order = g.bfs_order();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut back: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for &(u, v) in g.edges() {
            if pos[u] < pos[v] {
                back[pos[v]].push((u, false));
            } else {
                back[pos[u]].push((v, true));
            }
        }
        let mut search = Search {
            tree: self,
            graph: g,
            order: &order,
            back: &back,
            assigned: vec![usize::MAX; n],
            used_leaves: 0,
            used_nodes: 0,
            total: 0,
        };
        search.run(0, 1);
        search.total
    }
}

struct Search<'a> {
    tree: &'a PreparedTree,
    graph: &'a Graph,
    order: &'a [usize],
    // For the vertex at each position: earlier neighbours, and whether the
    // new vertex is the source of the joining edge.
    back: &'a [Vec<(usize, bool)>],
    assigned: Vec<usize>,
    used_leaves: u64,
    used_nodes: u64,
    total: i64,
}

impl Search<'_> {
    fn run(&mut self, k: usize, sign: i64) {
        if k == self.order.len() {
            self.total += sign;
            return;
        }
        let v = self.order[k];
        let label = self.graph.label(v);
        for leaf in 0..self.tree.leaves.len() {
            if self.used_leaves >> leaf & 1 == 1 || self.tree.leaves[leaf] != label {
                continue;
            }
            let mut s = sign;
            let mut nodes = 0u64;
            let mut ok = true;
            for &(w, v_is_source) in &self.back[k] {
                let other = self.assigned[w];
                let node = self.tree.lca(leaf, other);
                let bit = 1u64 << node;
                if (self.used_nodes | nodes) & bit != 0 {
                    ok = false;
                    break;
                }
                nodes |= bit;
                let (src, dst) = if v_is_source { (leaf, other) } else { (other, leaf) };
                if src > dst {
                    s = -s;
                }
            }
            if !ok {
                continue;
            }
            self.assigned[v] = leaf;
            self.used_leaves |= 1 << leaf;
            self.used_nodes |= nodes;
            self.run(k + 1, s);
            self.used_nodes &= !nodes;
            self.used_leaves &= !(1 << leaf);
            self.assigned[v] = usize::MAX;
        }
    }
}

/// For each edge, in edge order, the internal node it maps to and its sign.
/// Internal nodes are numbered in preorder (root = 0).
pub fn beta_map(g: &Graph, t: &Tree, a: &LeafAssignment) -> Result<Vec<(usize, i8)>> {
    if g.len() != t.leaf_count() || a.len() != g.len() {
        return Err(Error::SizeMismatch {
            vertices: g.len(),
            leaves: t.leaf_count(),
        });
    }
    let p = PreparedTree::new(t);
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| {
            let (i, j) = (a.leaf(u), a.leaf(v));
            (p.lca(i, j), if i < j { 1 } else { -1 })
        })
        .collect())
}

/// `⟨G, T⟩_σ`: the product of edge signs when `β_σ` hits every internal node,
/// otherwise zero. Labels are not consulted.
pub fn pair_sigma(g: &Graph, t: &Tree, a: &LeafAssignment) -> Result<i64> {
    let beta = beta_map(g, t, a)?;
    let mut hit = vec![false; t.internal_count()];
    let mut sign = 1;
    for (node, s) in beta {
        if std::mem::replace(&mut hit[node], true) {
            return Ok(0);
        }
        sign *= i64::from(s);
    }
    Ok(sign)
}

/// The configuration pairing `⟨γ, τ⟩`.
pub fn pair(g: &Graph, t: &Tree) -> i64 {
    PreparedTree::new(t).pair(g)
}

/// One pairing computed by every applicable method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MethodValues {
    pub direct: i64,
    pub recursive: i64,
    /// Only defined when the graph is a long graph.
    pub uea: Option<i64>,
}

impl MethodValues {
    pub fn agree(&self) -> bool {
        self.direct == self.recursive && self.uea.is_none_or(|u| u == self.direct)
    }
}

/// `⟨γ, τ⟩` by the direct sum, the cobracket recursion and, for long graphs,
/// coefficient extraction.
pub fn pair_all_methods(g: &Graph, t: &Tree) -> MethodValues {
    MethodValues {
        direct: pair(g, t),
        recursive: pair_recursive(g, t),
        uea: g.is_long().then(|| bar_coefficient(g.labels(), t)),
    }
}

/// How bar-word terms are paired inside [`pair_elements`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BarRoute {
    /// Coefficient extraction in the free associative algebra.
    #[default]
    Uea,
    /// Convert to a long graph and pair directly.
    LongGraph,
}

/// The bilinear extension of the pairing.
pub fn pair_elements(c: &CoElement, e: &LieElement, route: BarRoute) -> BigInt {
    let mut total = BigInt::zero();
    for (t, b) in e.terms() {
        let prepared = PreparedTree::new(t);
        for (k, a) in c.terms() {
            let v = match (k, route) {
                (CoKey::Graph(g), _) => prepared.pair(g),
                (CoKey::Bar(w), BarRoute::Uea) => bar_coefficient(w, t),
                (CoKey::Bar(w), BarRoute::LongGraph) => prepared.pair(&as_long_graph(w)),
            };
            if v != 0 {
                total += a * b * v;
            }
        }
    }
    total
}
