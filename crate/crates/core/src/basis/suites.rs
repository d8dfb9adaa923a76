//! Randomized and exhaustive verification suites shared by the command-line
//! `verify` command and the acceptance tests.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::verify::{verify_duality, verify_triangularity, Bound, Tally, TriangularColumns};
use crate::coalg::{as_long_graph, shuffle, CoKey, Graph};
use crate::lie::Tree;
use crate::pairing::{pair_all_methods, PreparedTree};
use crate::words::{words_matching, Alphabet, Letter, MultiDegree, Word, WordFilter, WordSet};

/// Largest `max_n` the suites accept. Beyond it exhaustive enumeration
/// stops being desk-scale.
pub const MAX_N_CAP: usize = 8;

/// At most this many failure descriptions are kept per report.
const KEEP_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Triangular,
    Kernel,
    Shuffle,
    Oracle,
    Fan,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Duality,
        Suite::Triangular,
        Suite::Kernel,
        Suite::Shuffle,
        Suite::Oracle,
        Suite::Fan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Duality => "duality",
            Self::Triangular => "triangular",
            Self::Kernel => "kernel",
            Self::Shuffle => "shuffle",
            Self::Oracle => "oracle",
            Self::Fan => "fan",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Recompute every pairing by all methods and report disagreements.
    pub cross_check: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            max_n: 6,
            seed: 0x5EED,
            cross_check: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub tally: Tally,
}

impl SuiteReport {
    fn new(suite: Suite, opts: &SuiteOptions) -> Self {
        Self {
            suite,
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            tally: Tally {
                cross_check: opts.cross_check,
                ..Tally::default()
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.tally.disagreements.is_empty()
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(describe());
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checks, {} pairings, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite.name(),
            self.checks,
            self.tally.pairs,
            self.failure_count,
        )?;
        if self.tally.cross_check {
            write!(f, ", {} method disagreements", self.tally.disagreements.len())?;
        }
        for s in self
            .failures
            .iter()
            .chain(self.tally.disagreements.iter().take(KEEP_FAILURES))
        {
            write!(f, "\n  {s}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    assert!(opts.max_n <= MAX_N_CAP, "max_n above {MAX_N_CAP}");
    match suite {
        Suite::Duality => duality(opts),
        Suite::Triangular => triangular(opts),
        Suite::Kernel => kernel(opts),
        Suite::Shuffle => shuffles(opts),
        Suite::Oracle => oracle(opts),
        Suite::Fan => fan(opts),
    }
}

/// Duality for 𝓑 over three letters up to `max_n` and two letters up to
/// `max_n + 2`, and for 𝓑̂ over three letters up to `max_n`.
pub fn duality(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Duality, opts);
    let runs = [
        (WordSet::Lyndon, 3, opts.max_n),
        (WordSet::Lyndon, 2, opts.max_n + 2),
        (WordSet::Bhat, 3, opts.max_n),
    ];
    for (set, letters, max_n) in runs {
        let d = verify_duality(set, &Bound::Total { letters, max_n }, opts.cross_check);
        r.checks += d.cells;
        r.failure_count += d.violations.len() as u64;
        for (w, u, v) in d.violations.iter().take(KEEP_FAILURES) {
            r.failures.push(format!("{}: <G{w}, L{u}> = {v}", set.name()));
        }
        r.tally.absorb(d.tally);
    }
    r
}

/// Triangularity of `(𝓑*, 𝓛𝓑)`, `(𝓑̂*, 𝓛𝓑̂)` and `(𝓑*, [𝓑])` over three
/// letters up to `max_n`.
pub fn triangular(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Triangular, opts);
    let bound = Bound::Total {
        letters: 3,
        max_n: opts.max_n,
    };
    let runs = [
        (WordSet::Lyndon, TriangularColumns::Config, "config-B"),
        (WordSet::Bhat, TriangularColumns::Config, "config-Bhat"),
        (WordSet::Lyndon, TriangularColumns::Classical, "classical-B"),
    ];
    for (set, cols, name) in runs {
        let t = verify_triangularity(set, cols, &bound, opts.cross_check);
        r.checks += t.cells;
        r.failure_count += (t.above_diagonal.len() + t.bad_diagonal.len()) as u64;
        for (w, u, v) in t.above_diagonal.iter().take(KEEP_FAILURES) {
            r.failures.push(format!("{name}: <{w}*, {u}> = {v} above the diagonal"));
        }
        for (w, v) in t.bad_diagonal.iter().take(KEEP_FAILURES) {
            r.failures.push(format!("{name}: diagonal at {w} is {v}"));
        }
        r.tally.absorb(t.tally);
    }
    r
}

/// A local rewrite of a tree at one internal node: the node with its
/// children swapped, and when the left child is internal the two other
/// terms of the Jacobi sum at that node.
struct Move {
    swapped: Tree,
    jacobi: Option<[Tree; 2]>,
}

fn moves(t: &Tree) -> Vec<Move> {
    let Tree::Node(l, r) = t else {
        return Vec::new();
    };
    let (l, r) = (l.as_ref(), r.as_ref());
    let jacobi = match l {
        Tree::Node(a, b) => Some([
            Tree::node(Tree::node(b.as_ref().clone(), r.clone()), a.as_ref().clone()),
            Tree::node(Tree::node(r.clone(), a.as_ref().clone()), b.as_ref().clone()),
        ]),
        Tree::Leaf(_) => None,
    };
    let mut out = vec![Move {
        swapped: Tree::node(r.clone(), l.clone()),
        jacobi,
    }];
    let wrap = |m: Move, f: &dyn Fn(Tree) -> Tree| Move {
        swapped: f(m.swapped),
        jacobi: m.jacobi.map(|[a, b]| [f(a), f(b)]),
    };
    for m in moves(l) {
        out.push(wrap(m, &|x| Tree::node(x, r.clone())));
    }
    for m in moves(r) {
        out.push(wrap(m, &|x| Tree::node(l.clone(), x)));
    }
    out
}

fn edge_key(g: &Graph) -> Vec<(usize, usize)> {
    let mut e = g.edges().to_vec();
    e.sort_unstable();
    e
}

/// Index pairs `(e, f)` of edges `a → b`, `b → c`.
fn consecutive_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &(_, b)) in g.edges().iter().enumerate() {
        for (j, &(b2, _)) in g.edges().iter().enumerate() {
            if b == b2 && i != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn replace_edge(g: &Graph, i: usize, e: (usize, usize)) -> Graph {
    let mut edges = g.edges().to_vec();
    edges[i] = e;
    Graph::new(g.labels().to_vec(), edges, g.pivot()).expect("still a tree")
}

fn arnold_partners(g: &Graph, i: usize, j: usize) -> [Graph; 2] {
    let (a, _) = g.edges()[i];
    let (_, c) = g.edges()[j];
    [replace_edge(g, i, (c, a)), replace_edge(g, j, (c, a))]
}

fn reversed(g: &Graph, i: usize) -> Graph {
    let (u, v) = g.edges()[i];
    replace_edge(g, i, (v, u))
}

/// Pairing kernel: antisymmetry and Jacobi sums, arrow reversals and Arnold
/// sums. Exhaustive over distinctly labeled graphs and trees with up to
/// `min(5, max_n)` vertices, then randomized up to `max_n + 1` vertices.
pub fn kernel(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Kernel, opts);
    for n in 1..=opts.max_n.min(5) {
        kernel_exhaustive(n, &mut r);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for n in 2..=opts.max_n + 1 {
        for _ in 0..100 {
            kernel_random(&mut rng, n, &mut r);
        }
    }
    r
}

fn kernel_exhaustive(n: usize, r: &mut SuiteReport) {
    let labels: Vec<Letter> = (0..n as u16).map(Letter).collect();
    let graphs = Graph::all_with_labels(&labels);
    let trees = Tree::all_with_multidegree(&MultiDegree::new(vec![1; n]).expect("n ≥ 1"));
    let graph_index: HashMap<Vec<(usize, usize)>, usize> =
        graphs.iter().enumerate().map(|(i, g)| (edge_key(g), i)).collect();
    let tree_index: HashMap<&Tree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let table: Vec<Vec<i64>> = trees
        .iter()
        .map(|t| {
            let p = PreparedTree::new(t);
            graphs.iter().map(|g| r.tally.graph(g, &p, t)).collect()
        })
        .collect();
    let gi = |g: &Graph| graph_index[&edge_key(g)];

    for (ti, t) in trees.iter().enumerate() {
        for m in moves(t) {
            let si = tree_index[&m.swapped];
            let ok = (0..graphs.len()).all(|g| table[ti][g] + table[si][g] == 0);
            r.expect(ok, || format!("antisymmetry fails at {t:?}"));
            if let Some([a, b]) = &m.jacobi {
                let (ai, bi) = (tree_index[a], tree_index[b]);
                let ok = (0..graphs.len()).all(|g| table[ti][g] + table[ai][g] + table[bi][g] == 0);
                r.expect(ok, || format!("Jacobi sum fails at {t:?}"));
            }
        }
    }
    for (g_i, g) in graphs.iter().enumerate() {
        for e in 0..g.edges().len() {
            let h = gi(&reversed(g, e));
            let ok = table.iter().all(|row| row[g_i] + row[h] == 0);
            r.expect(ok, || format!("arrow reversal fails at {g:?}, edge {e}"));
        }
        for (i, j) in consecutive_edges(g) {
            let [p, q] = arnold_partners(g, i, j);
            let (p, q) = (gi(&p), gi(&q));
            let ok = table.iter().all(|row| row[g_i] + row[p] + row[q] == 0);
            r.expect(ok, || format!("Arnold sum fails at {g:?}, edges {i}, {j}"));
        }
    }
}

fn random_labels<R: Rng>(rng: &mut R, n: usize, letters: u16) -> Vec<Letter> {
    (0..n).map(|_| Letter(rng.gen_range(0..letters))).collect()
}

fn kernel_random<R: Rng>(rng: &mut R, n: usize, r: &mut SuiteReport) {
    let labels = random_labels(rng, n, 3);
    let g = Graph::random(rng, &labels);
    let t = Tree::random(rng, &labels);
    let mut pair = |g: &Graph, t: &Tree| r.tally.graph(g, &PreparedTree::new(t), t);
    let base = pair(&g, &t);
    let mut results = Vec::new();
    if let Some(m) = moves(&t).choose(rng) {
        results.push((base + pair(&g, &m.swapped), "antisymmetry"));
        if let Some([a, b]) = &m.jacobi {
            results.push((base + pair(&g, a) + pair(&g, b), "Jacobi sum"));
        }
    }
    if n > 1 {
        let e = rng.gen_range(0..n - 1);
        results.push((base + pair(&reversed(&g, e), &t), "arrow reversal"));
    }
    if let Some(&(i, j)) = consecutive_edges(&g).choose(rng) {
        let [p, q] = arnold_partners(&g, i, j);
        results.push((base + pair(&p, &t) + pair(&q, &t), "Arnold sum"));
    }
    for (v, what) in results {
        r.expect(v == 0, || format!("{what} gives {v} for {g:?} against {t:?}"));
    }
}

/// Every shuffle `u ⧢ v` with `|u| + |v| ≤ max_n` over three letters pairs
/// to zero with every tree of its multidegree.
pub fn shuffles(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Shuffle, opts);
    let alphabet = Alphabet::numeric(3);
    for n in 2..=opts.max_n {
        for md in MultiDegree::all(3, n) {
            let words = words_matching(&alphabet, &WordFilter::MultiDegree(md.clone()));
            let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let trees = Tree::all_with_multidegree(&md);
            let table: Vec<Vec<i64>> = words
                .iter()
                .map(|w| trees.iter().map(|t| r.tally.bar(w, t)).collect())
                .collect();
            for w in &words {
                for i in 1..n {
                    let u = Word::new(w[..i].to_vec()).expect("nonempty");
                    let v = Word::new(w[i..].to_vec()).expect("nonempty");
                    let s: Vec<(usize, i64)> = shuffle(&u, &v)
                        .terms()
                        .map(|(k, c)| match k {
                            CoKey::Bar(x) => (index[x], i64::try_from(c).expect("small")),
                            CoKey::Graph(_) => unreachable!("shuffles are bar words"),
                        })
                        .collect();
                    let ok = (0..trees.len()).all(|t| s.iter().map(|&(x, c)| c * table[x][t]).sum::<i64>() == 0);
                    r.expect(ok, || {
                        format!(
                            "{} sh {} is not in the kernel",
                            alphabet.format_word(&u),
                            alphabet.format_word(&v)
                        )
                    });
                }
            }
        }
    }
    r
}

/// 1000 random graph/tree pairs with up to `max_n + 1` vertices; a quarter
/// of the graphs are long graphs so coefficient extraction takes part.
pub fn oracle(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Oracle, opts);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=opts.max_n + 1);
        let labels = random_labels(&mut rng, n, 3);
        let g = if rng.gen_ratio(1, 4) {
            as_long_graph(&Word::new(labels.clone()).expect("n ≥ 1"))
        } else {
            Graph::random(&mut rng, &labels)
        };
        let t = Tree::random(&mut rng, &labels);
        r.tally.pairs += 1;
        let m = pair_all_methods(&g, &t);
        r.expect(m.agree(), || format!("{g:?} vs {t:?}: {m:?}"));
    }
    r
}

/// The fan-to-path identity for `k ≤ 3`, with small contexts attached at
/// the center: a center `z` with arrows to `y_1, …, y_k` pairs like
/// `(−1)^k Σ_σ y_σ(1) → ⋯ → y_σ(k) → z`, and with every `y_i = x` like
/// `(−1)^k k!` times the single path. Checked against every tree of the
/// multidegree.
pub fn fan(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Fan, opts);
    for k in 1..=3usize {
        let z = k;
        let (c1, c2) = (k + 1, k + 2);
        let contexts: [&[(usize, usize)]; 5] = [&[], &[(z, c1)], &[(c1, z)], &[(z, c1), (c1, c2)], &[(c1, z), (z, c2)]];
        for ctx in contexts {
            let n = k + 1 + ctx.len();
            let star: Vec<(usize, usize)> = (0..k).map(|i| (z, i)).chain(ctx.iter().copied()).collect();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let paths: Vec<Vec<(usize, usize)>> = permutations(k)
                .into_iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> = p.windows(2).map(|w| (w[0], w[1])).collect();
                    e.push((p[k - 1], z));
                    e.extend_from_slice(ctx);
                    e
                })
                .collect();

            let distinct: Vec<Letter> = (0..n as u16).map(Letter).collect();
            let mut repeated = vec![Letter(0); k];
            repeated.extend((1..=(n - k) as u16).map(Letter));

            for (labels, repeated_case) in [(distinct, false), (repeated, true)] {
                let mk = |e: &Vec<(usize, usize)>| Graph::new(labels.clone(), e.clone(), z).expect("trees");
                let lhs = mk(&star);
                let rhs: Vec<Graph> = if repeated_case {
                    vec![mk(&paths[0])]
                } else {
                    paths.iter().map(mk).collect()
                };
                let factor: i64 = if repeated_case { (1..=k as i64).product() } else { 1 };
                let md = lhs.multidegree(n);
                for t in Tree::all_with_multidegree(&md) {
                    let p = PreparedTree::new(&t);
                    let left = r.tally.graph(&lhs, &p, &t);
                    let right: i64 = rhs.iter().map(|g| r.tally.graph(g, &p, &t)).sum();
                    r.expect(left == sign * factor * right, || {
                        format!(
                            "k = {k}, context {ctx:?}, repeated {repeated_case}: {left} vs {} at {t:?}",
                            sign * factor * right
                        )
                    });
                }
            }
        }
    }
    r
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let opts = SuiteOptions {
            max_n: 4,
            seed: 3,
            cross_check: true,
        };
        for s in Suite::ALL {
            let r = run(s, &opts);
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0, "{r}");
        }
    }

    #[test]
    fn moves_cover_every_node() {
        let a = Alphabet::numeric(4);
        let t = Tree::parse(&a, "[[1,2],[3,4]]").unwrap();
        let m = moves(&t);
        assert_eq!(m.len(), 3);
        assert_eq!(m.iter().filter(|m| m.jacobi.is_some()).count(), 1);
        assert_eq!(m[1].swapped, Tree::parse(&a, "[[2,1],[3,4]]").unwrap());
        assert_eq!(permutations(3).len(), 6);
        assert_eq!("fan".parse::<Suite>(), Ok(Suite::Fan));
    }
}
