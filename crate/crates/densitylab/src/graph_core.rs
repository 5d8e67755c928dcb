//! Core graph representations shared by every other module.
//!
//! Vertices are 1-based everywhere, matching the usual `[n] = {1, ..., n}`
//! convention; the serialization formats use 1-based ids as well. Adjacency
//! is stored as fixed-width bit rows so the counting kernels reduce to
//! popcount loops. All types are immutable after construction and all
//! operations are pure, so concurrent readers need no locking.

use num::rational::BigRational;
use num::BigInt;

use crate::counting::binomial;
use crate::{Error, Result};

/// Edge colors used by the three-colored constructions.
pub mod colors {
    pub const BLUE: usize = 1;
    pub const GREEN: usize = 2;
    pub const RED: usize = 3;
}

/// Simple undirected graph on vertices `1..=n` with bit-row adjacency.
///
/// Invariants: the adjacency matrix is symmetric with a zero diagonal, and
/// the cached edge count equals `popcount / 2`. Both are enforced by the
/// constructors; no mutation is exposed.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LabeledGraph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

impl LabeledGraph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        let words = n.div_ceil(64);
        LabeledGraph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = LabeledGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set0(u, v);
            }
        }
        g.m = n * (n - 1) / 2;
        g
    }

    /// Graph from an explicit edge list (1-based, `u != v`, duplicates rejected).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = LabeledGraph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "loops are not allowed".into(),
                });
            }
            if u < 1 || u > n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge".into(),
                });
            }
            g.set0(u - 1, v - 1);
            g.m += 1;
        }
        Ok(g)
    }

    /// Builder used by the construction generators; 0-based, unchecked.
    pub(crate) fn set0(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Recount edges after raw `set0` construction.
    pub(crate) fn refresh_edge_count(&mut self) {
        let total: u64 = self.bits.iter().map(|w| w.count_ones() as u64).sum();
        self.m = (total / 2) as usize;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// True iff `{u, v}` is an edge. Panics on out-of-range vertices.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n, "vertex out of range");
        if u == v {
            return false;
        }
        self.has_edge0(u - 1, v - 1)
    }

    #[inline]
    pub(crate) fn has_edge0(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row0(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.deg0(v - 1))
    }

    #[inline]
    pub(crate) fn deg0(&self, u: usize) -> usize {
        self.row0(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.deg0(u)).collect()
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n)
                .filter(move |&v| self.has_edge0(u, v))
                .map(move |v| (u + 1, v + 1))
        })
    }

    /// Edge density `m / C(n, 2)` as an exact reduced rational.
    pub fn density(&self) -> Result<BigRational> {
        if self.n < 2 {
            return Err(Error::HostTooSmall { n: self.n, need: 2 });
        }
        Ok(BigRational::new(
            BigInt::from(self.m),
            BigInt::from(binomial(self.n as u64, 2)),
        ))
    }

    /// Number of neighbors of `u` (0-based) among `v > u` (0-based).
    pub(crate) fn right_deg0(&self, u: usize) -> usize {
        let row = self.row0(u);
        let mut count = 0usize;
        let first_word = (u + 1) / 64;
        for (wi, &w) in row.iter().enumerate().skip(first_word) {
            let mut w = w;
            if wi == first_word {
                let shift = (u + 1) % 64;
                if shift == 64 {
                    continue;
                }
                w &= !0u64 << shift;
            }
            count += w.count_ones() as usize;
        }
        count
    }
}

/// Graph whose vertex labels carry the total order (`1 < 2 < ... < n`).
///
/// Any [`LabeledGraph`] can be viewed as ordered; the wrapper adds the
/// order-sensitive operations. Derefs to the underlying graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedGraph {
    g: LabeledGraph,
}

impl From<LabeledGraph> for OrderedGraph {
    fn from(g: LabeledGraph) -> Self {
        OrderedGraph { g }
    }
}

impl std::ops::Deref for OrderedGraph {
    type Target = LabeledGraph;
    fn deref(&self) -> &LabeledGraph {
        &self.g
    }
}

impl OrderedGraph {
    pub fn as_labeled(&self) -> &LabeledGraph {
        &self.g
    }

    /// Right-degree `d+(i) = |{j > i : ij in E}|`.
    pub fn right_degree(&self, i: usize) -> Result<usize> {
        if i < 1 || i > self.g.n {
            return Err(Error::VertexOutOfRange { v: i, n: self.g.n });
        }
        Ok(self.g.right_deg0(i - 1))
    }

    /// All right-degrees, indexed by vertex order.
    pub fn right_degrees(&self) -> Vec<usize> {
        (0..self.g.n).map(|u| self.g.right_deg0(u)).collect()
    }

    /// Left-degrees `d-(i) = d(i) - d+(i)`, indexed by vertex order.
    pub fn left_degrees(&self) -> Vec<usize> {
        (0..self.g.n)
            .map(|u| self.g.deg0(u) - self.g.right_deg0(u))
            .collect()
    }

    /// The same graph with the total order reversed: vertex `i` becomes `n+1-i`.
    pub fn reverse_order(&self) -> OrderedGraph {
        let n = self.g.n;
        let mut r = LabeledGraph::empty(n);
        for (u, v) in self.g.edges() {
            r.set0(n - u, n - v);
        }
        r.m = self.g.m;
        OrderedGraph { g: r }
    }
}

/// Complete graph with a color in `1..=q` on every pair.
///
/// The full symmetric matrix is stored for O(1) color lookup; per-color
/// adjacency layers are derived views (see [`ColoredCompleteGraph::color_layer`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredCompleteGraph {
    n: usize,
    q: usize,
    color: Vec<u32>,
}

impl ColoredCompleteGraph {
    /// Build from a coloring function on 1-based pairs `u < v`.
    pub fn from_fn(n: usize, q: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        assert!(n >= 1, "colored graph needs at least one vertex");
        assert!(q >= 1, "need at least one color");
        let mut color = vec![0u32; n * n];
        for u in 1..=n {
            for v in (u + 1)..=n {
                let c = f(u, v);
                if c < 1 || c > q {
                    return Err(Error::ColorOutOfRange { c, q });
                }
                color[(u - 1) * n + (v - 1)] = c as u32;
                color[(v - 1) * n + (u - 1)] = c as u32;
            }
        }
        Ok(ColoredCompleteGraph { n, q, color })
    }

    /// All pairs in a single color.
    pub fn monochromatic(n: usize, q: usize, c: usize) -> Result<Self> {
        ColoredCompleteGraph::from_fn(n, q, |_, _| c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Color of the pair `{u, v}`.
    pub fn color(&self, u: usize, v: usize) -> Result<usize> {
        if u < 1 || u > self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "diagonal is unused".into(),
            });
        }
        Ok(self.color[(u - 1) * self.n + (v - 1)] as usize)
    }

    #[inline]
    pub(crate) fn color0(&self, u: usize, v: usize) -> usize {
        self.color[u * self.n + v] as usize
    }

    /// Number of pairs colored `c`.
    pub fn color_count(&self, c: usize) -> Result<usize> {
        if c < 1 || c > self.q {
            return Err(Error::ColorOutOfRange { c, q: self.q });
        }
        let mut e = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.color0(u, v) == c {
                    e += 1;
                }
            }
        }
        Ok(e)
    }

    /// Exact color density `e_c(G) / C(n, 2)`.
    pub fn color_class_density(&self, c: usize) -> Result<BigRational> {
        if self.n < 2 {
            return Err(Error::HostTooSmall { n: self.n, need: 2 });
        }
        let e = self.color_count(c)?;
        Ok(BigRational::new(
            BigInt::from(e),
            BigInt::from(binomial(self.n as u64, 2)),
        ))
    }

    /// Derived view: the graph whose edges are exactly the pairs colored `c`.
    pub fn color_layer(&self, c: usize) -> Result<LabeledGraph> {
        if c < 1 || c > self.q {
            return Err(Error::ColorOutOfRange { c, q: self.q });
        }
        let mut g = LabeledGraph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.color0(u, v) == c {
                    g.set0(u, v);
                }
            }
        }
        g.refresh_edge_count();
        Ok(g)
    }
}

// ---------------------------------------------------------------------------
// Text formats shared with the CLI.
//
// Graph file:    line "n m", then m lines "u v" with u < v.
// Colored file:  line "n q", then C(n,2) lines "u v c", every pair once.
// ---------------------------------------------------------------------------

fn parse_tokens(line: &str, lineno: usize, want: usize) -> Result<Vec<usize>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != want {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected {} fields, found {}", want, toks.len()),
        });
    }
    toks.iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid integer {t:?}"),
            })
        })
        .collect()
}

/// Lines of `text` that carry data (blank lines skipped), with line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = data_lines(text);
    let (ln, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    let h = parse_tokens(header, ln, 2)?;
    let (n, m) = (h[0], h[1]);
    if n < 1 {
        return Err(Error::Parse {
            line: ln,
            msg: "vertex count must be positive".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {m} edge lines"),
        })?;
        let e = parse_tokens(line, ln, 2)?;
        if e[0] >= e[1] {
            return Err(Error::Parse {
                line: ln,
                msg: format!("edge must satisfy u < v, found {} {}", e[0], e[1]),
            });
        }
        edges.push((e[0], e[1]));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing data after edge list".into(),
        });
    }
    LabeledGraph::from_edges(n, &edges)
}

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_colored(text: &str) -> Result<ColoredCompleteGraph> {
    let mut lines = data_lines(text);
    let (ln, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    let h = parse_tokens(header, ln, 2)?;
    let (n, q) = (h[0], h[1]);
    if n < 1 || q < 1 {
        return Err(Error::Parse {
            line: ln,
            msg: "need n >= 1 and q >= 1".into(),
        });
    }
    let pairs = n * (n - 1) / 2;
    let mut seen = vec![0usize; n * n];
    let mut entries = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let (ln, line) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {pairs} pair lines"),
        })?;
        let e = parse_tokens(line, ln, 3)?;
        let (u, v, c) = (e[0], e[1], e[2]);
        if u >= v || u < 1 || v > n {
            return Err(Error::Parse {
                line: ln,
                msg: format!("pair must satisfy 1 <= u < v <= n, found {u} {v}"),
            });
        }
        if seen[(u - 1) * n + (v - 1)] != 0 {
            return Err(Error::Parse {
                line: ln,
                msg: format!("pair {u} {v} listed twice"),
            });
        }
        seen[(u - 1) * n + (v - 1)] = 1;
        entries.push((u, v, c));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing data after pair list".into(),
        });
    }
    let mut table = vec![0usize; n * n];
    for &(u, v, c) in &entries {
        table[(u - 1) * n + (v - 1)] = c;
    }
    ColoredCompleteGraph::from_fn(n, q, |u, v| table[(u - 1) * n + (v - 1)])
}

pub fn write_colored(g: &ColoredCompleteGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.q());
    for u in 1..=g.n() {
        for v in (u + 1)..=g.n() {
            out.push_str(&format!("{} {} {}\n", u, v, g.color(u, v).unwrap()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_colored_case1, build_sl, build_sr};
    use num::ToPrimitive;
    use proptest::prelude::*;

    #[test]
    fn degree_examples() {
        let k4 = LabeledGraph::complete(4);
        assert_eq!(k4.degree(1).unwrap(), 3);

        let empty = LabeledGraph::empty(5);
        assert_eq!(empty.degree(3).unwrap(), 0);

        let path = LabeledGraph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.degree(2).unwrap(), 2);

        assert!(matches!(path.degree(4), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(path.degree(0), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn right_degree_examples() {
        // S_L(4) = S_L(5, 4): the star centered at the minimum vertex.
        let sl = build_sl(5, 4).unwrap();
        assert_eq!(sl.right_degree(1).unwrap(), 4);
        for j in 2..=5 {
            assert_eq!(sl.right_degree(j).unwrap(), 0);
        }

        let path: OrderedGraph = LabeledGraph::from_edges(3, &[(1, 2), (2, 3)])
            .unwrap()
            .into();
        assert_eq!(path.right_degree(2).unwrap(), 1);

        let kn: OrderedGraph = LabeledGraph::complete(7).into();
        for i in 1..=7 {
            assert_eq!(kn.right_degree(i).unwrap(), 7 - i);
        }
    }

    #[test]
    fn reverse_examples() {
        for (n, m) in [(5usize, 4usize), (6, 9), (7, 13)] {
            let sl = build_sl(n, m).unwrap();
            let sr = build_sr(n, m).unwrap();
            assert_eq!(sl.reverse_order(), sr);
        }

        let edgeless: OrderedGraph = LabeledGraph::empty(4).into();
        assert_eq!(edgeless.reverse_order(), edgeless);
    }

    #[test]
    fn color_density_examples() {
        let mono = ColoredCompleteGraph::monochromatic(5, 3, 1).unwrap();
        assert_eq!(mono.color_class_density(1).unwrap(), BigRational::from(BigInt::from(1)));
        assert_eq!(mono.color_class_density(2).unwrap(), BigRational::from(BigInt::from(0)));
        assert!(matches!(mono.color_class_density(4), Err(Error::ColorOutOfRange { .. })));

        // Two-block host at n = 800, x_b = x_g = 1/4: |A| = floor(800 * 0.5) = 400,
        // so the blue density is exactly C(400,2) / C(800,2).
        let host = build_colored_case1(800, 0.25, 0.25).unwrap();
        let blue = host.color_class_density(colors::BLUE).unwrap();
        let expected = BigRational::new(
            BigInt::from(binomial(400, 2)),
            BigInt::from(binomial(800, 2)),
        );
        assert_eq!(blue, expected);
        assert!((blue.to_f64().unwrap() - 0.25).abs() < 0.01);
    }

    #[test]
    fn degree_sums() {
        let g = LabeledGraph::from_edges(6, &[(1, 2), (1, 4), (2, 5), (3, 6), (4, 6)]).unwrap();
        let m = g.edge_count();
        let total: usize = g.degrees().iter().sum();
        assert_eq!(total, 2 * m);

        let og: OrderedGraph = g.into();
        let right: usize = og.right_degrees().iter().sum();
        assert_eq!(right, m);
    }

    #[test]
    fn graph_file_round_trip() {
        let g = build_sl(5, 4).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "5 4\n1 2\n1 3\n1 4\n1 5\n");
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, *g.as_labeled());

        assert!(parse_graph("3 1\n2 1\n").is_err()); // u >= v
        assert!(parse_graph("3 2\n1 2\n").is_err()); // missing edge line
        assert!(parse_graph("3 1\n1 2\n2 3\n").is_err()); // trailing data
        assert!(parse_graph("3 2\n1 2\n1 2\n").is_err()); // duplicate
    }

    #[test]
    fn colored_file_round_trip() {
        let g = build_colored_case1(5, 0.25, 0.25).unwrap();
        let text = write_colored(&g);
        let back = parse_colored(&text).unwrap();
        assert_eq!(back, g);

        assert!(parse_colored("2 1\n1 2 2\n").is_err()); // color out of range
        assert!(parse_colored("3 2\n1 2 1\n1 3 1\n").is_err()); // missing pair
    }

    proptest! {
        #[test]
        fn construction_invariants(n in 1usize..12, seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in (u + 1)..=n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = LabeledGraph::from_edges(n, &edges).unwrap();
            // symmetry + zero diagonal + edge count
            for u in 1..=n {
                prop_assert!(!g.has_edge(u, u));
                for v in 1..=n {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
            prop_assert_eq!(g.edge_count(), edges.len());

            // reversal preserves edge count and the degree multiset
            let og: OrderedGraph = g.into();
            let rev = og.reverse_order();
            prop_assert_eq!(rev.edge_count(), og.edge_count());
            let mut d1 = og.degrees();
            let mut d2 = rev.degrees();
            d1.sort_unstable();
            d2.sort_unstable();
            prop_assert_eq!(d1, d2);
            prop_assert_eq!(rev.reverse_order(), og);
        }
    }
}
