//! Exact counters and densities for stars, ordered patterns, colored copies,
//! and induced copies.
//!
//! Counts are unbounded integers and densities are exact rationals reduced to
//! lowest terms; asymptotic comparisons convert to floating point only at the
//! boundary. Ordered pattern containment is non-induced: a tuple hosts a
//! pattern as soon as every pattern edge is present, extra edges are allowed.
//! This matters because the two-edge path on `[3]` is contained in the
//! ordered triangle.

use num::rational::BigRational;
use num::{BigInt, BigUint, One, Zero};

use crate::graph_core::{ColoredCompleteGraph, LabeledGraph, OrderedGraph};
use crate::{Error, Result};

/// Largest pattern the induced-copy enumeration kernel accepts.
pub const INDUCED_PATTERN_LIMIT: usize = 8;

/// Binomial coefficient as an unbounded integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 1..=k {
        result = result * BigUint::from(n - k + i) / BigUint::from(i);
    }
    result
}

/// Binomial coefficient in `u128`, for counts known to stay small.
pub(crate) fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - k + i) as u128 / i as u128;
    }
    result
}

/// Falling factorial `(n)_k = n (n-1) ... (n-k+1)`.
fn falling_factorial(n: u64, k: u64) -> BigUint {
    let mut result = BigUint::one();
    for i in 0..k {
        result *= BigUint::from(n - i);
    }
    result
}

fn factorial(k: u64) -> BigUint {
    falling_factorial(k, k)
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

/// Ordered graph pattern on `[s]`: vertices `1..=s` with edges `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPattern {
    s: usize,
    edges: Vec<(usize, usize)>,
}

impl OrderedPattern {
    pub fn new(s: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if s < 1 {
            return Err(Error::HostTooSmall { n: s, need: 1 });
        }
        edges.sort_unstable();
        edges.dedup();
        for &(i, j) in &edges {
            if !(1 <= i && i < j && j <= s) {
                return Err(Error::InvalidEdge {
                    u: i,
                    v: j,
                    reason: format!("pattern edge must satisfy 1 <= i < j <= {s}"),
                });
            }
        }
        Ok(OrderedPattern { s, edges })
    }

    /// Star with `k` edges whose center is the minimum vertex.
    pub fn left_star(k: usize) -> Self {
        OrderedPattern {
            s: k + 1,
            edges: (2..=k + 1).map(|j| (1, j)).collect(),
        }
    }

    /// Star with `k` edges whose center is the maximum vertex.
    pub fn right_star(k: usize) -> Self {
        OrderedPattern {
            s: k + 1,
            edges: (1..=k).map(|i| (i, k + 1)).collect(),
        }
    }

    /// The two-edge monotone path on `[3]`: edges 12 and 23.
    pub fn monotone_path3() -> Self {
        OrderedPattern {
            s: 3,
            edges: vec![(1, 2), (2, 3)],
        }
    }

    pub fn single_vertex() -> Self {
        OrderedPattern { s: 1, edges: vec![] }
    }

    pub fn size(&self) -> usize {
        self.s
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A colored pattern is just a small colored complete graph.
pub type ColoredPattern = ColoredCompleteGraph;

// ---------------------------------------------------------------------------
// Star counts
// ---------------------------------------------------------------------------

/// Number of `k`-edge stars: `sum_v C(d(v), k)`.
pub fn count_stars(g: &LabeledGraph, k: usize) -> BigUint {
    assert!(k >= 1, "stars need at least one edge");
    let mut total = BigUint::zero();
    for d in g.degrees() {
        total += binomial(d as u64, k as u64);
    }
    total
}

/// Star density `N(S_k, G) * k! / (n)_{k+1}`, exact.
pub fn star_density(g: &LabeledGraph, k: usize) -> Result<BigRational> {
    let n = g.n();
    if n < k + 1 {
        return Err(Error::HostTooSmall { n, need: k + 1 });
    }
    let num = count_stars(g, k) * factorial(k as u64);
    let den = falling_factorial(n as u64, (k + 1) as u64);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

// ---------------------------------------------------------------------------
// Ordered pattern counts
// ---------------------------------------------------------------------------

/// Number of increasing `s`-tuples whose induced edges cover the pattern's
/// edges (non-induced containment).
pub fn count_ordered_pattern(g: &OrderedGraph, f: &OrderedPattern) -> BigUint {
    let n = g.n();
    let s = f.size();
    if s > n {
        return BigUint::zero();
    }
    // For each position, the earlier positions it must attach to.
    let mut back_edges: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
    for &(i, j) in f.edges() {
        back_edges[j].push(i);
    }
    let mut chosen = vec![0usize; s + 1]; // chosen[pos] = 1-based vertex
    let mut total: u128 = 0;

    fn descend(
        g: &OrderedGraph,
        back_edges: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        pos: usize,
        s: usize,
        n: usize,
        total: &mut u128,
    ) {
        if pos > s {
            *total += 1;
            return;
        }
        let lo = if pos == 1 { 1 } else { chosen[pos - 1] + 1 };
        // Need room for the remaining s - pos vertices.
        let hi = n - (s - pos);
        'candidates: for v in lo..=hi {
            for &i in &back_edges[pos] {
                if !g.has_edge(chosen[i], v) {
                    continue 'candidates;
                }
            }
            chosen[pos] = v;
            descend(g, back_edges, chosen, pos + 1, s, n, total);
        }
    }

    descend(g, &back_edges, &mut chosen, 1, s, n, &mut total);
    BigUint::from(total)
}

/// Left-star count via the right-degree identity `sum_i C(d+(i), k)`.
pub fn count_left_stars(g: &OrderedGraph, k: usize) -> BigUint {
    assert!(k >= 1, "stars need at least one edge");
    let mut total = BigUint::zero();
    for d in g.right_degrees() {
        total += binomial(d as u64, k as u64);
    }
    total
}

/// Count of the two-edge monotone path via `sum_j d-(j) * d+(j)`.
pub fn count_monotone_path3(g: &OrderedGraph) -> BigUint {
    let mut total: u128 = 0;
    let mut big = BigUint::zero();
    for u in 1..=g.n() {
        let d = g.degree(u).unwrap();
        let right = g.right_degree(u).unwrap();
        let left = d - right;
        let term = (left as u128) * (right as u128);
        match total.checked_add(term) {
            Some(t) => total = t,
            None => {
                big += BigUint::from(total);
                total = term;
            }
        }
    }
    big + BigUint::from(total)
}

/// Ordered pattern density `N_ord(F, G) / C(n, s)`, exact.
pub fn ordered_density(g: &OrderedGraph, f: &OrderedPattern) -> Result<BigRational> {
    let n = g.n();
    let s = f.size();
    if n < s {
        return Err(Error::HostTooSmall { n, need: s });
    }
    Ok(BigRational::new(
        BigInt::from(count_ordered_pattern(g, f)),
        BigInt::from(binomial(n as u64, s as u64)),
    ))
}

// ---------------------------------------------------------------------------
// Colored copies
// ---------------------------------------------------------------------------

/// Structure detected in a colored pattern: a clique in one color, a clique
/// in a second color, and all crossing pairs in a third.
struct TwoCliquePattern {
    s: usize,
    t: usize,
    inner_small: usize,
    inner_large: usize,
    crossing: usize,
}

fn detect_monochromatic(f: &ColoredPattern) -> Option<usize> {
    let s = f.n();
    if s < 2 {
        return None;
    }
    let c = f.color0(0, 1);
    for u in 0..s {
        for v in (u + 1)..s {
            if f.color0(u, v) != c {
                return None;
            }
        }
    }
    Some(c)
}

fn detect_two_clique(f: &ColoredPattern) -> Option<TwoCliquePattern> {
    let n = f.n();
    if n < 4 {
        return None;
    }
    for crossing in 1..=f.q() {
        // Part containing vertex 1 = vertices not joined to it by the
        // crossing color.
        let part1: Vec<usize> = (0..n)
            .filter(|&v| v == 0 || f.color0(0, v) != crossing)
            .collect();
        let part2: Vec<usize> = (0..n).filter(|&v| v != 0 && f.color0(0, v) == crossing).collect();
        if part1.len() < 2 || part2.len() < 2 {
            continue;
        }
        let c1 = f.color0(part1[0], part1[1]);
        let c2 = f.color0(part2[0], part2[1]);
        if c1 == c2 || c1 == crossing || c2 == crossing {
            continue;
        }
        let ok = |part: &[usize], c: usize| {
            part.iter().enumerate().all(|(i, &u)| {
                part[i + 1..].iter().all(|&v| f.color0(u, v) == c)
            })
        };
        if !ok(&part1, c1) || !ok(&part2, c2) {
            continue;
        }
        if !part1
            .iter()
            .all(|&u| part2.iter().all(|&v| f.color0(u, v) == crossing))
        {
            continue;
        }
        let (s, t, inner_small, inner_large) = if part1.len() <= part2.len() {
            (part1.len(), part2.len(), c1, c2)
        } else {
            (part2.len(), part1.len(), c2, c1)
        };
        return Some(TwoCliquePattern {
            s,
            t,
            inner_small,
            inner_large,
            crossing,
        });
    }
    None
}

/// Bitset over host vertices, 0-based.
type Mask = Vec<u64>;

fn full_mask(n: usize) -> Mask {
    let words = n.div_ceil(64);
    let mut m = vec![!0u64; words];
    let rem = n % 64;
    if rem != 0 {
        m[words - 1] = (1u64 << rem) - 1;
    }
    m
}

fn mask_and(a: &mut Mask, b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= y;
    }
}

fn mask_bits(m: &Mask) -> impl Iterator<Item = usize> + '_ {
    m.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// Number of `size`-cliques of `layer` with all vertices in `allowed`.
fn count_cliques_within(layer: &LabeledGraph, size: usize, allowed: &Mask) -> u128 {
    if size == 0 {
        return 1;
    }
    fn recurse(layer: &LabeledGraph, size: usize, candidates: &Mask, min_vertex: usize) -> u128 {
        if size == 1 {
            return mask_bits(candidates).filter(|&v| v >= min_vertex).count() as u128;
        }
        let mut total = 0u128;
        for v in mask_bits(candidates) {
            if v < min_vertex {
                continue;
            }
            let mut next = candidates.clone();
            mask_and(&mut next, layer.row0(v));
            total += recurse(layer, size - 1, &next, v + 1);
        }
        total
    }
    recurse(layer, size, allowed, 0)
}

/// Visit every `size`-clique of `layer` (as an increasing vertex list).
fn for_each_clique(layer: &LabeledGraph, size: usize, visit: &mut impl FnMut(&[usize])) {
    fn recurse(
        layer: &LabeledGraph,
        remaining: usize,
        candidates: &Mask,
        min_vertex: usize,
        stack: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if remaining == 0 {
            visit(stack);
            return;
        }
        for v in mask_bits(candidates) {
            if v < min_vertex {
                continue;
            }
            let mut next = candidates.clone();
            mask_and(&mut next, layer.row0(v));
            stack.push(v);
            recurse(layer, remaining - 1, &next, v + 1, stack, visit);
            stack.pop();
        }
    }
    let all = full_mask(layer.n());
    let mut stack = Vec::with_capacity(size);
    recurse(layer, size, &all, 0, &mut stack, visit);
}

/// Closed-form shortcut: host consists of two disjoint blocks A (inner color
/// `cb` inside), B (inner color `cg` inside) with color `cr` everywhere else.
/// Returns `(|A|, |B|)` when the host matches exactly.
fn detect_blocked_host(
    g: &ColoredCompleteGraph,
    cb: usize,
    cg: usize,
    cr: usize,
) -> Option<(usize, usize)> {
    let n = g.n();
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for u in 0..n {
        for v in (u + 1)..n {
            match g.color0(u, v) {
                c if c == cb => {
                    in_a[u] = true;
                    in_a[v] = true;
                }
                c if c == cg => {
                    in_b[u] = true;
                    in_b[v] = true;
                }
                _ => {}
            }
        }
    }
    if (0..n).any(|v| in_a[v] && in_b[v]) {
        return None;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let expect = if in_a[u] && in_a[v] {
                cb
            } else if in_b[u] && in_b[v] {
                cg
            } else {
                cr
            };
            if g.color0(u, v) != expect {
                return None;
            }
        }
    }
    Some((in_a.iter().filter(|&&x| x).count(), in_b.iter().filter(|&&x| x).count()))
}

/// Closed-form shortcut: block A is a `cb`-clique, color `cr` appears exactly
/// between A and a disjoint block B, and every other pair is `cg`.
fn detect_bridged_host(
    g: &ColoredCompleteGraph,
    cb: usize,
    cg: usize,
    cr: usize,
) -> Option<(usize, usize)> {
    let n = g.n();
    let mut in_a = vec![false; n];
    for u in 0..n {
        for v in (u + 1)..n {
            if g.color0(u, v) == cb {
                in_a[u] = true;
                in_a[v] = true;
            }
        }
    }
    let mut in_b = vec![false; n];
    for u in 0..n {
        if !in_a[u] {
            continue;
        }
        for v in 0..n {
            if v != u && !in_a[v] && g.color0(u, v) == cr {
                in_b[v] = true;
            }
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let expect = if in_a[u] && in_a[v] {
                cb
            } else if (in_a[u] && in_b[v]) || (in_a[v] && in_b[u]) {
                cr
            } else {
                cg
            };
            if g.color0(u, v) != expect {
                return None;
            }
        }
    }
    Some((in_a.iter().filter(|&&x| x).count(), in_b.iter().filter(|&&x| x).count()))
}

fn count_two_clique_copies(g: &ColoredCompleteGraph, p: &TwoCliquePattern) -> BigUint {
    let (cb, cg, cr) = (p.inner_small, p.inner_large, p.crossing);
    // A subset is a copy iff it splits into a cb-colored s-clique and a
    // cg-colored t-clique with all crossing pairs cr; for s, t >= 2 that
    // split is unique, so counting (S, T) pairs counts subsets. In a blocked
    // host every cb-clique lives in block A and every cg-clique in block B,
    // which collapses the count to a product of binomials.
    if let Some((a, b)) = detect_blocked_host(g, cb, cg, cr) {
        return binomial(a as u64, p.s as u64) * binomial(b as u64, p.t as u64);
    }
    if let Some((a, b)) = detect_bridged_host(g, cb, cg, cr) {
        return binomial(a as u64, p.s as u64) * binomial(b as u64, p.t as u64);
    }
    let blue = g.color_layer(cb).unwrap();
    let green = g.color_layer(cg).unwrap();
    let red = g.color_layer(cr).unwrap();
    let mut total = BigUint::zero();
    for_each_clique(&blue, p.s, &mut |clique| {
        let mut allowed = full_mask(g.n());
        for &v in clique {
            mask_and(&mut allowed, red.row0(v));
        }
        let found = count_cliques_within(&green, p.t, &allowed);
        if found != 0 {
            total += BigUint::from(found);
        }
    });
    total
}

/// Number of `s`-subsets of the host that are copies of the pattern: subsets
/// `X` admitting a bijection to `V(F)` preserving pair colors. Each subset is
/// counted once.
///
/// Monochromatic-clique and two-clique patterns dispatch to closed-form
/// part-detection kernels; everything else falls back to subset enumeration
/// with color-profile filtering.
pub fn count_colored_copies(g: &ColoredCompleteGraph, f: &ColoredPattern) -> BigUint {
    let n = g.n();
    let s = f.n();
    if s > n {
        return BigUint::zero();
    }
    if s == 1 {
        return BigUint::from(n);
    }
    if let Some(c) = detect_monochromatic(f) {
        if c > g.q() {
            return BigUint::zero();
        }
        let layer = g.color_layer(c).unwrap();
        let all = full_mask(n);
        return BigUint::from(count_cliques_within(&layer, s, &all));
    }
    if let Some(p) = detect_two_clique(f) {
        if p.inner_small > g.q() || p.inner_large > g.q() || p.crossing > g.q() {
            return BigUint::zero();
        }
        return count_two_clique_copies(g, &p);
    }
    count_colored_copies_enumerate(g, f)
}

/// Sorted per-vertex color profile within a vertex set.
fn color_profile(g: &ColoredCompleteGraph, set: &[usize], v: usize, q: usize) -> Vec<usize> {
    let mut counts = vec![0usize; q + 1];
    for &u in set {
        if u != v {
            let c = g.color0(u, v);
            if c <= q {
                counts[c] += 1;
            }
        }
    }
    counts
}

fn count_colored_copies_enumerate(g: &ColoredCompleteGraph, f: &ColoredPattern) -> BigUint {
    let n = g.n();
    let s = f.n();
    let q = f.q().max(g.q());
    let pattern_vertices: Vec<usize> = (0..s).collect();
    let mut pattern_profiles: Vec<Vec<usize>> = (0..s)
        .map(|v| color_profile(f, &pattern_vertices, v, q))
        .collect();
    pattern_profiles.sort();

    let mut total = BigUint::zero();
    let mut subset: Vec<usize> = (0..s).collect();
    loop {
        if subset_is_copy(g, f, &subset, &pattern_profiles, q) {
            total += BigUint::one();
        }
        // next s-combination of 0..n in lexicographic order
        let mut i = s;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            if subset[i] != i + n - s {
                break;
            }
            if i == 0 {
                return total;
            }
        }
        subset[i] += 1;
        for j in (i + 1)..s {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn subset_is_copy(
    g: &ColoredCompleteGraph,
    f: &ColoredPattern,
    subset: &[usize],
    pattern_profiles: &[Vec<usize>],
    q: usize,
) -> bool {
    let s = subset.len();
    let host_profiles: Vec<Vec<usize>> =
        subset.iter().map(|&v| color_profile(g, subset, v, q)).collect();
    let mut sorted = host_profiles.clone();
    sorted.sort();
    if sorted != pattern_profiles {
        return false;
    }
    // Backtracking bijection pattern vertex -> subset element.
    let pattern_profile_of: Vec<Vec<usize>> = {
        let all: Vec<usize> = (0..s).collect();
        (0..s).map(|v| color_profile(f, &all, v, q)).collect()
    };
    let mut assigned: Vec<Option<usize>> = vec![None; s]; // pattern pos -> subset index
    let mut used = vec![false; s];
    fn backtrack(
        g: &ColoredCompleteGraph,
        f: &ColoredPattern,
        subset: &[usize],
        pattern_profile_of: &[Vec<usize>],
        host_profiles: &[Vec<usize>],
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        pos: usize,
    ) -> bool {
        let s = subset.len();
        if pos == s {
            return true;
        }
        for cand in 0..s {
            if used[cand] || host_profiles[cand] != pattern_profile_of[pos] {
                continue;
            }
            let ok = (0..pos).all(|earlier| {
                let e = assigned[earlier].unwrap();
                f.color0(earlier, pos) == g.color0(subset[e], subset[cand])
            });
            if ok {
                assigned[pos] = Some(cand);
                used[cand] = true;
                if backtrack(g, f, subset, pattern_profile_of, host_profiles, assigned, used, pos + 1) {
                    return true;
                }
                used[cand] = false;
                assigned[pos] = None;
            }
        }
        false
    }
    backtrack(
        g,
        f,
        subset,
        &pattern_profile_of,
        &host_profiles,
        &mut assigned,
        &mut used,
        0,
    )
}

/// Colored pattern density `N_q(F, G) / C(n, s)`, exact.
pub fn colored_density(g: &ColoredCompleteGraph, f: &ColoredPattern) -> Result<BigRational> {
    let n = g.n();
    let s = f.n();
    if n < s {
        return Err(Error::HostTooSmall { n, need: s });
    }
    Ok(BigRational::new(
        BigInt::from(count_colored_copies(g, f)),
        BigInt::from(binomial(n as u64, s as u64)),
    ))
}

// ---------------------------------------------------------------------------
// Induced copies
// ---------------------------------------------------------------------------

/// Number of vertex subsets `S` with `G[S]` isomorphic to the pattern.
///
/// Plain enumeration kernel, meant for patterns on at most
/// [`INDUCED_PATTERN_LIMIT`] vertices.
pub fn count_induced(g: &LabeledGraph, f: &LabeledGraph) -> Result<BigUint> {
    let s = f.n();
    if s > INDUCED_PATTERN_LIMIT {
        return Err(Error::PatternTooLarge {
            s,
            limit: INDUCED_PATTERN_LIMIT,
        });
    }
    let n = g.n();
    if s > n {
        return Ok(BigUint::zero());
    }
    let mut pattern_degrees: Vec<usize> = f.degrees();
    pattern_degrees.sort_unstable();

    let mut total = BigUint::zero();
    let mut subset: Vec<usize> = (1..=s).collect(); // 1-based host vertices
    loop {
        if induced_matches(g, f, &subset, &pattern_degrees) {
            total += BigUint::one();
        }
        let mut i = s;
        loop {
            if i == 0 {
                return Ok(total);
            }
            i -= 1;
            if subset[i] != i + 1 + n - s {
                break;
            }
            if i == 0 {
                return Ok(total);
            }
        }
        subset[i] += 1;
        for j in (i + 1)..s {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn induced_matches(g: &LabeledGraph, f: &LabeledGraph, subset: &[usize], pattern_degrees: &[usize]) -> bool {
    let s = subset.len();
    let mut sub_deg = vec![0usize; s];
    for i in 0..s {
        for j in (i + 1)..s {
            if g.has_edge(subset[i], subset[j]) {
                sub_deg[i] += 1;
                sub_deg[j] += 1;
            }
        }
    }
    let mut sorted = sub_deg.clone();
    sorted.sort_unstable();
    if sorted != pattern_degrees {
        return false;
    }
    let pat_deg: Vec<usize> = f.degrees();
    let mut assigned: Vec<Option<usize>> = vec![None; s];
    let mut used = vec![false; s];
    fn backtrack(
        g: &LabeledGraph,
        f: &LabeledGraph,
        subset: &[usize],
        pat_deg: &[usize],
        sub_deg: &[usize],
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        pos: usize,
    ) -> bool {
        let s = subset.len();
        if pos == s {
            return true;
        }
        for cand in 0..s {
            if used[cand] || sub_deg[cand] != pat_deg[pos] {
                continue;
            }
            let ok = (0..pos).all(|earlier| {
                let e = assigned[earlier].unwrap();
                f.has_edge(earlier + 1, pos + 1) == g.has_edge(subset[e], subset[cand])
            });
            if ok {
                assigned[pos] = Some(cand);
                used[cand] = true;
                if backtrack(g, f, subset, pat_deg, sub_deg, assigned, used, pos + 1) {
                    return true;
                }
                used[cand] = false;
                assigned[pos] = None;
            }
        }
        false
    }
    backtrack(g, f, subset, &pat_deg, &sub_deg, &mut assigned, &mut used, 0)
}
