//! Deterministic generators for the extremal constructions, exact in edge
//! and color counts. All size parameters use floor exactly as specified, so
//! finite-n instances are reproducible bit for bit.

use crate::graph_core::{
    colors::{BLUE, GREEN, RED},
    ColoredCompleteGraph, LabeledGraph, OrderedGraph,
};
use crate::{Error, Result};

/// Parameters of the quasi-star: `a` is the largest integer with
/// `f(n, a) = C(a,2) + a(n-a) <= m`, and `b = m - f(n, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiStarParams {
    pub a: usize,
    pub b: usize,
}

fn f_quasi(n: usize, a: usize) -> usize {
    a * a.saturating_sub(1) / 2 + a * (n - a)
}

fn max_edges(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn quasi_star_params(n: usize, m: usize) -> Result<QuasiStarParams> {
    let max = max_edges(n);
    if m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, max });
    }
    let mut a = 0;
    while a < n && f_quasi(n, a + 1) <= m {
        a += 1;
    }
    let b = m - f_quasi(n, a);
    // f(n, a+1) - f(n, a) = n - a - 1 forces b < n - a - 1 below saturation.
    debug_assert!(a == n || b < n - a - 1 || (a + 1 == n && b == 0));
    Ok(QuasiStarParams { a, b })
}

/// Quasi-star `S_L(n, m)`: a dominating clique on `[a]` joined to everything,
/// plus `b` edges from `a+1` to the next `b` vertices.
pub fn build_sl(n: usize, m: usize) -> Result<OrderedGraph> {
    let QuasiStarParams { a, b } = quasi_star_params(n, m)?;
    let mut g = LabeledGraph::empty(n);
    for v in 0..a {
        for w in (v + 1)..n {
            g.set0(v, w);
        }
    }
    for j in 0..b {
        g.set0(a, a + 1 + j);
    }
    g.refresh_edge_count();
    debug_assert_eq!(g.edge_count(), m);
    Ok(g.into())
}

/// `S_R(n, m)`: the quasi-star with the vertex order reversed.
pub fn build_sr(n: usize, m: usize) -> Result<OrderedGraph> {
    Ok(build_sl(n, m)?.reverse_order())
}

/// The eta parameter `1 - sqrt(1 - x)` shared by all constructions.
fn eta_of(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange {
            name: "x",
            value: x,
            range: "[0, 1]",
        });
    }
    Ok(1.0 - (1.0 - x).sqrt())
}

/// Three-block ordered graph `A < B < C`: B is a clique completely joined to
/// A and C, no other edges. `|B| = floor(n * eta)`, `|A|` and `|C|` split the
/// rest with ties toward A.
pub fn build_spider(n: usize, x: f64) -> Result<OrderedGraph> {
    let eta = eta_of(x)?;
    assert!(n >= 1);
    let b = (((n as f64) * eta).floor() as usize).min(n);
    let a = (n - b).div_ceil(2);
    // A = 0..a, B = a..a+b, C = a+b..n (0-based); edges = pairs meeting B.
    let in_b = |w: usize| w >= a && w < a + b;
    let mut g = LabeledGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if in_b(u) || in_b(v) {
                g.set0(u, v);
            }
        }
    }
    g.refresh_edge_count();
    Ok(g.into())
}

/// Banded ordered graph: `ij` is an edge iff `j - i <= floor(eta * n)`.
pub fn build_banded(n: usize, x: f64) -> Result<OrderedGraph> {
    let eta = eta_of(x)?;
    assert!(n >= 1);
    let gap = ((n as f64) * eta).floor() as usize;
    let mut g = LabeledGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n.min(u + gap + 1) {
            g.set0(u, v);
        }
    }
    g.refresh_edge_count();
    Ok(g.into())
}

/// Clique on `floor(sqrt(gamma) * n)` vertices plus isolated vertices.
pub fn build_clique_plus_isolated(n: usize, gamma: f64) -> Result<LabeledGraph> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            range: "[0, 1]",
        });
    }
    let c = (((n as f64) * gamma.sqrt()).floor() as usize).min(n);
    let mut g = LabeledGraph::empty(n);
    for u in 0..c {
        for v in (u + 1)..c {
            g.set0(u, v);
        }
    }
    g.refresh_edge_count();
    Ok(g)
}

/// Complement of a clique with isolated vertices at density `1 - gamma`:
/// an independent set of size `floor(sqrt(1 - gamma) * n)` completely joined
/// to a clique on the remaining vertices.
pub fn build_cocliqued(n: usize, gamma: f64) -> Result<LabeledGraph> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            range: "[0, 1]",
        });
    }
    let indep = (((n as f64) * (1.0 - gamma).sqrt()).floor() as usize).min(n);
    let mut g = LabeledGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            // absent only when both endpoints lie in the independent set
            if !(u < indep && v < indep) {
                g.set0(u, v);
            }
        }
    }
    g.refresh_edge_count();
    Ok(g)
}

/// The 3-colored clique on `s + t` vertices: a blue clique on the first `s`
/// vertices, a green clique on the remaining `t`, red crossing pairs.
pub fn build_kst_pattern(s: usize, t: usize) -> Result<ColoredCompleteGraph> {
    if s < 2 || s > t {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s as f64,
            range: "2 <= s <= t",
        });
    }
    ColoredCompleteGraph::from_fn(s + t, 3, |u, v| {
        if v <= s {
            BLUE
        } else if u > s {
            GREEN
        } else {
            RED
        }
    })
}

fn check_unit(name: &'static str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::ParamOutOfRange {
            name,
            value: v,
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// Host maximizing the two-clique pattern density when
/// `sqrt(x_b) + sqrt(x_g) <= 1`: blue inside a block of `floor(n sqrt(x_b))`
/// vertices, green inside a disjoint block of `floor(n sqrt(x_g))`, red
/// everywhere else.
pub fn build_colored_case1(n: usize, x_b: f64, x_g: f64) -> Result<ColoredCompleteGraph> {
    check_unit("x_b", x_b)?;
    check_unit("x_g", x_g)?;
    if x_b.sqrt() + x_g.sqrt() > 1.0 {
        return Err(Error::ParamOutOfRange {
            name: "sqrt(x_b) + sqrt(x_g)",
            value: x_b.sqrt() + x_g.sqrt(),
            range: "<= 1",
        });
    }
    let a = ((n as f64) * x_b.sqrt()).floor() as usize;
    let b = ((n as f64) * x_g.sqrt()).floor() as usize;
    assert!(a + b <= n);
    ColoredCompleteGraph::from_fn(n, 3, |u, v| {
        if v <= a {
            BLUE
        } else if u > a && v <= a + b {
            GREEN
        } else {
            RED
        }
    })
}

/// Host maximizing the two-clique pattern density when
/// `sqrt(x_b) + sqrt(x_g) > 1`: blue inside A with `|A| = floor(n sqrt(x_b))`,
/// red between A and B with `|B| = floor(n x_r / (2 sqrt(x_b)))`, green
/// everywhere else.
pub fn build_colored_case2(n: usize, x_b: f64, x_g: f64) -> Result<ColoredCompleteGraph> {
    check_unit("x_b", x_b)?;
    check_unit("x_g", x_g)?;
    if x_b + x_g > 1.0 {
        return Err(Error::ParamOutOfRange {
            name: "x_b + x_g",
            value: x_b + x_g,
            range: "<= 1",
        });
    }
    if x_b.sqrt() + x_g.sqrt() <= 1.0 {
        return Err(Error::ParamOutOfRange {
            name: "sqrt(x_b) + sqrt(x_g)",
            value: x_b.sqrt() + x_g.sqrt(),
            range: "> 1",
        });
    }
    let x_r = 1.0 - x_b - x_g;
    let a = ((n as f64) * x_b.sqrt()).floor() as usize;
    let b = ((n as f64) * x_r / (2.0 * x_b.sqrt())).floor() as usize;
    assert!(a + b <= n, "block sizes exceed n");
    ColoredCompleteGraph::from_fn(n, 3, |u, v| {
        if v <= a {
            BLUE
        } else if u <= a && v <= a + b {
            RED
        } else {
            GREEN
        }
    })
}
