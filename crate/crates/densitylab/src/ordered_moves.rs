//! Exchange operations on ordered graphs, exposed as verified monotone
//! transformations: swapping consecutive vertices, shifting an edge, and the
//! swap-driven normalization toward a nonincreasing right-degree sequence.
//!
//! Every move preserves the vertex count and edge count; the attached report
//! records how the left-star count reacted.

use num::BigUint;

use crate::counting::count_left_stars;
use crate::graph_core::{LabeledGraph, OrderedGraph};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Swap,
    Shift,
}

/// Before/after left-star counts of a move, for a caller-chosen star size.
#[derive(Clone, Debug)]
pub struct MoveReport {
    pub kind: MoveKind,
    pub k: usize,
    pub before: BigUint,
    pub after: BigUint,
    pub delta_sign: i8,
}

impl MoveReport {
    fn new(kind: MoveKind, k: usize, before: BigUint, after: BigUint) -> Self {
        let delta_sign = match after.cmp(&before) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        };
        MoveReport {
            kind,
            k,
            before,
            after,
            delta_sign,
        }
    }
}

/// Interchange the positions of vertices `i` and `i + 1` in the order.
///
/// If `{i, i+1}` is not an edge the left-star count is unchanged; if it is
/// an edge and `d+(i) < d+(i+1)`, convexity of the binomial coefficient makes
/// the count go weakly up (strictly for k = 2).
pub fn swap_adjacent(g: &OrderedGraph, i: usize, k: usize) -> Result<(OrderedGraph, MoveReport)> {
    let n = g.n();
    if i < 1 || i >= n {
        return Err(Error::VertexOutOfRange { v: i, n: n - 1 });
    }
    let relabel = |v: usize| -> usize {
        if v == i {
            i + 1
        } else if v == i + 1 {
            i
        } else {
            v
        }
    };
    let mut swapped = LabeledGraph::empty(n);
    for (u, v) in g.edges() {
        let (a, b) = (relabel(u), relabel(v));
        swapped.set0(a - 1, b - 1);
    }
    swapped.refresh_edge_count();
    let swapped: OrderedGraph = swapped.into();
    let report = MoveReport::new(
        MoveKind::Swap,
        k,
        count_left_stars(g, k),
        count_left_stars(&swapped, k),
    );
    Ok((swapped, report))
}

/// Replace the edge `remove` by the non-edge `add`.
pub fn shift_edge(
    g: &OrderedGraph,
    remove: (usize, usize),
    add: (usize, usize),
    k: usize,
) -> Result<(OrderedGraph, MoveReport)> {
    let n = g.n();
    let norm = |(u, v): (usize, usize)| if u <= v { (u, v) } else { (v, u) };
    let remove = norm(remove);
    let add = norm(add);
    for &(u, v) in [&remove, &add] {
        if u < 1 || v > n || u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "endpoints must be distinct vertices in range".into(),
            });
        }
    }
    if !g.has_edge(remove.0, remove.1) {
        return Err(Error::InvalidEdge {
            u: remove.0,
            v: remove.1,
            reason: "edge to remove is absent".into(),
        });
    }
    if add != remove && g.has_edge(add.0, add.1) {
        return Err(Error::InvalidEdge {
            u: add.0,
            v: add.1,
            reason: "edge to add is already present".into(),
        });
    }
    let mut shifted = LabeledGraph::empty(n);
    for (u, v) in g.edges() {
        if (u, v) != remove {
            shifted.set0(u - 1, v - 1);
        }
    }
    shifted.set0(add.0 - 1, add.1 - 1);
    shifted.refresh_edge_count();
    let shifted: OrderedGraph = shifted.into();
    let report = MoveReport::new(
        MoveKind::Shift,
        k,
        count_left_stars(g, k),
        count_left_stars(&shifted, k),
    );
    Ok((shifted, report))
}

/// Repeatedly swap the smallest consecutive pair `i, i+1` with
/// `d+(i) < d+(i+1)` until the right-degree sequence is nonincreasing.
///
/// No swap decreases the left-star count, so the output's count weakly
/// dominates the input's. Termination: every swap strictly decreases the
/// potential `sum_i i * d+(i)`.
pub fn normalize_nonincreasing(g: &OrderedGraph, k: usize) -> OrderedGraph {
    let mut current = g.clone();
    // Potential bound: sum i * d+(i) <= n * m, so the loop is finite.
    let cap = current.n() * current.edge_count() + 1;
    for _ in 0..cap {
        let degrees = current.right_degrees();
        let offender = (0..degrees.len() - 1).find(|&i| degrees[i] < degrees[i + 1]);
        match offender {
            None => return current,
            Some(i0) => {
                let (swapped, _) = swap_adjacent(&current, i0 + 1, k).unwrap();
                current = swapped;
            }
        }
    }
    unreachable!("potential argument bounds the number of swaps");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_sr;
    use crate::counting::binomial;
    use crate::graph_core::LabeledGraph;
    use crate::oracle::enumerate_ordered_graphs;
    use num::BigUint;

    #[test]
    fn swap_without_edge_keeps_counts() {
        // 1 and 2 are non-adjacent here.
        let g: OrderedGraph = LabeledGraph::from_edges(4, &[(1, 3), (2, 4), (3, 4)])
            .unwrap()
            .into();
        for k in 1..=3 {
            let (_, report) = swap_adjacent(&g, 1, k).unwrap();
            assert_eq!(report.delta_sign, 0, "k = {k}");
        }
    }

    #[test]
    fn swap_with_edge_k1_keeps_counts() {
        let g: OrderedGraph = LabeledGraph::from_edges(4, &[(1, 2), (2, 3), (2, 4)])
            .unwrap()
            .into();
        let (_, report) = swap_adjacent(&g, 1, 1).unwrap();
        assert_eq!(report.delta_sign, 0);
        assert_eq!(report.before, BigUint::from(3u32));
    }

    #[test]
    fn swap_out_of_range() {
        let g: OrderedGraph = LabeledGraph::empty(4).into();
        assert!(swap_adjacent(&g, 4, 2).is_err());
        assert!(swap_adjacent(&g, 0, 2).is_err());
    }

    /// Exhaustive over all ordered graphs with n <= 5: the sign of every
    /// swap matches the binomial-convexity prediction.
    #[test]
    fn swap_sign_matches_convexity_analysis() {
        for n in 2..=5usize {
            for m in 0..=(n * (n - 1) / 2) {
                for g in enumerate_ordered_graphs(n, m).unwrap() {
                    let degrees = g.right_degrees();
                    for i in 1..n {
                        for k in 1..=3usize {
                            let (_, report) = swap_adjacent(&g, i, k).unwrap();
                            let predicted = if !g.has_edge(i, i + 1) {
                                0
                            } else {
                                let d = degrees[i - 1] as u64;
                                let dnext = degrees[i] as u64;
                                // count change = C(dnext, k-1) - C(d-1, k-1)
                                let gain = binomial(dnext, k as u64 - 1);
                                let loss = binomial(d - 1, k as u64 - 1);
                                match gain.cmp(&loss) {
                                    std::cmp::Ordering::Less => -1,
                                    std::cmp::Ordering::Equal => 0,
                                    std::cmp::Ordering::Greater => 1,
                                }
                            };
                            assert_eq!(
                                report.delta_sign, predicted,
                                "n={n} m={m} i={i} k={k}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn swap_with_edge_and_smaller_right_degree_increases_k2() {
        for n in 3..=5usize {
            for m in 1..=(n * (n - 1) / 2) {
                for g in enumerate_ordered_graphs(n, m).unwrap() {
                    let degrees = g.right_degrees();
                    for i in 1..n {
                        if g.has_edge(i, i + 1) && degrees[i - 1] < degrees[i] {
                            let (_, report) = swap_adjacent(&g, i, 2).unwrap();
                            assert_eq!(report.delta_sign, 1, "n={n} m={m} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shift_identity_and_errors() {
        let g: OrderedGraph = LabeledGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap().into();
        let (h, report) = shift_edge(&g, (1, 2), (1, 2), 2).unwrap();
        assert_eq!(h, g);
        assert_eq!(report.delta_sign, 0);

        assert!(shift_edge(&g, (1, 3), (2, 3), 2).is_err()); // remove absent
        assert!(shift_edge(&g, (1, 2), (3, 4), 2).is_err()); // add present
        assert!(shift_edge(&g, (1, 1), (2, 3), 2).is_err()); // loop
    }

    /// Exhaustive over n <= 5, k = 2: raising an already-large right-degree
    /// at the expense of a smaller one never decreases the count; lowering a
    /// larger one in favor of a smaller never increases it, with equality
    /// exactly at a gap of one.
    #[test]
    fn shift_direction_signs() {
        for n in 3..=5usize {
            for m in 1..=(n * (n - 1) / 2) {
                for g in enumerate_ordered_graphs(n, m).unwrap() {
                    let degrees = g.right_degrees();
                    let edges: Vec<(usize, usize)> = g.edges().collect();
                    let absent: Vec<(usize, usize)> = (1..=n)
                        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
                        .filter(|&(u, v)| !g.has_edge(u, v))
                        .collect();
                    for &(x, w) in &edges {
                        for &(v, z) in &absent {
                            let (_, report) = shift_edge(&g, (x, w), (v, z), 2).unwrap();
                            if v == x {
                                assert_eq!(report.delta_sign, 0, "n={n} m={m}");
                            } else if degrees[v - 1] >= degrees[x - 1] {
                                // max direction
                                assert!(report.delta_sign >= 0, "n={n} m={m}");
                            } else if degrees[x - 1] > degrees[v - 1] {
                                // min direction
                                assert!(report.delta_sign <= 0, "n={n} m={m}");
                                if degrees[x - 1] == degrees[v - 1] + 1 {
                                    assert_eq!(report.delta_sign, 0, "n={n} m={m}");
                                } else {
                                    assert_eq!(report.delta_sign, -1, "n={n} m={m}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let sorted: OrderedGraph = LabeledGraph::from_edges(4, &[(1, 2), (1, 3), (2, 3)])
            .unwrap()
            .into();
        let out = normalize_nonincreasing(&sorted, 2);
        assert_eq!(out, sorted);

        let sr = build_sr(5, 4).unwrap();
        let out = normalize_nonincreasing(&sr, 2);
        let degrees = out.right_degrees();
        assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
        assert!(count_left_stars(&out, 2) >= count_left_stars(&sr, 2));
    }

    #[test]
    fn normalize_exhaustive_small() {
        for n in 2..=5usize {
            for m in 0..=(n * (n - 1) / 2) {
                for g in enumerate_ordered_graphs(n, m).unwrap() {
                    for k in 1..=3usize {
                        let out = normalize_nonincreasing(&g, k);
                        assert_eq!(out.n(), g.n());
                        assert_eq!(out.edge_count(), g.edge_count());
                        let degrees = out.right_degrees();
                        assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
                        assert!(count_left_stars(&out, k) >= count_left_stars(&g, k));
                    }
                }
            }
        }
    }

    #[test]
    fn normalize_random_larger() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = 7;
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in (u + 1)..=n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g: OrderedGraph = LabeledGraph::from_edges(n, &edges).unwrap().into();
            for k in 1..=3 {
                let out = normalize_nonincreasing(&g, k);
                let degrees = out.right_degrees();
                assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
                assert!(count_left_stars(&out, k) >= count_left_stars(&g, k));
                assert_eq!(out.edge_count(), g.edge_count());
            }
        }
    }

    /// Empirical swap-count bound: the normalization needs at most C(n, 2)
    /// swaps on every graph with n <= 6.
    #[test]
    fn normalize_swap_budget_small() {
        for n in 2..=6usize {
            let budget = n * (n - 1) / 2;
            for m in 0..=(n * (n - 1) / 2) {
                for g in enumerate_ordered_graphs(n, m).unwrap() {
                    let mut current = g.clone();
                    let mut swaps = 0usize;
                    loop {
                        let degrees = current.right_degrees();
                        match (0..degrees.len() - 1).find(|&i| degrees[i] < degrees[i + 1]) {
                            None => break,
                            Some(i0) => {
                                current = swap_adjacent(&current, i0 + 1, 2).unwrap().0;
                                swaps += 1;
                                assert!(swaps <= budget, "n={n} m={m} exceeded C(n,2) swaps");
                            }
                        }
                    }
                }
            }
        }
    }
}
