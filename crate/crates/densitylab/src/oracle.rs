//! Brute-force enumeration oracles: exhaustive verification of the extremal
//! statements at desk scale, plus seeded random generators for the property
//! suites.
//!
//! Ordered graphs are inherently labeled, so plain enumeration of edge
//! subsets is the correct universe; no isomorphism reduction is applied.
//! Enumeration partitions the subset ranks into contiguous blocks that can
//! be processed independently; reports merge by max/min with ties broken
//! toward the smaller rank, so parallel runs are bit-identical to serial
//! ones.

use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{build_kst_pattern, build_sl, build_sr};
use crate::counting::{binomial_u128, count_colored_copies, count_left_stars};
use crate::graph_core::{
    colors::{BLUE, GREEN},
    ColoredCompleteGraph, LabeledGraph, OrderedGraph,
};
use crate::graphon::StepGraphon;
use crate::{Error, Result};

/// Refuse plain enumeration beyond this many edge subsets.
pub const ENUMERATION_BUDGET: u128 = 100_000_000;

/// Largest `n` accepted by [`certify_left_star_extremes`].
pub const CERTIFY_VERTEX_BUDGET: usize = 7;

fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect()
}

/// Stream of every ordered graph on `[n]` with exactly `m` edges, one per
/// `m`-subset of the edge slots, in lexicographic rank order.
pub struct OrderedGraphStream {
    n: usize,
    slots: Vec<(usize, usize)>,
    indices: Option<Vec<usize>>,
}

impl Iterator for OrderedGraphStream {
    type Item = OrderedGraph;

    fn next(&mut self) -> Option<OrderedGraph> {
        let indices = self.indices.as_mut()?;
        let g = {
            let edges: Vec<(usize, usize)> = indices.iter().map(|&i| self.slots[i]).collect();
            LabeledGraph::from_edges(self.n, &edges).unwrap().into()
        };
        if !advance_combination(indices, self.slots.len()) {
            self.indices = None;
        }
        Some(g)
    }
}

/// Next `m`-combination of `0..num_slots` in lexicographic order.
fn advance_combination(indices: &mut [usize], num_slots: usize) -> bool {
    let m = indices.len();
    if m == 0 {
        return false;
    }
    let mut i = m;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if indices[i] != i + num_slots - m {
            break;
        }
        if i == 0 {
            return false;
        }
    }
    indices[i] += 1;
    for j in (i + 1)..m {
        indices[j] = indices[j - 1] + 1;
    }
    true
}

/// The `m`-combination of `0..num_slots` at lexicographic `rank`.
fn combination_at_rank(num_slots: usize, m: usize, mut rank: u128) -> Vec<usize> {
    let mut result = Vec::with_capacity(m);
    let mut candidate = 0usize;
    let mut remaining = m;
    while remaining > 0 {
        let with_candidate = binomial_u128((num_slots - candidate - 1) as u64, (remaining - 1) as u64);
        if rank < with_candidate {
            result.push(candidate);
            remaining -= 1;
        } else {
            rank -= with_candidate;
        }
        candidate += 1;
    }
    result
}

fn check_range(n: usize, m: usize) -> Result<usize> {
    let max = n * (n - 1) / 2;
    if m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, max });
    }
    Ok(max)
}

/// Enumerate all ordered graphs with `n` vertices and `m` edges, refusing
/// when the subset count exceeds [`ENUMERATION_BUDGET`].
pub fn enumerate_ordered_graphs(n: usize, m: usize) -> Result<OrderedGraphStream> {
    let max = check_range(n, m)?;
    let subsets = binomial_u128(max as u64, m as u64);
    if subsets > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget { n, m, subsets });
    }
    enumerate_ordered_graphs_unbounded(n, m)
}

/// Enumeration without the subset budget guard; ranges are still validated.
pub fn enumerate_ordered_graphs_unbounded(n: usize, m: usize) -> Result<OrderedGraphStream> {
    check_range(n, m)?;
    Ok(OrderedGraphStream {
        n,
        slots: edge_slots(n),
        indices: Some((0..m).collect()),
    })
}

/// Exhaustive extremal certificate for the left-star count over all ordered
/// graphs with `n` vertices and `m` edges.
#[derive(Clone, Debug)]
pub struct ExtremalCertificate {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub max_count: BigUint,
    pub min_count: BigUint,
    pub argmax_witness: OrderedGraph,
    pub argmin_witness: OrderedGraph,
    /// Construction value equals the exhaustive maximum.
    pub matches_sl: bool,
    /// Construction value equals the exhaustive minimum.
    pub matches_sr: bool,
}

#[derive(Clone, Copy)]
struct FoldState {
    max_count: u128,
    max_rank: u128,
    min_count: u128,
    min_rank: u128,
}

impl FoldState {
    fn merge(self, other: FoldState) -> FoldState {
        let (max_count, max_rank) = if other.max_count > self.max_count
            || (other.max_count == self.max_count && other.max_rank < self.max_rank)
        {
            (other.max_count, other.max_rank)
        } else {
            (self.max_count, self.max_rank)
        };
        let (min_count, min_rank) = if other.min_count < self.min_count
            || (other.min_count == self.min_count && other.min_rank < self.min_rank)
        {
            (other.min_count, other.min_rank)
        } else {
            (self.min_count, self.min_rank)
        };
        FoldState {
            max_count,
            max_rank,
            min_count,
            min_rank,
        }
    }
}

/// Exhaustively maximize and minimize the left-star count and compare the
/// extremes with the two quasi-star constructions.
pub fn certify_left_star_extremes(n: usize, m: usize, k: usize) -> Result<ExtremalCertificate> {
    if n > CERTIFY_VERTEX_BUDGET {
        return Err(Error::EnumerationBudget {
            n,
            m,
            subsets: binomial_u128((n * (n - 1) / 2) as u64, m as u64),
        });
    }
    if m == 0 {
        return Err(Error::EdgeCountOutOfRange { n, m: 0, max: 0 });
    }
    let max_slots = check_range(n, m)?;
    let total = binomial_u128(max_slots as u64, m as u64);
    if total > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget { n, m, subsets: total });
    }
    let slots = edge_slots(n);

    // Left-star count straight from the subset's right-degree profile.
    let count_of = |indices: &[usize]| -> u128 {
        let mut right_deg = [0u64; 16];
        for &slot in indices {
            right_deg[slots[slot].0] += 1;
        }
        (1..=n).map(|v| binomial_u128(right_deg[v], k as u64)).sum()
    };

    let chunk: u128 = 1 << 14;
    let num_chunks = total.div_ceil(chunk);
    let state = (0..num_chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * chunk;
            let end = total.min(start + chunk);
            let mut indices = combination_at_rank(max_slots, m, start);
            let mut state = FoldState {
                max_count: 0,
                max_rank: u128::MAX,
                min_count: u128::MAX,
                min_rank: u128::MAX,
            };
            for rank in start..end {
                let c = count_of(&indices);
                state = state.merge(FoldState {
                    max_count: c,
                    max_rank: rank,
                    min_count: c,
                    min_rank: rank,
                });
                if rank + 1 < end {
                    advance_combination(&mut indices, max_slots);
                }
            }
            state
        })
        .reduce(
            || FoldState {
                max_count: 0,
                max_rank: u128::MAX,
                min_count: u128::MAX,
                min_rank: u128::MAX,
            },
            FoldState::merge,
        );

    let witness = |rank: u128| -> OrderedGraph {
        let indices = combination_at_rank(max_slots, m, rank);
        let edges: Vec<(usize, usize)> = indices.iter().map(|&i| slots[i]).collect();
        LabeledGraph::from_edges(n, &edges).unwrap().into()
    };
    let argmax_witness = witness(state.max_rank);
    let argmin_witness = witness(state.min_rank);

    let max_count = BigUint::from(state.max_count);
    let min_count = BigUint::from(state.min_count);
    let sl_count = count_left_stars(&build_sl(n, m)?, k);
    let sr_count = count_left_stars(&build_sr(n, m)?, k);
    // The exhaustive extremes bracket the construction values by definition;
    // equality is the certified statement.
    debug_assert!(sl_count <= max_count && sr_count >= min_count);

    Ok(ExtremalCertificate {
        n,
        m,
        k,
        matches_sl: sl_count == max_count,
        matches_sr: sr_count == min_count,
        max_count,
        min_count,
        argmax_witness,
        argmin_witness,
    })
}

/// Seeded random step graphon: part count uniform in `1..=max_parts`, masses
/// from normalized exponential draws (uniform on the simplex), values
/// uniform in `[0, 1]` symmetrized.
pub fn random_step_graphon(max_parts: usize, seed: u64) -> StepGraphon {
    assert!(max_parts >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=max_parts);
    let mut alpha = vec![0.0f64; k];
    let mut total = 0.0;
    for a in alpha.iter_mut() {
        let mut draw = 0.0;
        while draw <= 0.0 {
            draw = -(1.0 - rng.gen::<f64>()).ln();
        }
        *a = draw;
        total += draw;
    }
    for a in alpha.iter_mut() {
        *a /= total;
    }
    let mut beta = vec![0.0f64; k * k];
    for i in 0..k {
        for j in i..k {
            let b = rng.gen::<f64>();
            beta[i * k + j] = b;
            beta[j * k + i] = b;
        }
    }
    StepGraphon::new(alpha, beta).expect("random draw satisfies the invariants")
}

/// Seeded random coloring of the complete graph on `n` vertices.
pub fn random_colored_host(n: usize, q: usize, seed: u64) -> ColoredCompleteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = vec![0usize; n * n];
    for u in 1..=n {
        for v in (u + 1)..=n {
            table[(u - 1) * n + (v - 1)] = rng.gen_range(1..=q);
        }
    }
    ColoredCompleteGraph::from_fn(n, q, |u, v| table[(u - 1) * n + (v - 1)]).unwrap()
}

/// Exact check of the product inequality: the count of the two-clique
/// pattern is at most the product of the blue-clique and green-clique
/// counts.
pub fn check_product_inequality(g: &ColoredCompleteGraph, s: usize, t: usize) -> bool {
    let kst = build_kst_pattern(s, t).expect("valid s <= t");
    let ks = ColoredCompleteGraph::monochromatic(s, 3, BLUE).unwrap();
    let kt = ColoredCompleteGraph::monochromatic(t, 3, GREEN).unwrap();
    let left = count_colored_copies(g, &kst);
    let right = count_colored_copies(g, &ks) * count_colored_copies(g, &kt);
    left <= right
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_colored_case1;
    use crate::counting::binomial;
    use crate::graph_core::colors::RED;
    use num::Zero;

    #[test]
    fn stream_lengths() {
        assert_eq!(enumerate_ordered_graphs(3, 1).unwrap().count(), 3);
        assert_eq!(enumerate_ordered_graphs(4, 3).unwrap().count(), 20);
        assert_eq!(enumerate_ordered_graphs(6, 7).unwrap().count(), 6435);
        assert_eq!(enumerate_ordered_graphs(4, 0).unwrap().count(), 1);
    }

    #[test]
    fn stream_yields_distinct_graphs_with_m_edges() {
        let mut seen = std::collections::HashSet::new();
        for g in enumerate_ordered_graphs(5, 4).unwrap() {
            assert_eq!(g.edge_count(), 4);
            let edges: Vec<(usize, usize)> = g.edges().collect();
            assert!(seen.insert(edges));
        }
        assert_eq!(seen.len() as u128, binomial_u128(10, 4));
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            enumerate_ordered_graphs(10, 20),
            Err(Error::EnumerationBudget { .. })
        ));
        assert!(enumerate_ordered_graphs_unbounded(10, 20).is_ok());
        assert!(matches!(
            enumerate_ordered_graphs(4, 9),
            Err(Error::EdgeCountOutOfRange { .. })
        ));
    }

    #[test]
    fn combination_ranking_round_trip() {
        let mut indices: Vec<usize> = (0..3).collect();
        let mut rank = 0u128;
        loop {
            assert_eq!(combination_at_rank(7, 3, rank), indices);
            if !advance_combination(&mut indices, 7) {
                break;
            }
            rank += 1;
        }
        assert_eq!(rank + 1, binomial_u128(7, 3));
    }

    #[test]
    fn certificate_small_example() {
        let cert = certify_left_star_extremes(4, 3, 2).unwrap();
        assert_eq!(cert.max_count, BigUint::from(3u32));
        assert_eq!(cert.min_count, BigUint::zero());
        assert!(cert.matches_sl);
        assert!(cert.matches_sr);
        assert_eq!(
            count_left_stars(&cert.argmax_witness, 2),
            BigUint::from(3u32)
        );
        assert_eq!(count_left_stars(&cert.argmin_witness, 2), BigUint::zero());
    }

    #[test]
    fn certificate_k1_counts_edges() {
        for n in 2..=5usize {
            for m in 1..=(n * (n - 1) / 2) {
                let cert = certify_left_star_extremes(n, m, 1).unwrap();
                assert_eq!(cert.max_count, BigUint::from(m));
                assert_eq!(cert.min_count, BigUint::from(m));
                assert!(cert.matches_sl && cert.matches_sr);
            }
        }
    }

    #[test]
    fn certificate_budget() {
        assert!(matches!(
            certify_left_star_extremes(8, 3, 2),
            Err(Error::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn random_graphon_reproducible_and_valid() {
        let a = random_step_graphon(6, 42);
        let b = random_step_graphon(6, 42);
        assert_eq!(a, b);
        for seed in 0..2000 {
            let w = random_step_graphon(6, seed);
            let total: f64 = w.alpha().iter().sum();
            assert!((total - 1.0).abs() <= 1e-12);
            assert!(w.alpha().iter().all(|&x| x > 0.0));
            for i in 1..=w.parts() {
                for j in 1..=w.parts() {
                    let v = w.beta_at(i, j);
                    assert!((0.0..=1.0).contains(&v));
                    assert_eq!(v, w.beta_at(j, i));
                }
            }
        }
    }

    #[test]
    fn random_host_reproducible() {
        let a = random_colored_host(12, 3, 7);
        let b = random_colored_host(12, 3, 7);
        assert_eq!(a, b);
    }

    #[test]
    fn product_inequality_examples() {
        let mono = ColoredCompleteGraph::monochromatic(8, 3, RED).unwrap();
        assert!(check_product_inequality(&mono, 2, 2));

        // Blocked host: equality, every blue pair times green pair is a copy.
        let host = build_colored_case1(20, 0.25, 0.25).unwrap();
        let kst = build_kst_pattern(2, 2).unwrap();
        let ks = ColoredCompleteGraph::monochromatic(2, 3, BLUE).unwrap();
        let kt = ColoredCompleteGraph::monochromatic(2, 3, GREEN).unwrap();
        let left = count_colored_copies(&host, &kst);
        let right = count_colored_copies(&host, &ks) * count_colored_copies(&host, &kt);
        assert_eq!(left, right);
        assert_eq!(left, binomial(10, 2) * binomial(10, 2));

        for seed in 0..50 {
            let host = random_colored_host(12, 3, seed);
            assert!(check_product_inequality(&host, 2, 2), "seed {seed}");
            assert!(check_product_inequality(&host, 2, 3), "seed {seed}");
        }
    }

    #[test]
    fn star_bound_random_suite_sample() {
        for seed in 0..500 {
            let w = random_step_graphon(6, seed);
            for k in 1..=5 {
                assert!(
                    crate::graphon::verify_star_density_bound(&w, k),
                    "seed {seed} k {k}"
                );
            }
        }
    }
}
