//! Partition of the hubs into few stable layers with a degree rule.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::detect::{self, Caps};
use crate::error::Result;
use crate::graph::Graph;
use crate::set::VertexSet;

/// `⌈log₂ n⌉`, with `0` for `n ≤ 1`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Degeneracy in the strict sense: the least `δ` such that every subgraph
/// has a vertex of degree below `δ`.
pub fn strict_degeneracy(g: &Graph) -> usize {
    g.degeneracy() + 1
}

/// All vertices of degree at most `4δ`; at least `⌈n/2⌉` of them.
pub fn low_degree_half(g: &Graph) -> VertexSet {
    let cap = 4 * strict_degeneracy(g);
    (0..g.n()).filter(|&v| g.degree(v) <= cap).collect()
}

/// Splits `V(g)` into layers `T_1, .., T_m`: `T_1` is the `⌈n/2⌉` least
/// vertices by `(degree, id)` and the rest is split recursively. Every
/// vertex of `T_i` has at most `4δ` neighbours outside `T_1 ∪ .. ∪ T_{i-1}`,
/// with `δ` measured on `g`.
pub fn layered_halving(g: &Graph) -> Vec<VertexSet> {
    let cap = 4 * strict_degeneracy(g);
    let mut left = g.vertices();
    let mut out = Vec::new();
    while !left.is_empty() {
        let mut cand: Vec<(usize, usize)> = left.iter().map(|v| (g.adj(v).intersection_len(&left), v)).collect();
        cand.sort_unstable();
        let take = left.len().div_ceil(2);
        debug_assert!(cand[take - 1].0 <= cap);
        let layer: VertexSet = cand[..take].iter().map(|&(_, v)| v).collect();
        left.difference_with(&layer);
        out.push(layer);
    }
    out
}

/// Stable layers `S_1, .., S_k` covering `Hub(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubPartition {
    pub layers: Vec<VertexSet>,
    /// Strict degeneracy of `G[Hub(G)]`.
    pub delta: usize,
    pub hubs: VertexSet,
}

impl HubPartition {
    /// The order `k` of the partition, an upper bound on the hub dimension.
    pub fn order(&self) -> usize {
        self.layers.len()
    }

    /// `δ(⌈log₂ |Hub|⌉ + 1)`.
    pub fn order_bound(&self) -> usize {
        self.delta * (ceil_log2(self.hubs.len()) + 1)
    }

    /// Checks cover, disjointness, stability, the `4δ` degree rule in
    /// `G[Hub(G)]` and the bound on `k`.
    pub fn check(&self, g: &Graph) -> core::result::Result<(), String> {
        let mut seen = VertexSet::new();
        for (i, s) in self.layers.iter().enumerate() {
            if s.is_empty() {
                return Err(format!("layer {i} is empty"));
            }
            if !seen.is_disjoint(s) {
                return Err(format!("layer {i} overlaps an earlier one"));
            }
            if !g.is_stable(s) {
                return Err(format!("layer {i} is not stable"));
            }
            let rest = self.hubs.difference(&seen);
            for v in s {
                let d = g.adj(v).intersection_len(&rest);
                if d > 4 * self.delta {
                    return Err(format!("vertex {v} of layer {i} has {d} > 4δ later hub neighbours"));
                }
            }
            seen.union_with(s);
        }
        if seen != self.hubs {
            return Err("layers do not cover the hubs".into());
        }
        if self.order() > self.order_bound() {
            return Err(format!("order {} exceeds {}", self.order(), self.order_bound()));
        }
        Ok(())
    }
}

/// Computes `Hub(G)` and partitions `G[Hub(G)]`: halve into layers, colour
/// each layer greedily along a degeneracy order, and list the colour
/// classes layer by layer.
pub fn build_hub_partition(g: &Graph, caps: &Caps) -> Result<HubPartition> {
    let hubs = detect::hubs(g, caps)?;
    Ok(partition_of(g, hubs))
}

/// The partition for a known hub set.
pub fn partition_of(g: &Graph, hubs: VertexSet) -> HubPartition {
    let ind = g.induced(&hubs);
    let h = &ind.graph;
    let delta = strict_degeneracy(h);
    let mut layers = Vec::new();
    for t in layered_halving(h) {
        let sub = h.induced(&t);
        let colors = sub.graph.greedy_color_by_degeneracy();
        let k = colors.iter().copied().max().map_or(0, |c| c + 1);
        debug_assert!(k <= delta);
        for c in 0..k {
            let class: VertexSet = (0..sub.graph.n()).filter(|&v| colors[v] == c).map(|v| sub.parent(v)).collect();
            if !class.is_empty() {
                layers.push(ind.lift(&class));
            }
        }
    }
    HubPartition { layers, delta, hubs }
}

/// Every component of `G \ N[v]` has at most `n/2` vertices.
pub fn is_balanced(g: &Graph, v: usize) -> bool {
    let n = g.n();
    g.components(&g.closed_nbhd_of(v)).iter().all(|d| 2 * d.len() <= n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;

    #[test]
    fn logs() {
        let want = [(0, 0), (1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4), (256, 8)];
        for (n, l) in want {
            assert_eq!(ceil_log2(n), l, "n = {n}");
        }
    }

    #[test]
    fn low_degree_examples() {
        assert_eq!(low_degree_half(&gen::clique(5)).len(), 5);
        let star = gen::star(9);
        let low = low_degree_half(&star);
        assert!((1..10).all(|v| low.contains(v)));
        for seed in 0..30 {
            let g = gen::random_graph(15, 0.4, seed).unwrap();
            assert!(low_degree_half(&g).len() >= g.n().div_ceil(2));
        }
    }

    #[test]
    fn halving() {
        assert_eq!(layered_halving(&Graph::empty(1)).len(), 1);
        assert!(layered_halving(&Graph::empty(0)).is_empty());
        let p8 = gen::path(8);
        let ts = layered_halving(&p8);
        assert!(ts.len() <= 4);
        let cap = 4 * strict_degeneracy(&p8);
        let mut left = p8.vertices();
        for t in &ts {
            assert!(t.iter().all(|v| p8.adj(v).intersection_len(&left) <= cap));
            left.difference_with(t);
        }
        assert!(left.is_empty());
        for seed in 0..20 {
            let g = gen::random_graph(40, 0.3, seed).unwrap();
            assert!(layered_halving(&g).len() <= ceil_log2(40) + 1);
        }
    }

    #[test]
    fn partitions() {
        let caps = Caps::default();
        let p = build_hub_partition(&gen::cycle(8), &caps).unwrap();
        assert_eq!(p.order(), 0);
        let mut es = gen::cycle(5).edges();
        es.extend([(5, 0), (5, 1), (5, 3)]);
        let g = Graph::from_edges(6, &es).unwrap();
        let p = build_hub_partition(&g, &caps).unwrap();
        assert_eq!(p.layers, [VertexSet::singleton(5)]);
        assert_eq!(p.check(&g), Ok(()));
        // every vertex of K_{3,3} as an artificial hub set
        let k33 = gen::complete_bipartite(3, 3);
        let p = partition_of(&k33, k33.vertices());
        assert_eq!(p.check(&k33), Ok(()));
    }

    #[test]
    fn balance() {
        assert!((0..5).all(|v| is_balanced(&gen::clique(5), v)));
        let star = gen::star(4);
        assert!(is_balanced(&star, 0));
        // removing a leaf's closed neighbourhood leaves isolated leaves
        assert!(is_balanced(&star, 1));
        assert!(!is_balanced(&gen::path(7), 0));
        assert!((0..6).all(|v| is_balanced(&gen::cycle(6), v)));
    }
}
