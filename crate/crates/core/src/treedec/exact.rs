use alloc::vec::Vec;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Default vertex cap for [`exact_treewidth`].
pub const DEFAULT_EXACT_CAP: usize = 14;

/// Builds the decomposition of an elimination order: vertex `v` gets the
/// bag `{v} ∪ (later neighbours in the filled graph)`, attached to the bag
/// of its earliest-eliminated later neighbour.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::trivial(0);
    }
    debug_assert_eq!(order.len(), n);
    let mut pos = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.adj(v).clone()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = alloc::vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        let later: VertexSet = adj[v].iter().filter(|&u| pos[u] > i).collect();
        for a in &later {
            let mut rest = later.clone();
            rest.remove(a);
            adj[a].union_with(&rest);
        }
        if let Some(p) = later.iter().min_by_key(|&u| pos[u]) {
            parent[i] = pos[p];
        }
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut last_root = None;
    for (i, &p) in parent.iter().enumerate() {
        if p != usize::MAX {
            edges.push((i, p));
        } else {
            if let Some(r) = last_root {
                edges.push((r, i));
            }
            last_root = Some(i);
        }
    }
    TreeDecomposition {
        bags,
        edges,
        host_n: n,
    }
}

fn greedy_order(g: &Graph, score: impl Fn(&[VertexSet], &VertexSet, usize) -> usize) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.adj(v).clone()).collect();
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (score(&adj, &alive, v), v))
            .unwrap();
        let nb = adj[v].intersection(&alive);
        for a in &nb {
            let mut rest = nb.clone();
            rest.remove(a);
            adj[a].union_with(&rest);
        }
        alive.remove(v);
        order.push(v);
    }
    order
}

/// Greedy elimination order: always eliminate a vertex of minimum degree.
pub fn min_degree_order(g: &Graph) -> Vec<usize> {
    greedy_order(g, |adj, alive, v| adj[v].intersection_len(alive))
}

/// Greedy elimination order: always eliminate a vertex whose elimination
/// adds the fewest fill edges.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    greedy_order(g, |adj, alive, v| {
        let nb = adj[v].intersection(alive);
        let mut missing = 0;
        for a in &nb {
            let have = adj[a].intersection_len(&nb);
            missing += nb.len() - 1 - have;
        }
        missing / 2
    })
}

/// Exact treewidth with an optimal witness, for graphs on at most
/// [`DEFAULT_EXACT_CAP`] vertices.
pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    exact_treewidth_capped(g, DEFAULT_EXACT_CAP)
}

/// Exact treewidth by dynamic programming over vertex subsets:
/// `TW(S) = min_{v ∈ S} max(TW(S \ v), |Q(S \ v, v)|)`, where `Q(S, v)` are
/// the vertices outside `S ∪ {v}` reachable from `v` through `S`.
pub fn exact_treewidth_capped(g: &Graph, cap: usize) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > cap || n > 24 {
        return Err(Error::cap("exact treewidth vertex count", cap.min(24), n));
    }
    if n == 0 {
        return Ok((0, TreeDecomposition::trivial(0)));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut outside = 0u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut it = frontier;
            while it != 0 {
                let x = it.trailing_zeros() as usize;
                it &= it - 1;
                next |= adj[x];
            }
            next &= !seen;
            seen |= next;
            outside |= next & !s;
            frontier = next & s;
        }
        outside.count_ones()
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = alloc::vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut it = s;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let rest = s & !(1 << v);
            let sub = tw[rest as usize];
            if sub >= best {
                continue;
            }
            let val = sub.max(q(rest, v) as u8);
            if val < best {
                best = val;
            }
        }
        tw[s as usize] = best;
    }
    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s as usize];
        let mut it = s;
        let mut chosen = None;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let rest = s & !(1 << v);
            if tw[rest as usize].max(q(rest, v) as u8) == target {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("optimal choice exists");
        order_rev.push(v);
        s &= !(1 << v);
    }
    order_rev.reverse();
    let td = decomposition_from_order(g, &order_rev);
    let width = tw[full as usize] as usize;
    debug_assert_eq!(td.width(), width as isize);
    Ok((width, td))
}
