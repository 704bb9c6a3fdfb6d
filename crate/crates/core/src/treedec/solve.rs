//! Dynamic programming over nice tree decompositions.
//!
//! Every table is indexed by a base-`b` number whose `i`-th digit is the
//! state of the `i`-th smallest vertex of the bag.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{make_nice, NiceDecomposition, NiceKind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest `q` accepted by [`solve_q_coloring`].
pub const MAX_Q: usize = 8;

const MAX_TABLE: usize = 1 << 22;

struct Prepared {
    nice: NiceDecomposition,
    lists: Vec<Vec<usize>>,
    pow: Vec<usize>,
}

fn prepare(g: &Graph, t: &TreeDecomposition, base: usize) -> Result<Prepared> {
    let nice = make_nice(g, t).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    let max_len = nice.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0);
    let mut pow = alloc::vec![1usize];
    for i in 0..=max_len {
        pow.push(pow[i].saturating_mul(base));
    }
    if pow[max_len] > MAX_TABLE {
        return Err(Error::cap("DP table size", MAX_TABLE, pow[max_len]));
    }
    let lists = nice.nodes.iter().map(|x| x.bag.to_vec()).collect();
    Ok(Prepared { nice, lists, pow })
}

impl Prepared {
    fn digit(&self, s: usize, i: usize) -> usize {
        s / self.pow[i] % self.pow[1]
    }

    fn remove_digit(&self, s: usize, p: usize) -> usize {
        s % self.pow[p] + s / self.pow[p + 1] * self.pow[p]
    }

    fn insert_digit(&self, s: usize, p: usize, d: usize) -> usize {
        s % self.pow[p] + d * self.pow[p] + s / self.pow[p] * self.pow[p + 1]
    }

    fn size(&self, node: usize) -> usize {
        self.pow[self.lists[node].len()]
    }

    /// Positions (in `node`'s bag list) of neighbours of `v`.
    fn nbr_positions(&self, g: &Graph, node: usize, v: usize) -> Vec<usize> {
        self.lists[node]
            .iter()
            .enumerate()
            .filter(|&(_, &u)| g.has_edge(u, v))
            .map(|(i, _)| i)
            .collect()
    }

    fn pos(&self, node: usize, v: usize) -> usize {
        self.lists[node].binary_search(&v).expect("vertex in bag")
    }
}

const NONE: i32 = i32::MIN / 4;

/// Shared engine for stable set (`cover = false`, maximize) and vertex
/// cover (`cover = true`, minimize). Digit 1 means "chosen".
fn binary_dp(g: &Graph, t: &TreeDecomposition, cover: bool) -> Result<(usize, VertexSet)> {
    let pr = prepare(g, t, 2)?;
    let nodes = &pr.nice.nodes;
    let better = |a: i32, b: i32| -> i32 {
        if a == NONE {
            b
        } else if b == NONE {
            a
        } else if cover {
            a.min(b)
        } else {
            a.max(b)
        }
    };
    let mut tables: Vec<Vec<i32>> = Vec::with_capacity(nodes.len());
    for (i, x) in nodes.iter().enumerate() {
        let size = pr.size(i);
        let mut tab = alloc::vec![NONE; size];
        match x.kind {
            NiceKind::Leaf => tab[0] = 0,
            NiceKind::Introduce(v) => {
                let c = x.children[0];
                let p = pr.pos(i, v);
                let nb = pr.nbr_positions(g, i, v);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let child = tables[c][pr.remove_digit(s, p)];
                    if child == NONE {
                        continue;
                    }
                    let chosen = pr.digit(s, p) == 1;
                    let ok = if cover {
                        chosen || nb.iter().all(|&q| pr.digit(s, q) == 1)
                    } else {
                        !chosen || nb.iter().all(|&q| pr.digit(s, q) == 0)
                    };
                    if ok {
                        *slot = child + chosen as i32;
                    }
                }
            }
            NiceKind::Forget(v) => {
                let c = x.children[0];
                let p = pr.pos(c, v);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let a = tables[c][pr.insert_digit(s, p, 0)];
                    let b = tables[c][pr.insert_digit(s, p, 1)];
                    *slot = better(a, b);
                }
            }
            NiceKind::Join => {
                let (l, r) = (x.children[0], x.children[1]);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let (a, b) = (tables[l][s], tables[r][s]);
                    if a != NONE && b != NONE {
                        *slot = a + b - s.count_ones() as i32;
                    }
                }
            }
        }
        tables.push(tab);
    }
    let best = tables[pr.nice.root][0];
    debug_assert!(best != NONE);
    // top-down witness
    let mut chosen = VertexSet::new();
    let mut stack = alloc::vec![(pr.nice.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let x = &nodes[i];
        match x.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce(v) => {
                let p = pr.pos(i, v);
                stack.push((x.children[0], pr.remove_digit(s, p)));
            }
            NiceKind::Forget(v) => {
                let c = x.children[0];
                let p = pr.pos(c, v);
                let d = (0..2)
                    .find(|&d| tables[c][pr.insert_digit(s, p, d)] == tables[i][s])
                    .expect("forget choice");
                if d == 1 {
                    chosen.insert(v);
                }
                stack.push((c, pr.insert_digit(s, p, d)));
            }
            NiceKind::Join => {
                stack.push((x.children[0], s));
                stack.push((x.children[1], s));
            }
        }
    }
    debug_assert_eq!(chosen.len() as i32, best);
    Ok((best as usize, chosen))
}

/// Maximum stable set.
pub fn solve_stable_set(g: &Graph, t: &TreeDecomposition) -> Result<(usize, VertexSet)> {
    binary_dp(g, t, false)
}

/// Minimum vertex cover.
pub fn solve_vertex_cover(g: &Graph, t: &TreeDecomposition) -> Result<(usize, VertexSet)> {
    binary_dp(g, t, true)
}

const IN: usize = 0;
const DOM: usize = 1;
// Not in the set and not required to be dominated yet.
const FREE: usize = 2;
const INF: i32 = i32::MAX / 4;

/// Minimum dominating set.
pub fn solve_dominating_set(g: &Graph, t: &TreeDecomposition) -> Result<(usize, VertexSet)> {
    let pr = prepare(g, t, 3)?;
    let nodes = &pr.nice.nodes;
    let mut tables: Vec<Vec<i32>> = Vec::with_capacity(nodes.len());
    // For a join state, the list of (left, right) child states to consider.
    let join_splits = |s: usize, len: usize| -> Vec<(usize, usize)> {
        let doms: Vec<usize> = (0..len).filter(|&i| pr.digit(s, i) == DOM).collect();
        let mut out = Vec::with_capacity(1 << doms.len());
        for mask in 0..1usize << doms.len() {
            let (mut l, mut r) = (s, s);
            for (k, &i) in doms.iter().enumerate() {
                // the side not carrying the domination sees the vertex as free
                if mask >> k & 1 == 1 {
                    l += (FREE - DOM) * pr.pow[i];
                } else {
                    r += (FREE - DOM) * pr.pow[i];
                }
            }
            out.push((l, r));
        }
        out
    };
    for (i, x) in nodes.iter().enumerate() {
        let size = pr.size(i);
        let len = pr.lists[i].len();
        let mut tab = alloc::vec![INF; size];
        match x.kind {
            NiceKind::Leaf => tab[0] = 0,
            NiceKind::Introduce(v) => {
                let c = x.children[0];
                let p = pr.pos(i, v);
                let nb = pr.nbr_positions(g, i, v);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let base = pr.remove_digit(s, p);
                    *slot = match pr.digit(s, p) {
                        IN => {
                            let mut cs = s;
                            for &q in &nb {
                                if pr.digit(s, q) == DOM {
                                    cs += (FREE - DOM) * pr.pow[q];
                                }
                            }
                            let child = tables[c][pr.remove_digit(cs, p)];
                            if child >= INF {
                                INF
                            } else {
                                child + 1
                            }
                        }
                        DOM => {
                            if nb.iter().any(|&q| pr.digit(s, q) == IN) {
                                tables[c][base]
                            } else {
                                INF
                            }
                        }
                        _ => tables[c][base],
                    };
                }
            }
            NiceKind::Forget(v) => {
                let c = x.children[0];
                let p = pr.pos(c, v);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let a = tables[c][pr.insert_digit(s, p, IN)];
                    let b = tables[c][pr.insert_digit(s, p, DOM)];
                    *slot = a.min(b);
                }
            }
            NiceKind::Join => {
                let (l, r) = (x.children[0], x.children[1]);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let ins = (0..len).filter(|&q| pr.digit(s, q) == IN).count() as i32;
                    let mut best = INF;
                    for (ls, rs) in join_splits(s, len) {
                        let (a, b) = (tables[l][ls], tables[r][rs]);
                        if a < INF && b < INF {
                            best = best.min(a + b - ins);
                        }
                    }
                    *slot = best;
                }
            }
        }
        tables.push(tab);
    }
    let best = tables[pr.nice.root][0];
    debug_assert!(best < INF);
    let mut chosen = VertexSet::new();
    let mut stack = alloc::vec![(pr.nice.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let x = &nodes[i];
        let want = tables[i][s];
        match x.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce(v) => {
                let p = pr.pos(i, v);
                let mut cs = s;
                if pr.digit(s, p) == IN {
                    for q in pr.nbr_positions(g, i, v) {
                        if pr.digit(s, q) == DOM {
                            cs += (FREE - DOM) * pr.pow[q];
                        }
                    }
                }
                stack.push((x.children[0], pr.remove_digit(cs, p)));
            }
            NiceKind::Forget(v) => {
                let c = x.children[0];
                let p = pr.pos(c, v);
                let d = [IN, DOM]
                    .into_iter()
                    .find(|&d| tables[c][pr.insert_digit(s, p, d)] == want)
                    .expect("forget choice");
                if d == IN {
                    chosen.insert(v);
                }
                stack.push((c, pr.insert_digit(s, p, d)));
            }
            NiceKind::Join => {
                let (l, r) = (x.children[0], x.children[1]);
                let len = pr.lists[i].len();
                let ins = (0..len).filter(|&q| pr.digit(s, q) == IN).count() as i32;
                let (ls, rs) = join_splits(s, len)
                    .into_iter()
                    .find(|&(ls, rs)| {
                        let (a, b) = (tables[l][ls], tables[r][rs]);
                        a < INF && b < INF && a + b - ins == want
                    })
                    .expect("join split");
                stack.push((l, ls));
                stack.push((r, rs));
            }
        }
    }
    Ok((best as usize, chosen))
}

/// Proper `q`-coloring, if one exists. Colors are `0..q`.
pub fn solve_q_coloring(g: &Graph, t: &TreeDecomposition, q: usize) -> Result<Option<Vec<usize>>> {
    if q > MAX_Q {
        return Err(Error::cap("q-coloring colors", MAX_Q, q));
    }
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if q == 0 {
        return Ok(None);
    }
    let pr = prepare(g, t, q)?;
    let nodes = &pr.nice.nodes;
    let mut tables: Vec<Vec<bool>> = Vec::with_capacity(nodes.len());
    for (i, x) in nodes.iter().enumerate() {
        let mut tab = alloc::vec![false; pr.size(i)];
        match x.kind {
            NiceKind::Leaf => tab[0] = true,
            NiceKind::Introduce(v) => {
                let c = x.children[0];
                let p = pr.pos(i, v);
                let nb = pr.nbr_positions(g, i, v);
                for (s, slot) in tab.iter_mut().enumerate() {
                    let col = pr.digit(s, p);
                    *slot = tables[c][pr.remove_digit(s, p)]
                        && nb.iter().all(|&k| pr.digit(s, k) != col);
                }
            }
            NiceKind::Forget(v) => {
                let c = x.children[0];
                let p = pr.pos(c, v);
                for (s, slot) in tab.iter_mut().enumerate() {
                    *slot = (0..q).any(|d| tables[c][pr.insert_digit(s, p, d)]);
                }
            }
            NiceKind::Join => {
                let (l, r) = (x.children[0], x.children[1]);
                for (s, slot) in tab.iter_mut().enumerate() {
                    *slot = tables[l][s] && tables[r][s];
                }
            }
        }
        tables.push(tab);
    }
    if !tables[pr.nice.root][0] {
        return Ok(None);
    }
    let mut color = alloc::vec![usize::MAX; g.n()];
    let mut stack = alloc::vec![(pr.nice.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let x = &nodes[i];
        match x.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce(v) => {
                let p = pr.pos(i, v);
                stack.push((x.children[0], pr.remove_digit(s, p)));
            }
            NiceKind::Forget(v) => {
                let c = x.children[0];
                let p = pr.pos(c, v);
                let d = (0..q)
                    .find(|&d| tables[c][pr.insert_digit(s, p, d)])
                    .expect("forget choice");
                color[v] = d;
                stack.push((c, pr.insert_digit(s, p, d)));
            }
            NiceKind::Join => {
                stack.push((x.children[0], s));
                stack.push((x.children[1], s));
            }
        }
    }
    Ok(Some(color))
}

/// Chromatic number with an optimal coloring, trying `q = 1, 2, ..` up to
/// degeneracy + 1 (always enough).
pub fn solve_chromatic(g: &Graph, t: &TreeDecomposition) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        t.validate(g).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
        return Ok((0, Vec::new()));
    }
    let limit = g.degeneracy() + 1;
    let start = if g.m() == 0 { 1 } else { 2 };
    for q in start..=limit {
        if q > MAX_Q {
            return Err(Error::cap("q-coloring colors", MAX_Q, q));
        }
        if let Some(c) = solve_q_coloring(g, t, q)? {
            return Ok((q, c));
        }
    }
    // not reached: degeneracy + 1 colors always suffice
    Ok((limit, g.greedy_color_by_degeneracy()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;
    use crate::oracle;
    use crate::treedec::exact_treewidth;

    fn td(g: &Graph) -> TreeDecomposition {
        exact_treewidth(g).unwrap().1
    }

    fn proper(g: &Graph, c: &[usize]) -> bool {
        g.edges().iter().all(|&(u, v)| c[u] != c[v])
    }

    fn dominates(g: &Graph, d: &VertexSet) -> bool {
        g.closed_nbhd(d) == g.vertices()
    }

    #[test]
    fn c5() {
        let g = gen::cycle(5);
        let t = td(&g);
        assert_eq!(solve_stable_set(&g, &t).unwrap().0, 2);
        assert_eq!(solve_vertex_cover(&g, &t).unwrap().0, 3);
        assert_eq!(solve_dominating_set(&g, &t).unwrap().0, 2);
        assert!(solve_q_coloring(&g, &t, 2).unwrap().is_none());
        let c = solve_q_coloring(&g, &t, 3).unwrap().unwrap();
        assert!(proper(&g, &c));
    }

    #[test]
    fn petersen_and_k5() {
        let p = gen::petersen();
        let t = td(&p);
        assert_eq!(solve_stable_set(&p, &t).unwrap().0, 4);
        assert_eq!(solve_chromatic(&p, &t).unwrap().0, 3);
        let k = gen::clique(5);
        let t = td(&k);
        assert_eq!(solve_stable_set(&k, &t).unwrap().0, 1);
        assert_eq!(solve_vertex_cover(&k, &t).unwrap().0, 4);
        assert_eq!(solve_chromatic(&k, &t).unwrap().0, 5);
    }

    #[test]
    fn matches_oracle() {
        for seed in 0..40 {
            let g = gen::random_graph(10, 0.35, 1000 + seed).unwrap();
            let t = td(&g);
            let (a, s) = solve_stable_set(&g, &t).unwrap();
            assert!(g.is_stable(&s) && s.len() == a);
            assert_eq!(a, oracle::brute_stable_set(&g).unwrap());
            let (b, c) = solve_vertex_cover(&g, &t).unwrap();
            assert!(g.edges().iter().all(|&(u, v)| c.contains(u) || c.contains(v)));
            assert_eq!(a + b, g.n());
            let (d, ds) = solve_dominating_set(&g, &t).unwrap();
            assert!(dominates(&g, &ds) && ds.len() == d);
            assert_eq!(d, oracle::brute_dominating_set(&g).unwrap());
            let (chi, col) = solve_chromatic(&g, &t).unwrap();
            assert!(proper(&g, &col));
            assert_eq!(chi, oracle::brute_chromatic(&g).unwrap());
        }
    }

    #[test]
    fn works_on_wide_decompositions() {
        let g = gen::cycle(6);
        let t = TreeDecomposition::trivial(6);
        assert_eq!(solve_dominating_set(&g, &t).unwrap().0, 2);
        assert_eq!(solve_stable_set(&g, &t).unwrap().0, 3);
    }

    #[test]
    fn q_cap() {
        let g = gen::cycle(5);
        assert!(solve_q_coloring(&g, &td(&g), 9).is_err());
    }
}
