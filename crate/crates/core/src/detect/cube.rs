use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::set::VertexSet;

/// A cube partition: `blocks` are the cliques replacing the cube vertices
/// `a_1..a_6, b_1, b_2` (same roles as the cube certificate), `v2` is a
/// clique complete to all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubePartition {
    pub blocks: [VertexSet; 8],
    pub v2: VertexSet,
}

fn cube_edges() -> Vec<(usize, usize)> {
    let mut es: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    for i in 0..3 {
        es.push((6, 2 * i));
        es.push((7, 2 * i + 1));
    }
    es
}

impl CubePartition {
    /// Checks the definition against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        for b in self.blocks.iter().chain([&self.v2]) {
            if !seen.is_disjoint(b) || !g.is_clique(b) {
                return false;
            }
            seen.union_with(b);
        }
        if seen != g.vertices() || self.blocks.iter().any(|b| b.is_empty()) {
            return false;
        }
        let es = cube_edges();
        for i in 0..8 {
            if !g.is_complete_between(&self.blocks[i], &self.v2).unwrap_or(false) {
                return false;
            }
            for j in i + 1..8 {
                let (x, y) = (&self.blocks[i], &self.blocks[j]);
                let want = es.contains(&(i, j)) || es.contains(&(j, i));
                let ok = if want {
                    g.is_complete_between(x, y)
                } else {
                    g.is_anticomplete_between(x, y)
                };
                if !ok.unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds a cube partition of `g` if one exists.
///
/// `V_2` must be the set of universal vertices and the blocks are the
/// true-twin classes of the rest, so the partition is unique when it exists.
pub fn find_cube_partition(g: &Graph) -> Option<CubePartition> {
    let n = g.n();
    let v2: VertexSet = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    let mut classes: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for v in g.vertices().difference(&v2).iter() {
        classes.entry(g.closed_nbhd_of(v)).or_default().insert(v);
    }
    if classes.len() != 8 {
        return None;
    }
    let mut blocks: Vec<VertexSet> = classes.into_values().collect();
    blocks.sort_by_key(|b| b.first());
    let rep: Vec<usize> = blocks.iter().map(|b| b.first().unwrap()).collect();
    let q: Vec<Vec<usize>> = (0..8)
        .map(|i| (0..8).filter(|&j| j != i && g.has_edge(rep[i], rep[j])).collect())
        .collect();
    if q.iter().any(|l| l.len() != 3) {
        return None;
    }
    // 2-colour the quotient; a 3-regular bipartite graph on 8 vertices is the cube
    let mut side = [usize::MAX; 8];
    side[0] = 0;
    let mut stack = alloc::vec![0];
    while let Some(x) = stack.pop() {
        for &y in &q[x] {
            if side[y] == usize::MAX {
                side[y] = 1 - side[x];
                stack.push(y);
            } else if side[y] == side[x] {
                return None;
            }
        }
    }
    if side.contains(&usize::MAX) {
        return None;
    }
    let b1 = 0;
    let b2 = (0..8).find(|&x| side[x] == 1 && !q[b1].contains(&x))?;
    // walk the 6-cycle left after removing the antipodal pair
    let mut order = alloc::vec![q[b1][0]];
    while order.len() < 6 {
        let cur = *order.last().unwrap();
        let prev = if order.len() >= 2 { order[order.len() - 2] } else { usize::MAX };
        let next = q[cur].iter().copied().find(|&y| y != b1 && y != b2 && y != prev)?;
        order.push(next);
    }
    let mut ids = order;
    ids.push(b1);
    ids.push(b2);
    let out = CubePartition {
        blocks: core::array::from_fn(|i| blocks[ids[i]].clone()),
        v2,
    };
    out.verify(g).then_some(out)
}
