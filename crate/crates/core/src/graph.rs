//! Simple undirected graphs on dense ids and the primitive queries on them.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    nbrs: Vec<Vec<usize>>,
    m: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: alloc::vec![VertexSet::new(); n],
            nbrs: alloc::vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = alloc::vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let nbrs: Vec<Vec<usize>> = adj.iter().map(|s| s.to_vec()).collect();
        let m = nbrs.iter().map(|l| l.len()).sum::<usize>() / 2;
        Graph { adj, nbrs, m }
    }

    /// A copy of this graph with extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Graph::from_edges(self.n(), &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Neighbor set of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.last() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `N(X)`: vertices outside `x` with a neighbor in `x`.
    pub fn open_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(self.nbhd(x))
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(self.closed_nbhd(x))
    }

    pub(crate) fn nbhd(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(x);
        out
    }

    pub(crate) fn closed_nbhd(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N[v]`.
    pub fn closed_nbhd_of(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Neighbors of `v` inside `x`.
    pub fn nbrs_in(&self, v: usize, x: &VertexSet) -> VertexSet {
        self.adj[v].intersection(x)
    }

    /// Connected components of `G \ removed`, ordered by minimum member.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let keep = self.vertices().difference(removed);
        self.components_within(&keep)
    }

    /// Connected components of `G[keep]`, ordered by minimum member.
    pub fn components_within(&self, keep: &VertexSet) -> Vec<VertexSet> {
        let mut left = keep.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let comp = self.reach(s, &left);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `allowed` (which must contain `s`).
    pub(crate) fn reach(&self, s: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0, &self.vertices()).len() == self.n()
    }

    /// Whether `G[x]` is connected (the empty set counts as connected).
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        match x.first() {
            None => true,
            Some(s) => self.reach(s, x).len() == x.len(),
        }
    }

    pub fn is_complete_between(&self, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        self.check_set(x)?;
        self.check_set(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingSets);
        }
        Ok(x.iter().all(|v| y.is_subset(&self.adj[v])))
    }

    pub fn is_anticomplete_between(&self, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        self.check_set(x)?;
        self.check_set(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingSets);
        }
        Ok(x.iter().all(|v| self.adj[v].is_disjoint(y)))
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter()
            .all(|v| self.adj[v].intersection_len(x) + 1 == x.len())
    }

    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    /// Repeatedly removes a minimum-degree vertex (smallest id on ties).
    /// Returns the removal order and the largest degree seen at removal.
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = alloc::vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut d = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            d = d.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &u in &self.nbrs[v] {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        (order, d)
    }

    /// Standard degeneracy `d`; the strict version used for hub layers is `d + 1`.
    pub fn degeneracy(&self) -> usize {
        self.degeneracy_order().1
    }

    /// Greedy coloring along the reversed degeneracy order. Uses at most
    /// `degeneracy() + 1` colors. Returns one color per vertex.
    pub fn greedy_color_by_degeneracy(&self) -> Vec<usize> {
        let (order, _) = self.degeneracy_order();
        let mut color = alloc::vec![usize::MAX; self.n()];
        for &v in order.iter().rev() {
            let mut used = VertexSet::new();
            for &u in &self.nbrs[v] {
                if color[u] != usize::MAX {
                    used.insert(color[u]);
                }
            }
            color[v] = (0..).find(|c| !used.contains(*c)).unwrap();
        }
        color
    }

    /// A shortest path from `u` to `v` avoiding `forbidden`, as a vertex list.
    /// Shortest paths are induced.
    pub fn shortest_path(&self, u: usize, v: usize, forbidden: &VertexSet) -> Option<Vec<usize>> {
        if u >= self.n() || v >= self.n() || forbidden.contains(u) || forbidden.contains(v) {
            return None;
        }
        let allowed = self.vertices().difference(forbidden);
        self.shortest_path_within(&VertexSet::singleton(u), &VertexSet::singleton(v), &allowed)
    }

    /// A shortest path from some vertex of `from` to some vertex of `to`
    /// whose vertices all lie in `allowed ∪ from ∪ to`.
    pub fn shortest_path_within(
        &self,
        from: &VertexSet,
        to: &VertexSet,
        allowed: &VertexSet,
    ) -> Option<Vec<usize>> {
        let n = self.n();
        let mut prev = alloc::vec![usize::MAX; n];
        let mut seen = from.clone();
        let mut queue: VecDeque<usize> = from.iter().collect();
        let passable = allowed.union(to);
        while let Some(x) = queue.pop_front() {
            if to.contains(x) {
                let mut path = alloc::vec![x];
                let mut c = x;
                while prev[c] != usize::MAX {
                    c = prev[c];
                    path.push(c);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.nbrs[x] {
                if passable.contains(y) && !seen.contains(y) {
                    seen.insert(y);
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Whether `path` is an induced path of this graph.
    pub fn is_induced_path(&self, path: &[usize]) -> bool {
        let set: VertexSet = path.iter().copied().collect();
        if set.len() != path.len() {
            return false;
        }
        for (i, &a) in path.iter().enumerate() {
            for (j, &b) in path.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `cycle` (cyclic vertex list) is a hole: induced, length ≥ 4.
    pub fn is_hole(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 4 || cycle.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let set: VertexSet = cycle.iter().copied().collect();
        if set.len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(cycle[i], cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// The subgraph induced on `x`, relabelled to `0..|x|` in increasing order.
    pub fn induced(&self, x: &VertexSet) -> Induced {
        let to_parent = x.to_vec();
        let mut index = alloc::vec![usize::MAX; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            index[v] = i;
        }
        let adj = to_parent
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&u| x.contains(u))
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        Induced {
            graph: Graph::from_adjacency(adj),
            to_parent,
        }
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n).difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Disjoint union, with `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), &edges).expect("valid ids")
    }
}

/// An induced subgraph together with the map back to parent ids.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `to_parent[i]` is the parent id of local vertex `i` (increasing).
    pub to_parent: Vec<usize>,
}

impl Induced {
    pub fn parent(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    pub fn local(&self, v: usize) -> Option<usize> {
        self.to_parent.binary_search(&v).ok()
    }

    pub fn lift(&self, x: &VertexSet) -> VertexSet {
        x.iter().map(|v| self.to_parent[v]).collect()
    }

    pub fn lift_list(&self, x: &[usize]) -> Vec<usize> {
        x.iter().map(|&v| self.to_parent[v]).collect()
    }

    /// Local ids of the members of `x` that lie in this subgraph.
    pub fn localize(&self, x: &VertexSet) -> VertexSet {
        x.iter().filter_map(|v| self.local(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn neighborhoods() {
        let c4 = generators::cycle(4);
        assert_eq!(c4.open_neighborhood(&set(&[0])).unwrap(), set(&[1, 3]));
        let k5 = generators::clique(5);
        assert_eq!(k5.open_neighborhood(&set(&[0])).unwrap(), set(&[1, 2, 3, 4]));
        let c6 = generators::cycle(6);
        assert_eq!(c6.open_neighborhood(&set(&[0, 3])).unwrap(), set(&[1, 2, 4, 5]));
        assert_eq!(c6.closed_neighborhood(&set(&[0])).unwrap(), set(&[0, 1, 5]));
        assert!(c6.open_neighborhood(&set(&[6])).is_err());
    }

    #[test]
    fn components_examples() {
        let c6 = generators::cycle(6);
        assert_eq!(c6.components(&set(&[0, 3])), [set(&[1, 2]), set(&[4, 5])]);
        assert_eq!(c6.components(&VertexSet::new()).len(), 1);
        let k5 = generators::clique(5);
        assert!(k5.components(&k5.vertices()).is_empty());
    }

    #[test]
    fn complete_anticomplete() {
        let k33 = generators::complete_bipartite(3, 3);
        assert!(k33.is_complete_between(&set(&[0, 1, 2]), &set(&[3, 4, 5])).unwrap());
        let two = generators::path(2).disjoint_union(&generators::path(2));
        assert!(two.is_anticomplete_between(&set(&[0, 1]), &set(&[2, 3])).unwrap());
        let c4 = generators::cycle(4);
        assert!(c4.is_anticomplete_between(&set(&[0]), &set(&[2])).unwrap());
        assert!(!c4.is_complete_between(&set(&[0]), &set(&[2])).unwrap());
        assert_eq!(
            c4.is_complete_between(&set(&[0, 1]), &set(&[1])),
            Err(Error::OverlappingSets)
        );
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(generators::path(7).degeneracy(), 1);
        assert_eq!(generators::star(5).degeneracy(), 1);
        assert_eq!(generators::clique(5).degeneracy(), 4);
        assert_eq!(generators::petersen().degeneracy(), 3);
    }

    #[test]
    fn coloring_examples() {
        let count = |g: &Graph| {
            let c = g.greedy_color_by_degeneracy();
            for (u, v) in g.edges() {
                assert_ne!(c[u], c[v]);
            }
            c.iter().copied().collect::<VertexSet>().len()
        };
        assert!(count(&generators::path(9)) <= 2);
        assert_eq!(count(&generators::clique(5)), 5);
        assert_eq!(count(&generators::cycle(5)), 3);
    }

    #[test]
    fn shortest_paths() {
        let c6 = generators::cycle(6);
        assert_eq!(c6.shortest_path(0, 3, &VertexSet::new()).unwrap().len(), 4);
        let two = generators::path(2).disjoint_union(&generators::path(2));
        assert!(two.shortest_path(0, 3, &VertexSet::new()).is_none());
        assert_eq!(c6.shortest_path(0, 1, &set(&[2, 3, 4, 5])).unwrap(), [0, 1]);
    }

    #[test]
    fn induced_relabels() {
        let c6 = generators::cycle(6);
        let sub = c6.induced(&set(&[1, 2, 3, 5]));
        assert_eq!(sub.graph.edges(), [(0, 1), (1, 2)]);
        assert_eq!(sub.lift(&set(&[0, 3])), set(&[1, 5]));
        assert_eq!(sub.local(5), Some(3));
        assert_eq!(sub.local(4), None);
    }
}
