//! Tree decompositions: the data type, validation, exact treewidth,
//! elimination heuristics, nice normal form and dynamic-programming solvers.

mod exact;
mod nice;
mod solve;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::set::VertexSet;

pub use exact::{
    decomposition_from_order, exact_treewidth, exact_treewidth_capped, min_degree_order,
    min_fill_order, DEFAULT_EXACT_CAP,
};
pub use nice::{make_nice, NiceDecomposition, NiceKind};
pub use solve::{
    solve_chromatic, solve_dominating_set, solve_q_coloring, solve_stable_set,
    solve_vertex_cover, MAX_Q,
};

/// A tree decomposition `(T, χ)` of a graph on `host_n` vertices.
///
/// Node `i` of `T` carries `bags[i]`; `edges` are the tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
    pub host_n: usize,
}

/// First reason a decomposition fails to be valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoNodes,
    HostMismatch { expected: usize, found: usize },
    BadTreeEdge(usize, usize),
    NotATree,
    VertexOutOfRange(usize),
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    DisconnectedOccurrence(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoNodes => write!(f, "decomposition has no nodes"),
            Violation::HostMismatch { expected, found } => {
                write!(f, "decomposition is for {found} vertices, graph has {expected}")
            }
            Violation::BadTreeEdge(a, b) => write!(f, "tree edge ({a}, {b}) is malformed"),
            Violation::NotATree => write!(f, "decomposition graph is not a tree"),
            Violation::VertexOutOfRange(v) => write!(f, "bag mentions vertex {v} outside the graph"),
            Violation::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge ({u}, {v}) is in no bag"),
            Violation::DisconnectedOccurrence(v) => {
                write!(f, "bags containing vertex {v} do not form a subtree")
            }
        }
    }
}

impl TreeDecomposition {
    /// Single bag holding every vertex.
    pub fn trivial(n: usize) -> TreeDecomposition {
        TreeDecomposition {
            bags: alloc::vec![VertexSet::full(n)],
            edges: Vec::new(),
            host_n: n,
        }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one; `-1` when every bag is empty.
    pub fn width(&self) -> isize {
        self.max_bag() as isize - 1
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// First node whose bag contains `x`.
    pub fn node_containing(&self, x: &VertexSet) -> Option<usize> {
        self.bags.iter().position(|b| x.is_subset(b))
    }

    /// Checks the three tree-decomposition axioms and tree-ness.
    pub fn validate(&self, g: &Graph) -> Result<(), Violation> {
        validate(g, self)
    }

    /// Renames every vertex `v` to `map[v]` and sets a new host size.
    pub fn relabel(&self, map: &[usize], host_n: usize) -> TreeDecomposition {
        TreeDecomposition {
            bags: self
                .bags
                .iter()
                .map(|b| b.iter().map(|v| map[v]).collect())
                .collect(),
            edges: self.edges.clone(),
            host_n,
        }
    }

    /// Disjoint union of several decompositions' trees (no connecting edges).
    pub fn union_of(parts: &[TreeDecomposition], host_n: usize) -> (TreeDecomposition, Vec<usize>) {
        let mut out = TreeDecomposition {
            bags: Vec::new(),
            edges: Vec::new(),
            host_n,
        };
        let mut offsets = Vec::with_capacity(parts.len());
        for p in parts {
            let off = out.bags.len();
            offsets.push(off);
            out.bags.extend(p.bags.iter().cloned());
            out.edges.extend(p.edges.iter().map(|&(a, b)| (a + off, b + off)));
        }
        (out, offsets)
    }

    /// Contracts every tree edge whose one bag is a subset of the other.
    pub fn contract_redundant(&self) -> TreeDecomposition {
        nice::reduce(self)
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        format!("{} nodes, width {}", self.bags.len(), self.width())
    }
}

/// Checks that `t` is a tree decomposition of `g`; reports the first
/// violation found.
pub fn validate(g: &Graph, t: &TreeDecomposition) -> Result<(), Violation> {
    let n = g.n();
    if t.host_n != n {
        return Err(Violation::HostMismatch {
            expected: n,
            found: t.host_n,
        });
    }
    let k = t.bags.len();
    if k == 0 {
        return Err(Violation::NoNodes);
    }
    if t.edges.len() != k - 1 {
        return Err(Violation::NotATree);
    }
    for &(a, b) in &t.edges {
        if a >= k || b >= k || a == b {
            return Err(Violation::BadTreeEdge(a, b));
        }
    }
    let adj = t.adjacency();
    let mut seen = alloc::vec![false; k];
    let mut stack = alloc::vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    if count != k {
        return Err(Violation::NotATree);
    }
    for b in &t.bags {
        if let Some(v) = b.last() {
            if v >= n {
                return Err(Violation::VertexOutOfRange(v));
            }
        }
    }
    let mut occ: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (i, b) in t.bags.iter().enumerate() {
        for v in b {
            occ[v].push(i);
        }
    }
    for (v, o) in occ.iter().enumerate() {
        if o.is_empty() {
            return Err(Violation::VertexUncovered(v));
        }
    }
    for (u, v) in g.edges() {
        if !occ[u].iter().any(|&i| t.bags[i].contains(v)) {
            return Err(Violation::EdgeUncovered(u, v));
        }
    }
    // Subtree condition: nodes holding v induce a connected subgraph of T.
    let mut mark = alloc::vec![usize::MAX; k];
    for (v, o) in occ.iter().enumerate() {
        for &i in o {
            mark[i] = v;
        }
        let mut stack = alloc::vec![o[0]];
        let mut reached = 1;
        let mut visited = VertexSet::singleton(o[0]);
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if mark[y] == v && visited.insert(y) {
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != o.len() {
            return Err(Violation::DisconnectedOccurrence(v));
        }
    }
    Ok(())
}
