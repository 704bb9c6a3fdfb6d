use alloc::vec::Vec;

use super::{TreeDecomposition, Violation};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    /// Empty bag, no children.
    Leaf,
    /// Bag = child bag plus the vertex.
    Introduce(usize),
    /// Bag = child bag minus the vertex.
    Forget(usize),
    /// Two children with the same bag.
    Join,
}

#[derive(Clone, Debug)]
pub struct NiceNode {
    pub kind: NiceKind,
    pub bag: VertexSet,
    pub children: Vec<usize>,
}

/// Rooted nice decomposition; the root bag is empty and every leaf bag is
/// empty. Children always precede their parent in `nodes`.
#[derive(Clone, Debug)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    pub host_n: usize,
}

impl NiceDecomposition {
    pub fn width(&self) -> isize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The underlying (unrooted) tree decomposition.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let mut edges = Vec::new();
        for (i, x) in self.nodes.iter().enumerate() {
            for &c in &x.children {
                edges.push((c, i));
            }
        }
        TreeDecomposition {
            bags: self.nodes.iter().map(|x| x.bag.clone()).collect(),
            edges,
            host_n: self.host_n,
        }
    }

    /// Checks that every node obeys the rule of its kind.
    pub fn check_shape(&self) -> bool {
        if !self.nodes[self.root].bag.is_empty() {
            return false;
        }
        self.nodes.iter().enumerate().all(|(i, x)| {
            if x.children.iter().any(|&c| c >= i) {
                return false;
            }
            let child = |k: usize| &self.nodes[x.children[k]].bag;
            match x.kind {
                NiceKind::Leaf => x.children.is_empty() && x.bag.is_empty(),
                NiceKind::Introduce(v) => {
                    x.children.len() == 1 && !child(0).contains(v) && {
                        let mut b = child(0).clone();
                        b.insert(v);
                        b == x.bag
                    }
                }
                NiceKind::Forget(v) => {
                    x.children.len() == 1 && child(0).contains(v) && {
                        let mut b = child(0).clone();
                        b.remove(v);
                        b == x.bag
                    }
                }
                NiceKind::Join => {
                    x.children.len() == 2 && *child(0) == x.bag && *child(1) == x.bag
                }
            }
        })
    }
}

/// Contracts tree edges whose one bag contains the other, leaving a
/// decomposition with at most `max(n, 1)` nodes.
pub(super) fn reduce(t: &TreeDecomposition) -> TreeDecomposition {
    let k = t.bags.len();
    let mut bags: Vec<Option<VertexSet>> = t.bags.iter().cloned().map(Some).collect();
    let mut adj: Vec<VertexSet> = alloc::vec![VertexSet::new(); k];
    for &(a, b) in &t.edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    loop {
        let mut merged = false;
        for x in 0..k {
            if bags[x].is_none() {
                continue;
            }
            let target = adj[x].iter().find(|&y| {
                bags[x].as_ref().unwrap().is_subset(bags[y].as_ref().unwrap())
            });
            if let Some(y) = target {
                // fold x into y
                let nx = adj[x].clone();
                for z in &nx {
                    adj[z].remove(x);
                    if z != y {
                        adj[z].insert(y);
                        adj[y].insert(z);
                    }
                }
                adj[x].clear();
                bags[x] = None;
                merged = true;
            }
        }
        if !merged {
            break;
        }
    }
    let mut id = alloc::vec![usize::MAX; k];
    let mut out_bags = Vec::new();
    for x in 0..k {
        if let Some(b) = &bags[x] {
            id[x] = out_bags.len();
            out_bags.push(b.clone());
        }
    }
    let mut edges = Vec::new();
    for x in 0..k {
        for y in &adj[x] {
            if x < y {
                edges.push((id[x], id[y]));
            }
        }
    }
    TreeDecomposition {
        bags: out_bags,
        edges,
        host_n: t.host_n,
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: VertexSet, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Walks from a node with bag `from` to one with bag `to`.
    fn morph(&mut self, mut top: usize, to: &VertexSet) -> usize {
        let from = self.nodes[top].bag.clone();
        let mut bag = from.clone();
        for v in from.difference(to).iter() {
            bag.remove(v);
            top = self.push(NiceKind::Forget(v), bag.clone(), alloc::vec![top]);
        }
        for v in to.difference(&from).iter() {
            bag.insert(v);
            top = self.push(NiceKind::Introduce(v), bag.clone(), alloc::vec![top]);
        }
        top
    }
}

/// Converts a valid decomposition into nice form with the same width.
pub fn make_nice(g: &Graph, t: &TreeDecomposition) -> Result<NiceDecomposition, Violation> {
    t.validate(g)?;
    let r = reduce(t);
    let k = r.bags.len();
    let adj = r.adjacency();
    // iterative post-order from node 0
    let mut parent = alloc::vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    let mut stack = alloc::vec![0usize];
    let mut seen = alloc::vec![false; k];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut b = Builder { nodes: Vec::new() };
    let mut top = alloc::vec![usize::MAX; k];
    for &x in order.iter().rev() {
        let bag = &r.bags[x];
        let children: Vec<usize> = adj[x].iter().copied().filter(|&y| parent[y] == x).collect();
        let mut subs: Vec<usize> = children.iter().map(|&c| b.morph(top[c], bag)).collect();
        let node = if subs.is_empty() {
            let leaf = b.push(NiceKind::Leaf, VertexSet::new(), Vec::new());
            b.morph(leaf, bag)
        } else {
            let mut acc = subs.remove(0);
            for s in subs {
                acc = b.push(NiceKind::Join, bag.clone(), alloc::vec![acc, s]);
            }
            acc
        };
        top[x] = node;
    }
    let root = b.morph(top[0], &VertexSet::new());
    let nice = NiceDecomposition {
        nodes: b.nodes,
        root,
        host_n: t.host_n,
    };
    let w = t.width().max(0) as usize;
    debug_assert!(nice.len() <= 4 * (w + 2) * g.n().max(1));
    Ok(nice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;
    use crate::treedec::{decomposition_from_order, min_fill_order};

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let nice = make_nice(&g, &TreeDecomposition::trivial(1)).unwrap();
        assert!(nice.check_shape());
        assert_eq!(nice.len(), 3);
        assert_eq!(nice.nodes[0].kind, NiceKind::Leaf);
        assert_eq!(nice.nodes[1].kind, NiceKind::Introduce(0));
        assert_eq!(nice.nodes[2].kind, NiceKind::Forget(0));
    }

    #[test]
    fn preserves_width_and_validity() {
        for seed in 0..30 {
            let g = gen::random_graph(12, 0.3, seed).unwrap();
            let t = decomposition_from_order(&g, &min_fill_order(&g));
            let nice = make_nice(&g, &t).unwrap();
            assert!(nice.check_shape());
            assert_eq!(nice.width(), t.width());
            assert_eq!(nice.to_tree_decomposition().validate(&g), Ok(()));
            let w = t.width().max(0) as usize;
            assert!(nice.len() <= 4 * (w + 2) * g.n());
        }
    }

    #[test]
    fn rejects_invalid() {
        let g = gen::cycle(4);
        let t = TreeDecomposition {
            bags: alloc::vec![[0, 1].into_iter().collect(), [2, 3].into_iter().collect()],
            edges: alloc::vec![(0, 1)],
            host_n: 4,
        };
        assert!(make_nice(&g, &t).is_err());
    }
}
