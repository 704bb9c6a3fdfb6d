//! Canonical star separations, the order `≤_A`, central bags, and the two
//! ways of extending decompositions of smaller pieces to the whole graph.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::detect::{self, Caps};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::treedec::TreeDecomposition;

/// `(A(v), C(v), B(v))` for an unbalanced vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSeparation {
    pub v: usize,
    pub a: VertexSet,
    pub c: VertexSet,
    pub b: VertexSet,
}

impl StarSeparation {
    /// `B ∪ C`, the closure of `B` at `v`.
    pub fn closure(&self) -> VertexSet {
        self.b.union(&self.c)
    }
}

/// `N[D] ∪ {v}`.
pub fn v_closure(g: &Graph, v: usize, d: &VertexSet) -> VertexSet {
    let mut out = g.nbhd(d);
    out.union_with(d);
    out.insert(v);
    out
}

/// The canonical star separation of `v`. Fails when `v` is balanced.
pub fn star_separation(g: &Graph, v: usize) -> Result<StarSeparation> {
    g.check_vertex(v)?;
    let n = g.n();
    let b = g
        .components(&g.closed_nbhd_of(v))
        .into_iter()
        .find(|d| 2 * d.len() > n)
        .ok_or_else(|| Error::Precondition(format!("vertex {v} is balanced")))?;
    let mut c = g.nbhd(&b);
    c.insert(v);
    let a = g.vertices().difference(&b).difference(&c);
    Ok(StarSeparation { v, a, c, b })
}

fn twins(x: &StarSeparation, y: &StarSeparation) -> bool {
    if x.b != y.b {
        return false;
    }
    let mut cx = x.c.clone();
    cx.remove(x.v);
    let mut cy = y.c.clone();
    cy.remove(y.v);
    cx == cy
}

/// `x ≤_A y` with the order by vertex id.
fn leq(x: &StarSeparation, y: &StarSeparation) -> bool {
    if x.v == y.v {
        return true;
    }
    if twins(x, y) {
        x.v < y.v
    } else {
        x.a.contains(y.v)
    }
}

fn nonadjacent_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{u} and {v} must be distinct and nonadjacent")));
    }
    Ok(())
}

/// Star twins: same `B` and `C(u) \ {u} = C(v) \ {v}`.
pub fn are_star_twins(g: &Graph, u: usize, v: usize) -> Result<bool> {
    nonadjacent_pair(g, u, v)?;
    Ok(twins(&star_separation(g, u)?, &star_separation(g, v)?))
}

/// `x ≤_A y`. Requires `x, y` unbalanced and, when distinct, nonadjacent.
pub fn leq_a(g: &Graph, x: usize, y: usize) -> Result<bool> {
    if x != y {
        nonadjacent_pair(g, x, y)?;
    }
    Ok(leq(&star_separation(g, x)?, &star_separation(g, y)?))
}

/// Separations of the members of `s` in increasing order, after checking
/// that `s` is a stable set of unbalanced vertices.
pub fn separations(g: &Graph, s: &VertexSet) -> Result<Vec<StarSeparation>> {
    g.check_set(s)?;
    if !g.is_stable(s) {
        return Err(Error::Precondition("S is not stable".to_string()));
    }
    s.iter().map(|v| star_separation(g, v)).collect()
}

fn core_of(seps: &[StarSeparation]) -> VertexSet {
    seps.iter()
        .filter(|x| !seps.iter().any(|y| y.v != x.v && leq(y, x)))
        .map(|x| x.v)
        .collect()
}

/// The `≤_A`-minimal elements of `s`.
pub fn core(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Ok(core_of(&separations(g, s)?))
}

/// `β(S)` with its core and the separations of every member of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralBag {
    pub beta: VertexSet,
    pub core: VertexSet,
    pub separations: Vec<StarSeparation>,
}

impl CentralBag {
    pub fn separation(&self, v: usize) -> Option<&StarSeparation> {
        self.separations.iter().find(|s| s.v == v)
    }

    /// Components of `G \ β(S)`.
    pub fn outside_components(&self, g: &Graph) -> Vec<VertexSet> {
        g.components(&self.beta)
    }
}

/// `β(S) = ⋂_{v ∈ Core(S)} (B(v) ∪ C(v))`, with `β(∅) = V(G)`.
pub fn central_bag(g: &Graph, s: &VertexSet) -> Result<CentralBag> {
    let seps = separations(g, s)?;
    let core = core_of(&seps);
    let mut beta = g.vertices();
    for x in seps.iter().filter(|x| core.contains(x.v)) {
        beta.intersect_with(&x.closure());
    }
    Ok(CentralBag {
        beta,
        core,
        separations: seps,
    })
}

/// The graph `H` built around `v`: the non-hub neighbours of `v` followed by
/// one vertex `d_i` per component `D_i` of `G \ N[v]`, with
/// `N_H(d_i) = N(D_i) \ Hub(G)`.
#[derive(Clone, Debug)]
pub struct ContractionGraph {
    pub v: usize,
    pub graph: Graph,
    /// `H` vertex `i < base.len()` is vertex `base[i]` of `G`.
    pub base: Vec<usize>,
    /// `D_i`, contracted to `H` vertex `base.len() + i`.
    pub components: Vec<VertexSet>,
    /// `N(v) ∩ Hub(G)`.
    pub hub_nbrs: VertexSet,
}

impl ContractionGraph {
    pub fn d(&self, i: usize) -> usize {
        self.base.len() + i
    }

    /// `N_H(d_i)` in `G` ids.
    pub fn attachments(&self, i: usize) -> VertexSet {
        self.graph.neighbors(self.d(i)).iter().map(|&x| self.base[x]).collect()
    }

    /// `H ∪ {v}` with `v` as the last vertex, adjacent to every base vertex.
    pub fn with_center(&self) -> Graph {
        let k = self.graph.n();
        let mut es = self.graph.edges();
        es.extend((0..self.base.len()).map(|i| (i, k)));
        Graph::from_edges(k + 1, &es).expect("valid edges")
    }
}

/// `H` for `v`, computing `Hub(G)` first.
pub fn build_contraction(g: &Graph, v: usize, caps: &Caps) -> Result<ContractionGraph> {
    let hubs = detect::hubs(g, caps)?;
    contraction_with_hubs(g, v, &hubs)
}

/// `H` for `v` with a known hub set.
pub fn contraction_with_hubs(g: &Graph, v: usize, hubs: &VertexSet) -> Result<ContractionGraph> {
    g.check_vertex(v)?;
    let nv = g.closed_nbhd_of(v);
    let mut base_set = g.adj(v).clone();
    base_set.difference_with(hubs);
    let base = base_set.to_vec();
    let components = g.components(&nv);
    let k = base.len();
    let pos = |x: usize| base.binary_search(&x).ok();
    let mut es = Vec::new();
    for (i, &x) in base.iter().enumerate() {
        for &y in g.neighbors(x) {
            if let Some(j) = pos(y) {
                if i < j {
                    es.push((i, j));
                }
            }
        }
    }
    for (i, d) in components.iter().enumerate() {
        for x in g.nbhd(d).intersection(&base_set).iter() {
            es.push((pos(x).unwrap(), k + i));
        }
    }
    let graph = Graph::from_edges(k + components.len(), &es)?;
    Ok(ContractionGraph {
        v,
        graph,
        base,
        components,
        hub_nbrs: g.adj(v).intersection(hubs),
    })
}

fn check_td(g: &Graph, t: &TreeDecomposition, what: &str) -> Result<()> {
    t.validate(g)
        .map_err(|e| Error::InvalidDecomposition(format!("{what}: {e}")))
}

/// Joins `T_0` (for `H`) and one decomposition per `D_i` (on the local ids
/// of `G[D_i]`) into a decomposition of `G`.
///
/// `T_0` bags lose the `d_i`, gain `N_Hub(v) ∪ {v}` and `N_H(d_i)` for every
/// `d_i` they held; `T_i` bags gain `N_H(d_i) ∪ N_Hub(v)`. `T_i` hangs off the
/// first `T_0` node holding `d_i`.
pub fn extend_neighborhood(
    g: &Graph,
    h: &ContractionGraph,
    t0: &TreeDecomposition,
    parts: &[TreeDecomposition],
) -> Result<TreeDecomposition> {
    check_td(&h.graph, t0, "decomposition of H")?;
    if parts.len() != h.components.len() {
        return Err(Error::InvalidParameter(format!(
            "{} component decompositions for {} components",
            parts.len(),
            h.components.len()
        )));
    }
    let attach: Vec<VertexSet> = (0..h.components.len()).map(|i| h.attachments(i)).collect();
    let mut extra = h.hub_nbrs.clone();
    extra.insert(h.v);
    let k = h.base.len();
    let mut bags = Vec::with_capacity(t0.len());
    for b in &t0.bags {
        let mut out = extra.clone();
        for x in b {
            if x < k {
                out.insert(h.base[x]);
            } else {
                out.union_with(&attach[x - k]);
            }
        }
        bags.push(out);
    }
    let mut edges = t0.edges.clone();
    for (i, (d, t)) in h.components.iter().zip(parts).enumerate() {
        let ind = g.induced(d);
        check_td(&ind.graph, t, "component decomposition")?;
        let anchor = t0
            .bags
            .iter()
            .position(|b| b.contains(k + i))
            .ok_or_else(|| Error::InvalidDecomposition(format!("no bag of H holds d_{i}")))?;
        let off = bags.len();
        let mut add = attach[i].clone();
        add.union_with(&h.hub_nbrs);
        for b in &t.bags {
            let mut out = ind.lift(b);
            out.union_with(&add);
            bags.push(out);
        }
        edges.extend(t.edges.iter().map(|&(a, b)| (a + off, b + off)));
        edges.push((anchor, off));
    }
    Ok(TreeDecomposition {
        bags,
        edges,
        host_n: g.n(),
    })
}

/// Where a component `D_i` of `G \ β(S)` was attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Anchor {
    /// `r(D_i)`.
    pub r: usize,
    /// `r(D_i)` was found in `Core(S)` rather than only in `S`.
    pub from_core: bool,
    /// Node of `T_β` the component hangs from.
    pub node: usize,
}

/// Joins `T_β` (on the local ids of `G[β(S)]`) and one decomposition per
/// component of `G \ β(S)` (in the order of
/// [`CentralBag::outside_components`], local ids) into a decomposition of `G`.
///
/// `T_β` bags gain `C(v)` for each core vertex `v` they hold; `T_i` bags gain
/// `C(r(D_i))` and hang off the first `T_β` node holding `r(D_i)`.
pub fn extend_tree(
    g: &Graph,
    cb: &CentralBag,
    t_beta: &TreeDecomposition,
    parts: &[TreeDecomposition],
) -> Result<(TreeDecomposition, Vec<Anchor>)> {
    let bind = g.induced(&cb.beta);
    check_td(&bind.graph, t_beta, "decomposition of the central bag")?;
    let comps = cb.outside_components(g);
    if parts.len() != comps.len() {
        return Err(Error::InvalidParameter(format!(
            "{} component decompositions for {} components",
            parts.len(),
            comps.len()
        )));
    }
    let mut bags = Vec::with_capacity(t_beta.len());
    let mut lifted = Vec::with_capacity(t_beta.len());
    for b in &t_beta.bags {
        let lb = bind.lift(b);
        let mut out = lb.clone();
        for v in lb.intersection(&cb.core).iter() {
            out.union_with(&cb.separation(v).expect("core vertex has a separation").c);
        }
        bags.push(out);
        lifted.push(lb);
    }
    let mut edges = t_beta.edges.clone();
    let mut anchors = Vec::with_capacity(comps.len());
    for (i, (d, t)) in comps.iter().zip(parts).enumerate() {
        let ind = g.induced(d);
        check_td(&ind.graph, t, "component decomposition")?;
        let inside = |x: &&StarSeparation| d.is_subset(&x.a);
        let (sep, from_core) = match cb.separations.iter().filter(|x| cb.core.contains(x.v)).find(inside) {
            Some(x) => (x, true),
            None => (
                cb.separations
                    .iter()
                    .find(inside)
                    .ok_or_else(|| Error::Precondition(format!("component {i} lies in no A-side")))?,
                false,
            ),
        };
        let node = lifted
            .iter()
            .position(|b| b.contains(sep.v))
            .ok_or_else(|| Error::InvalidDecomposition(format!("no bag of the central bag holds {}", sep.v)))?;
        let off = bags.len();
        for b in &t.bags {
            let mut out = ind.lift(b);
            out.union_with(&sep.c);
            bags.push(out);
        }
        edges.extend(t.edges.iter().map(|&(a, b)| (a + off, b + off)));
        edges.push((node, off));
        anchors.push(Anchor {
            r: sep.v,
            from_core,
            node,
        });
    }
    Ok((
        TreeDecomposition {
            bags,
            edges,
            host_n: g.n(),
        },
        anchors,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;
    use crate::treedec::exact_treewidth;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn separations_on_a_path() {
        let p = gen::path(7);
        let s = star_separation(&p, 0).unwrap();
        assert_eq!((s.a, s.c, s.b), (set(&[]), set(&[0, 1]), set(&[2, 3, 4, 5, 6])));
        let s = star_separation(&p, 1).unwrap();
        assert_eq!((s.a, s.c, s.b), (set(&[0]), set(&[1, 2]), set(&[3, 4, 5, 6])));
        assert!(star_separation(&gen::star(4), 1).is_err());
        assert!(star_separation(&p, 3).is_err());
    }

    // 0 and 1 see exactly {2}; 2 starts the path 2..9
    fn twin_graph() -> Graph {
        let mut es = alloc::vec![(0, 2), (1, 2)];
        es.extend((2..9).map(|i| (i, i + 1)));
        Graph::from_edges(10, &es).unwrap()
    }

    #[test]
    fn twins_and_order() {
        let g = twin_graph();
        assert!(are_star_twins(&g, 0, 1).unwrap());
        assert!(leq_a(&g, 0, 1).unwrap());
        assert!(!leq_a(&g, 1, 0).unwrap());
        assert!(leq_a(&g, 9, 9).unwrap());
        assert!(are_star_twins(&g, 0, 0).is_err());
        let p = gen::path(9);
        assert!(!are_star_twins(&p, 0, 2).unwrap());
        // y = 0 in A(x) for x = 2 on P_9
        assert!(leq_a(&p, 2, 0).unwrap());
        assert!(!leq_a(&p, 0, 2).unwrap());
        assert_eq!(core(&g, &set(&[0, 1])).unwrap(), set(&[0]));
        assert!(core(&g, &set(&[2, 3])).is_err());
    }

    #[test]
    fn central_bags() {
        let p = gen::path(7);
        let cb = central_bag(&p, &VertexSet::new()).unwrap();
        assert_eq!(cb.beta, p.vertices());
        let cb = central_bag(&p, &set(&[1])).unwrap();
        assert_eq!(cb.beta, set(&[1, 2, 3, 4, 5, 6]));
        // two core vertices at both ends of a long path
        let q = gen::path(11);
        let cb = central_bag(&q, &set(&[1, 9])).unwrap();
        assert_eq!(cb.core, set(&[1, 9]));
        let want = star_separation(&q, 1).unwrap().closure().intersection(&star_separation(&q, 9).unwrap().closure());
        assert_eq!(cb.beta, want);
        assert_eq!(cb.beta, set(&[1, 2, 3, 4, 5, 6, 7, 8, 9]));
    }

    #[test]
    fn contraction_of_cycle() {
        let h = contraction_with_hubs(&gen::cycle(6), 0, &VertexSet::new()).unwrap();
        assert_eq!(h.base, [1, 5]);
        assert_eq!(h.components, [set(&[2, 3, 4])]);
        assert_eq!(h.graph.n(), 3);
        assert_eq!(h.graph.edges(), [(0, 2), (1, 2)]);
        let single = build_contraction(&Graph::empty(1), 0, &Caps::default()).unwrap();
        assert_eq!(single.graph.n(), 0);
        // the hub 5 next to 0 stays out of H
        let mut es = gen::cycle(5).edges();
        es.extend([(5, 0), (5, 1), (5, 3), (6, 5)]);
        let g = Graph::from_edges(7, &es).unwrap();
        let h = build_contraction(&g, 6, &Caps::default()).unwrap();
        assert!(h.base.is_empty());
        assert_eq!(h.hub_nbrs, set(&[5]));
    }

    #[test]
    fn neighborhood_extension_on_cycle() {
        let g = gen::cycle(6);
        let h = contraction_with_hubs(&g, 0, &VertexSet::new()).unwrap();
        let (_, t0) = exact_treewidth(&h.graph).unwrap();
        let parts: Vec<_> = h
            .components
            .iter()
            .map(|d| exact_treewidth(&g.induced(d).graph).unwrap().1)
            .collect();
        let t = extend_neighborhood(&g, &h, &t0, &parts).unwrap();
        assert_eq!(t.validate(&g), Ok(()));
        // m = 0: a closed neighbourhood
        let star = gen::star(3);
        let h = contraction_with_hubs(&star, 0, &VertexSet::new()).unwrap();
        let (_, t0) = exact_treewidth(&h.graph).unwrap();
        let t = extend_neighborhood(&star, &h, &t0, &[]).unwrap();
        assert_eq!(t.validate(&star), Ok(()));
        assert!(t.bags.iter().zip(&t0.bags).all(|(b, b0)| b.len() == b0.len() + 1));
    }

    #[test]
    fn tree_extension_on_path() {
        let p = gen::path(7);
        let cb = central_bag(&p, &set(&[1])).unwrap();
        let tb = exact_treewidth(&p.induced(&cb.beta).graph).unwrap().1;
        let comps = cb.outside_components(&p);
        assert_eq!(comps, [set(&[0])]);
        let parts: Vec<_> = comps.iter().map(|d| exact_treewidth(&p.induced(d).graph).unwrap().1).collect();
        let (t, anchors) = extend_tree(&p, &cb, &tb, &parts).unwrap();
        assert_eq!(t.validate(&p), Ok(()));
        assert_eq!(anchors.len(), 1);
        assert_eq!(anchors[0].r, 1);
        assert!(anchors[0].from_core);
        // m = 0
        let cb = central_bag(&p, &VertexSet::new()).unwrap();
        let tb = exact_treewidth(&p).unwrap().1;
        let (t, _) = extend_tree(&p, &cb, &tb, &[]).unwrap();
        assert_eq!(t, tb);
    }

    #[test]
    fn bad_inputs() {
        let p = gen::path(7);
        let cb = central_bag(&p, &set(&[1])).unwrap();
        let tb = TreeDecomposition::trivial(6);
        assert!(extend_tree(&p, &cb, &tb, &[]).is_err());
        assert!(extend_tree(&p, &cb, &TreeDecomposition::trivial(3), &[TreeDecomposition::trivial(1)]).is_err());
        assert!(central_bag(&p, &set(&[0, 1])).is_err());
    }
}
