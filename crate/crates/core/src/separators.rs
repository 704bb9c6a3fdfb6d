//! Minimal separators, clique cutsets, potential maximal cliques,
//! chordal completions and structured decompositions.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::treedec::TreeDecomposition;

/// Vertex cap for [`enumerate_minimal_separators`].
pub const MAX_SEPARATOR_N: usize = 20;

/// A minimal separator with its full components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorRecord {
    pub sep: VertexSet,
    pub full_components: Vec<VertexSet>,
}

/// Components `D` of `G \ x` with `N(D) = x`.
pub fn full_components(g: &Graph, x: &VertexSet) -> Vec<VertexSet> {
    g.components(x)
        .into_iter()
        .filter(|d| g.nbhd(d) == *x)
        .collect()
}

pub fn is_minimal_separator(g: &Graph, x: &VertexSet) -> bool {
    full_components(g, x).len() >= 2
}

pub fn separator_record(g: &Graph, x: &VertexSet) -> Option<SeparatorRecord> {
    let full = full_components(g, x);
    (full.len() >= 2).then(|| SeparatorRecord {
        sep: x.clone(),
        full_components: full,
    })
}

/// All minimal separators, sorted.
///
/// Seeds with `N(C)` for every component `C` of `G \ N[v]`, then closes
/// under `S, x ∈ S ↦ N(C)` for the components `C` of `G \ (S ∪ N(x))`.
pub fn enumerate_minimal_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > MAX_SEPARATOR_N {
        return Err(Error::cap("minimal separator enumeration vertex count", MAX_SEPARATOR_N, n));
    }
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue = Vec::new();
    for v in 0..n {
        for c in g.components(&g.closed_nbhd_of(v)) {
            let s = g.nbhd(&c);
            if found.insert(s.clone()) {
                queue.push(s);
            }
        }
    }
    while let Some(s) = queue.pop() {
        for x in &s {
            let mut removed = s.clone();
            removed.union_with(g.adj(x));
            for c in g.components(&removed) {
                let t = g.nbhd(&c);
                if found.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
    }
    Ok(found
        .into_iter()
        .filter(|s| is_minimal_separator(g, s))
        .collect())
}

/// Minimal elimination ordering by MCS-M.
///
/// Returns the elimination order (first eliminated first) and the fill
/// edges of the resulting minimal triangulation.
pub fn mcs_m(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = g.n();
    let mut weight = alloc::vec![0usize; n];
    let mut numbered = alloc::vec![false; n];
    let mut picked = Vec::with_capacity(n);
    let mut fill = Vec::new();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], Reverse(u)))
            .unwrap();
        numbered[v] = true;
        picked.push(v);
        // bottleneck search: best[u] = least possible max interior weight
        let mut best = alloc::vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                best[u] = 0;
                heap.push(Reverse((0usize, u)));
            }
        }
        let mut done = alloc::vec![false; n];
        let mut reached = Vec::new();
        while let Some(Reverse((b, x))) = heap.pop() {
            if done[x] {
                continue;
            }
            done[x] = true;
            // `b` counts interior weights shifted by one so that 0 means "no interior"
            if b == 0 || b - 1 < weight[x] {
                reached.push(x);
            }
            let through = b.max(weight[x] + 1);
            for &y in g.neighbors(x) {
                if !numbered[y] && !done[y] && through < best[y] {
                    best[y] = through;
                    heap.push(Reverse((through, y)));
                }
            }
        }
        for u in reached {
            weight[u] += 1;
            if !g.has_edge(u, v) {
                fill.push((u.min(v), u.max(v)));
            }
        }
    }
    picked.reverse();
    fill.sort_unstable();
    (picked, fill)
}

/// A clique cutset together with the components it leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCutset {
    pub clique: VertexSet,
    pub sides: Vec<VertexSet>,
}

/// Finds a clique whose removal disconnects `g`. The returned clique is
/// `N(C)` for a component `C` of what it leaves, so `C` is full.
pub fn find_clique_cutset(g: &Graph) -> Option<CliqueCutset> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let comps = g.components(&VertexSet::new());
    if comps.len() >= 2 {
        return Some(CliqueCutset {
            clique: VertexSet::new(),
            sides: comps,
        });
    }
    let (order, fill) = mcs_m(g);
    let h = g.with_edges(&fill).expect("fill edges are valid");
    let mut pos = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut tried = BTreeSet::new();
    for &x in &order {
        let madj: VertexSet = h.neighbors(x).iter().copied().filter(|&u| pos[u] > pos[x]).collect();
        if madj.is_empty() || !g.is_clique(&madj) || !tried.insert(madj.clone()) {
            continue;
        }
        let comps = g.components(&madj);
        if comps.len() >= 2 {
            let clique = g.nbhd(&comps[0]);
            let sides = g.components(&clique);
            return Some(CliqueCutset { clique, sides });
        }
    }
    None
}

/// One edge of the atom tree: atoms `a` and `b` share `clique`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueEdge {
    pub a: usize,
    pub b: usize,
    pub clique: VertexSet,
}

/// Clique-cutset decomposition. Disconnected inputs are split into their
/// components first, which are joined by glue edges with empty cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueAtoms {
    pub atoms: Vec<VertexSet>,
    pub glue: Vec<GlueEdge>,
}

/// Recursively splits `g` at clique cutsets until every piece is an atom.
pub fn clique_cutset_atoms(g: &Graph) -> CliqueAtoms {
    let mut out = CliqueAtoms {
        atoms: Vec::new(),
        glue: Vec::new(),
    };
    if g.n() > 0 {
        split(g, &g.vertices(), &mut out);
    }
    out
}

/// Decomposes `G[piece]` into `out`; returns the range of atom indices added.
fn split(g: &Graph, piece: &VertexSet, out: &mut CliqueAtoms) -> core::ops::Range<usize> {
    let start = out.atoms.len();
    let ind = g.induced(piece);
    let Some(cut) = find_clique_cutset(&ind.graph) else {
        out.atoms.push(piece.clone());
        return start..start + 1;
    };
    let clique = ind.lift(&cut.clique);
    let sides: Vec<VertexSet> = cut.sides.iter().map(|s| ind.lift(s)).collect();
    // a full side's piece contains the whole clique and hosts the glue points
    let mut pieces: Vec<(VertexSet, VertexSet)> = sides
        .iter()
        .map(|d| {
            let nd = g.nbhd(d).intersection(piece);
            (d.union(&nd), nd)
        })
        .collect();
    let full = pieces
        .iter()
        .position(|(_, nd)| *nd == clique)
        .expect("cutset has a full side");
    let hub_piece = pieces.remove(full);
    let first = split(g, &hub_piece.0, out);
    for (p, nd) in &pieces {
        let here = split(g, p, out);
        let a = first
            .clone()
            .find(|&i| nd.is_subset(&out.atoms[i]))
            .expect("clique lies in an atom");
        let b = here
            .clone()
            .find(|&i| nd.is_subset(&out.atoms[i]))
            .expect("clique lies in an atom");
        out.glue.push(GlueEdge {
            a,
            b,
            clique: nd.clone(),
        });
    }
    start..out.atoms.len()
}

/// Which condition of the PMC characterization fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmcFailure {
    /// The non-edge `uv` inside Ω is covered by no component.
    UncoveredNonEdge(usize, usize),
    /// A component `D` of `G \ Ω` has `N(D) = Ω`.
    FullComponent(VertexSet),
}

/// `None` when `omega` is a potential maximal clique, otherwise the first
/// failing condition.
pub fn pmc_violation(g: &Graph, omega: &VertexSet) -> Option<PmcFailure> {
    let comps = g.components(omega);
    let nbhds: Vec<VertexSet> = comps.iter().map(|d| g.nbhd(d)).collect();
    let members = omega.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) && !nbhds.iter().any(|nd| nd.contains(u) && nd.contains(v)) {
                return Some(PmcFailure::UncoveredNonEdge(u, v));
            }
        }
    }
    comps
        .into_iter()
        .zip(nbhds)
        .find(|(_, nd)| nd == omega)
        .map(|(d, _)| PmcFailure::FullComponent(d))
}

pub fn is_pmc(g: &Graph, omega: &VertexSet) -> bool {
    pmc_violation(g, omega).is_none()
}

/// A perfect elimination order if `g` is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    // maximum cardinality search; the reverse visit order is a PEO iff chordal
    let mut weight = alloc::vec![0usize; n];
    let mut visited = alloc::vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&u| !visited[u])
            .max_by_key(|&u| (weight[u], Reverse(u)))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    is_perfect_elimination_order(g, &visit).then_some(visit)
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: VertexSet = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        g.is_clique(&later)
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// Clique tree of a chordal graph: its bags are exactly the maximal cliques.
pub fn clique_tree(g: &Graph) -> Result<TreeDecomposition> {
    let peo = perfect_elimination_order(g).ok_or(Error::NotChordal)?;
    let td = crate::treedec::decomposition_from_order(g, &peo);
    Ok(td.contract_redundant())
}

/// Removes fill edges one at a time while `g + fill` stays chordal, until no
/// single edge can be removed. The result is an inclusion-minimal chordal
/// completion contained in `fill`.
pub fn minimalize_fill(g: &Graph, fill: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let h = g.with_edges(fill)?;
    if !is_chordal(&h) {
        return Err(Error::NotChordal);
    }
    let mut adj: Vec<VertexSet> = (0..g.n()).map(|v| h.adj(v).clone()).collect();
    let mut current: Vec<(usize, usize)> = fill
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    current.sort_unstable();
    current.dedup();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < current.len() {
            let (u, v) = current[i];
            // H - uv stays chordal iff the common neighbourhood of u and v is a clique
            let common = adj[u].intersection(&adj[v]);
            let clique = common
                .iter()
                .all(|x| adj[x].intersection_len(&common) + 1 == common.len());
            if clique {
                adj[u].remove(v);
                adj[v].remove(u);
                current.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(is_chordal(&g.with_edges(&current).unwrap()));
    Ok(current)
}

/// Structured decomposition: completes every bag of `t` into a clique,
/// extracts an inclusion-minimal sub-fill and returns the clique tree of
/// the resulting minimal triangulation. Every bag is a PMC of `g` and the
/// width does not increase.
pub fn make_structured(g: &Graph, t: &TreeDecomposition) -> Result<TreeDecomposition> {
    t.validate(g)
        .map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    let mut fill = BTreeSet::new();
    for bag in &t.bags {
        let b = bag.to_vec();
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                if !g.has_edge(u, v) {
                    fill.insert((u, v));
                }
            }
        }
    }
    let fill: Vec<_> = fill.into_iter().collect();
    let minimal = minimalize_fill(g, &fill)?;
    let h = g.with_edges(&minimal)?;
    clique_tree(&h)
}

/// Ramsey numbers `R(t, s)`: exact for the small known cases, otherwise
/// the upper bound `C(t + s - 2, t - 1)`.
pub fn ramsey(t: usize, s: usize) -> usize {
    if t == 0 || s == 0 {
        return 0;
    }
    if t == 1 || s == 1 {
        return 1;
    }
    if t == 2 {
        return s;
    }
    if s == 2 {
        return t;
    }
    let (a, b) = (t.min(s), t.max(s));
    match (a, b) {
        (3, 3) => 6,
        (3, 4) => 9,
        (3, 5) => 14,
        (4, 4) => 18,
        (4, 5) => 25,
        _ => binomial(t + s - 2, t - 1),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r.min(usize::MAX as u128) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;
    use crate::oracle;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn separators_basic() {
        let c4 = gen::cycle(4);
        assert!(is_minimal_separator(&c4, &set(&[0, 2])));
        assert_eq!(full_components(&c4, &set(&[0, 2])), [set(&[1]), set(&[3])]);
        assert!(is_minimal_separator(&gen::path(3), &set(&[1])));
        let k5 = gen::clique(5);
        assert!(!is_minimal_separator(&k5, &set(&[0, 1])));
        assert_eq!(
            enumerate_minimal_separators(&c4).unwrap(),
            [set(&[0, 2]), set(&[1, 3])]
        );
        assert!(enumerate_minimal_separators(&k5).unwrap().is_empty());
    }

    #[test]
    fn enumeration_matches_oracle() {
        for seed in 0..40 {
            let g = gen::random_graph(9, 0.3, seed).unwrap();
            let mut mine = enumerate_minimal_separators(&g).unwrap();
            mine.sort();
            let mut brute: Vec<VertexSet> = oracle::brute_minimal_separators(&g)
                .unwrap()
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect();
            brute.sort();
            assert_eq!(mine, brute, "seed {seed}");
        }
    }

    #[test]
    fn clique_cutsets() {
        let p = gen::path(3);
        let c = find_clique_cutset(&p).unwrap();
        assert_eq!(c.clique, set(&[1]));
        let atoms = clique_cutset_atoms(&p);
        assert_eq!(atoms.atoms, [set(&[0, 1]), set(&[1, 2])]);
        assert!(find_clique_cutset(&gen::cycle(7)).is_none());
        assert_eq!(clique_cutset_atoms(&gen::cycle(7)).atoms.len(), 1);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_clique_cutset(&diamond).unwrap().clique, set(&[1, 2]));
    }

    #[test]
    fn clique_cutset_matches_oracle() {
        for seed in 0..60 {
            let g = gen::random_graph(9, 0.35, 500 + seed).unwrap();
            let found = find_clique_cutset(&g);
            assert_eq!(found.is_some(), oracle::brute_has_clique_cutset(&g).unwrap());
            if let Some(c) = found {
                assert!(g.is_clique(&c.clique));
                assert!(g.components(&c.clique).len() >= 2);
            }
            let atoms = clique_cutset_atoms(&g);
            for a in &atoms.atoms {
                assert!(find_clique_cutset(&g.induced(a).graph).is_none());
            }
            for (u, v) in g.edges() {
                assert!(atoms.atoms.iter().any(|a| a.contains(u) && a.contains(v)));
            }
            if g.n() > 0 {
                assert_eq!(atoms.glue.len() + 1, atoms.atoms.len());
            }
        }
    }

    #[test]
    fn pmc_examples() {
        let c4 = gen::cycle(4);
        assert!(is_pmc(&c4, &set(&[0, 1, 2])));
        assert_eq!(
            pmc_violation(&c4, &set(&[0, 1])),
            Some(PmcFailure::FullComponent(set(&[2, 3])))
        );
        assert!(is_pmc(&gen::clique(3), &set(&[0, 1, 2])));
        assert_eq!(
            pmc_violation(&c4, &set(&[0, 1, 2, 3])),
            Some(PmcFailure::UncoveredNonEdge(0, 2))
        );
    }

    #[test]
    fn pmc_matches_oracle() {
        for seed in 0..15 {
            let g = gen::random_graph(6, 0.45, 77 + seed).unwrap();
            let brute = oracle::brute_pmcs(&g).unwrap();
            let all: Vec<VertexSet> = (1u32..1 << 6)
                .map(|m| (0..6).filter(|i| m >> i & 1 == 1).collect())
                .filter(|s| is_pmc(&g, s))
                .collect();
            let mut brute_sorted: Vec<VertexSet> = brute.into_iter().map(|s| s.into_iter().collect()).collect();
            brute_sorted.sort();
            let mut all_sorted = all;
            all_sorted.sort();
            assert_eq!(all_sorted, brute_sorted, "seed {seed}");
        }
    }

    #[test]
    fn chordal_and_clique_tree() {
        let tree = gen::path(5);
        let ct = clique_tree(&tree).unwrap();
        assert_eq!(ct.width(), 1);
        assert_eq!(ct.len(), 4);
        let k5 = clique_tree(&gen::clique(5)).unwrap();
        assert_eq!(k5.len(), 1);
        let c4a = gen::cycle(4).with_edges(&[(0, 2)]).unwrap();
        let mut bags = clique_tree(&c4a).unwrap().bags;
        bags.sort();
        assert_eq!(bags, [set(&[0, 1, 2]), set(&[0, 2, 3])]);
        assert!(clique_tree(&gen::cycle(4)).is_err());
    }

    #[test]
    fn mcs_m_is_minimal_triangulation() {
        for seed in 0..30 {
            let g = gen::random_graph(10, 0.3, 900 + seed).unwrap();
            let (_, fill) = mcs_m(&g);
            let h = g.with_edges(&fill).unwrap();
            assert!(is_chordal(&h));
            assert_eq!(minimalize_fill(&g, &fill).unwrap(), fill);
        }
    }

    #[test]
    fn structured_examples() {
        let k3 = gen::clique(3);
        let s = make_structured(&k3, &TreeDecomposition::trivial(3)).unwrap();
        assert_eq!(s.bags, [set(&[0, 1, 2])]);
        let c4 = gen::cycle(4);
        let t = TreeDecomposition {
            bags: alloc::vec![set(&[0, 1, 2]), set(&[0, 2, 3])],
            edges: alloc::vec![(0, 1)],
            host_n: 4,
        };
        let s = make_structured(&c4, &t).unwrap();
        let mut b = s.bags.clone();
        b.sort();
        assert_eq!(b, t.bags);
        let s = make_structured(&c4, &TreeDecomposition::trivial(4)).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.width(), 2);
        assert!(s.bags.iter().all(|b| is_pmc(&c4, b)));
    }

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey(3, 3), 6);
        assert_eq!(ramsey(4, 3), 9);
        assert_eq!(ramsey(5, 4), 25);
        assert_eq!(ramsey(2, 7), 7);
        assert_eq!(ramsey(6, 3), binomial(7, 5));
    }
}
