//! Inclusion-minimal connected sets touching three given vertices.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Shape of a minimal connector `H` for `x_1, x_2, x_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectorShape {
    /// `H` is the interior of `path`, which runs from `ends[0]` to `ends[1]`
    /// (or is a hole through the edge `ends[0] ends[1]`); `other` is the
    /// third vertex.
    Path {
        ends: [usize; 2],
        other: usize,
        path: Vec<usize>,
    },
    /// `paths[i]` runs from `apex` to `x_i`.
    Tree { apex: usize, paths: [Vec<usize>; 3] },
    /// `paths[i]` runs from `triangle[i]` to `x_i`.
    Triangle {
        triangle: [usize; 3],
        paths: [Vec<usize>; 3],
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connector {
    pub h: VertexSet,
    pub shape: ConnectorShape,
}

fn touches_all(g: &Graph, h: &VertexSet, xs: &[usize; 3]) -> bool {
    xs.iter().all(|&x| !g.adj(x).is_disjoint(h))
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Finds a minimal connector for `x1, x2, x3` and classifies it.
///
/// `H` starts as the first component of `G \ {x1, x2, x3}` that sees all
/// three vertices and loses vertices in ascending order while it stays
/// connected and keeps a neighbour of each `x_i`.
pub fn minimal_connected_connector(g: &Graph, x1: usize, x2: usize, x3: usize) -> Result<Connector> {
    let xs = [x1, x2, x3];
    for &x in &xs {
        g.check_vertex(x)?;
    }
    if x1 == x2 || x1 == x3 || x2 == x3 {
        return Err(Error::Precondition("connector vertices must be distinct".to_string()));
    }
    let removed: VertexSet = xs.iter().copied().collect();
    let mut h = g
        .components(&removed)
        .into_iter()
        .find(|c| touches_all(g, c, &xs))
        .ok_or_else(|| Error::Precondition("no component sees all three vertices".to_string()))?;
    loop {
        let mut changed = false;
        for v in h.to_vec() {
            let mut rest = h.clone();
            rest.remove(v);
            if !rest.is_empty() && g.is_connected_set(&rest) && touches_all(g, &rest, &xs) {
                h = rest;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let shape = classify(g, &h, &xs)
        .ok_or_else(|| Error::Precondition("minimal connector fits no known shape".to_string()))?;
    Ok(Connector { h, shape })
}

/// Orders `h` as an induced path, if it is one.
fn as_path(g: &Graph, h: &VertexSet) -> Option<Vec<usize>> {
    if h.len() == 1 {
        return Some(h.to_vec());
    }
    let deg = |v: usize| g.adj(v).intersection_len(h);
    let start = h.iter().find(|&v| deg(v) == 1)?;
    let mut path = alloc::vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.nbrs_in(cur, h).iter().find(|&u| u != prev);
        match next {
            Some(u) if path.len() < h.len() => {
                path.push(u);
                prev = cur;
                cur = u;
            }
            _ => break,
        }
    }
    (path.len() == h.len() && g.is_induced_path(&path)).then_some(path)
}

fn classify(g: &Graph, h: &VertexSet, xs: &[usize; 3]) -> Option<ConnectorShape> {
    // (i) an induced path whose ends are the only attachments of two x's
    if let Some(p) = as_path(g, h) {
        let (first, last) = (p[0], p[p.len() - 1]);
        for [i, j, k] in PERMS {
            let (xi, xj, xk) = (xs[i], xs[j], xs[k]);
            let ni = g.nbrs_in(xi, h);
            let nj = g.nbrs_in(xj, h);
            if ni != VertexSet::singleton(first) || nj != VertexSet::singleton(last) {
                continue;
            }
            let nk = g.nbrs_in(xk, h);
            let nonadjacent_pair = nk.iter().any(|a| nk.iter().any(|b| a < b && !g.has_edge(a, b)));
            let adjacent_two = nk.len() == 2 && {
                let v = nk.to_vec();
                g.has_edge(v[0], v[1])
            };
            if nonadjacent_pair || adjacent_two {
                let mut path = alloc::vec![xi];
                path.extend_from_slice(&p);
                path.push(xj);
                return Some(ConnectorShape::Path {
                    ends: [xi, xj],
                    other: xk,
                    path,
                });
            }
        }
    }
    // (ii) three paths from a common apex
    for a in h {
        let paths: Option<Vec<Vec<usize>>> = (0..3)
            .map(|i| g.shortest_path_within(&VertexSet::singleton(a), &VertexSet::singleton(xs[i]), h))
            .collect();
        let Some(paths) = paths else { continue };
        let parts: Vec<VertexSet> = paths
            .iter()
            .map(|p| p.iter().copied().filter(|&v| v != a).collect())
            .collect();
        if covers(h, &paths, xs) && separated(g, &parts, xs, &[]) {
            return Some(ConnectorShape::Tree {
                apex: a,
                paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
            });
        }
    }
    // (iii) three paths from the corners of a triangle
    let hv = h.to_vec();
    for (ia, &a) in hv.iter().enumerate() {
        for (ib, &b) in hv.iter().enumerate().skip(ia + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            for &c in &hv[ib + 1..] {
                if !g.has_edge(a, c) || !g.has_edge(b, c) {
                    continue;
                }
                let tri = [a, b, c];
                for perm in PERMS {
                    let corner = [tri[perm[0]], tri[perm[1]], tri[perm[2]]];
                    let paths: Option<Vec<Vec<usize>>> = (0..3)
                        .map(|i| {
                            let mut allowed = h.clone();
                            for (j, &o) in corner.iter().enumerate() {
                                if j != i {
                                    allowed.remove(o);
                                }
                            }
                            g.shortest_path_within(
                                &VertexSet::singleton(corner[i]),
                                &VertexSet::singleton(xs[i]),
                                &allowed,
                            )
                        })
                        .collect();
                    let Some(paths) = paths else { continue };
                    let parts: Vec<VertexSet> = paths.iter().map(|p| p.iter().copied().collect()).collect();
                    let tri_edges = [(corner[0], corner[1]), (corner[0], corner[2]), (corner[1], corner[2])];
                    if covers(h, &paths, xs) && separated(g, &parts, xs, &tri_edges) {
                        return Some(ConnectorShape::Triangle {
                            triangle: corner,
                            paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
                        });
                    }
                }
            }
        }
    }
    None
}

fn covers(h: &VertexSet, paths: &[Vec<usize>], xs: &[usize; 3]) -> bool {
    let mut all: VertexSet = paths.iter().flatten().copied().collect();
    for &x in xs {
        all.remove(x);
    }
    all == *h
}

/// Parts pairwise disjoint with no edges between them other than `x_i x_j`
/// and the listed exceptions.
fn separated(g: &Graph, parts: &[VertexSet], xs: &[usize; 3], allowed: &[(usize, usize)]) -> bool {
    let ok = |u: usize, v: usize| {
        (xs.contains(&u) && xs.contains(&v)) || allowed.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v))
    };
    for i in 0..3 {
        for j in i + 1..3 {
            if !parts[i].is_disjoint(&parts[j]) {
                return false;
            }
            for u in &parts[i] {
                for v in g.adj(u).intersection(&parts[j]).iter() {
                    if !ok(u, v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
