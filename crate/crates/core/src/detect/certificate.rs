use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::wheel::Wheel;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Kind of a forbidden structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Theta,
    Pyramid,
    Prism,
    PinchedPrism,
    Cube,
    CliqueKt,
    Wheel,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Theta => "theta",
            Kind::Pyramid => "pyramid",
            Kind::Prism => "prism",
            Kind::PinchedPrism => "pinched-prism",
            Kind::Cube => "cube",
            Kind::CliqueKt => "clique",
            Kind::Wheel => "wheel",
        }
    }
}

/// An induced copy of a forbidden structure, with its vertex roles.
/// All ids refer to the graph the certificate was found in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `paths[i]` runs from `a` to `b`.
    Theta { a: usize, b: usize, paths: [Vec<usize>; 3] },
    /// `paths[i]` runs from `apex` to `base[i]`.
    Pyramid { apex: usize, base: [usize; 3], paths: [Vec<usize>; 3] },
    /// `paths[i]` runs from `a[i]` to `b[i]`.
    Prism { a: [usize; 3], b: [usize; 3], paths: [Vec<usize>; 3] },
    PinchedPrism { center: usize, hole: Vec<usize> },
    /// `a` is the 6-hole in order; `b[0]` sees `a[0], a[2], a[4]`.
    Cube { a: [usize; 6], b: [usize; 2] },
    Clique(Vec<usize>),
    Wheel(Wheel),
}

fn distinct(vs: &[usize]) -> bool {
    let s: BTreeSet<usize> = vs.iter().copied().collect();
    s.len() == vs.len()
}

/// Whether the edges of `g` among `vertices` are exactly `edges`.
fn induces_exactly(g: &Graph, vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    if !distinct(vertices) || vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let want: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.has_edge(u, v) != want.contains(&(u.min(v), u.max(v))) {
                return false;
            }
        }
    }
    true
}

fn path_edges(p: &[usize], out: &mut Vec<(usize, usize)>) {
    for w in p.windows(2) {
        out.push((w[0], w[1]));
    }
}

impl Certificate {
    pub fn kind(&self) -> Kind {
        match self {
            Certificate::Theta { .. } => Kind::Theta,
            Certificate::Pyramid { .. } => Kind::Pyramid,
            Certificate::Prism { .. } => Kind::Prism,
            Certificate::PinchedPrism { .. } => Kind::PinchedPrism,
            Certificate::Cube { .. } => Kind::Cube,
            Certificate::Clique(_) => Kind::CliqueKt,
            Certificate::Wheel(_) => Kind::Wheel,
        }
    }

    /// All vertices of the structure, sorted.
    pub fn vertices(&self) -> VertexSet {
        match self {
            Certificate::Theta { paths, .. }
            | Certificate::Pyramid { paths, .. }
            | Certificate::Prism { paths, .. } => paths.iter().flatten().copied().collect(),
            Certificate::PinchedPrism { center, hole } => {
                let mut s: VertexSet = hole.iter().copied().collect();
                s.insert(*center);
                s
            }
            Certificate::Cube { a, b } => a.iter().chain(b).copied().collect(),
            Certificate::Clique(c) => c.iter().copied().collect(),
            Certificate::Wheel(w) => {
                let mut s: VertexSet = w.hole.iter().copied().collect();
                s.insert(w.hub);
                s
            }
        }
    }

    /// Renames every vertex through `f`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Certificate {
        let mp = |p: &Vec<usize>| p.iter().map(|&v| f(v)).collect::<Vec<_>>();
        let m3 = |ps: &[Vec<usize>; 3]| [mp(&ps[0]), mp(&ps[1]), mp(&ps[2])];
        match self {
            Certificate::Theta { a, b, paths } => Certificate::Theta {
                a: f(*a),
                b: f(*b),
                paths: m3(paths),
            },
            Certificate::Pyramid { apex, base, paths } => Certificate::Pyramid {
                apex: f(*apex),
                base: base.map(&f),
                paths: m3(paths),
            },
            Certificate::Prism { a, b, paths } => Certificate::Prism {
                a: a.map(&f),
                b: b.map(&f),
                paths: m3(paths),
            },
            Certificate::PinchedPrism { center, hole } => Certificate::PinchedPrism {
                center: f(*center),
                hole: mp(hole),
            },
            Certificate::Cube { a, b } => Certificate::Cube {
                a: a.map(&f),
                b: b.map(&f),
            },
            Certificate::Clique(c) => Certificate::Clique(mp(c)),
            Certificate::Wheel(w) => Certificate::Wheel(Wheel {
                hole: mp(&w.hole),
                hub: f(w.hub),
                attachments: w.attachments.clone(),
            }),
        }
    }

    /// Re-checks the full definition against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::Theta { a, b, paths } => {
                if a == b || paths.iter().any(|p| p.len() < 3 || p[0] != *a || p[p.len() - 1] != *b) {
                    return false;
                }
                let mut vs = alloc::vec![*a, *b];
                let mut es = Vec::new();
                for p in paths {
                    vs.extend_from_slice(&p[1..p.len() - 1]);
                    path_edges(p, &mut es);
                }
                induces_exactly(g, &vs, &es)
            }
            Certificate::Pyramid { apex, base, paths } => {
                if paths.iter().zip(base).any(|(p, &t)| p.len() < 2 || p[0] != *apex || p[p.len() - 1] != t)
                    || paths.iter().filter(|p| p.len() == 2).count() > 1
                {
                    return false;
                }
                let mut vs = alloc::vec![*apex];
                let mut es = alloc::vec![(base[0], base[1]), (base[0], base[2]), (base[1], base[2])];
                for p in paths {
                    vs.extend_from_slice(&p[1..]);
                    path_edges(p, &mut es);
                }
                induces_exactly(g, &vs, &es)
            }
            Certificate::Prism { a, b, paths } => {
                if (0..3).any(|i| {
                    let p = &paths[i];
                    p.len() < 2 || p[0] != a[i] || p[p.len() - 1] != b[i]
                }) {
                    return false;
                }
                let mut vs = Vec::new();
                let mut es = alloc::vec![
                    (a[0], a[1]),
                    (a[0], a[2]),
                    (a[1], a[2]),
                    (b[0], b[1]),
                    (b[0], b[2]),
                    (b[1], b[2])
                ];
                for p in paths {
                    vs.extend_from_slice(p);
                    path_edges(p, &mut es);
                }
                induces_exactly(g, &vs, &es)
            }
            Certificate::PinchedPrism { center, hole } => {
                let l = hole.len();
                if l < 6 || !g.is_hole(hole) || hole.contains(center) || *center >= g.n() {
                    return false;
                }
                let at: Vec<usize> = (0..l).filter(|&i| g.has_edge(*center, hole[i])).collect();
                at.len() == 4
                    && at.iter().all(|&i| {
                        let next = at.contains(&((i + 1) % l)) as usize;
                        let prev = at.contains(&((i + l - 1) % l)) as usize;
                        next + prev == 1
                    })
            }
            Certificate::Cube { a, b } => {
                let mut vs = a.to_vec();
                vs.extend_from_slice(b);
                let mut es: Vec<(usize, usize)> = (0..6).map(|i| (a[i], a[(i + 1) % 6])).collect();
                for i in 0..3 {
                    es.push((b[0], a[2 * i]));
                    es.push((b[1], a[2 * i + 1]));
                }
                induces_exactly(g, &vs, &es)
            }
            Certificate::Clique(c) => {
                let mut es = Vec::new();
                for (i, &u) in c.iter().enumerate() {
                    for &v in &c[i + 1..] {
                        es.push((u, v));
                    }
                }
                !c.is_empty() && induces_exactly(g, c, &es)
            }
            Certificate::Wheel(w) => w.is_valid(g),
        }
    }
}
