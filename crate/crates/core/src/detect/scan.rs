//! Per-hole attachment analysis.
//!
//! Every theta, pyramid, prism, pinched prism and cube contains a hole `H`
//! such that the rest of the structure is either one vertex with a special
//! attachment to `H` or an induced path whose two ends have special
//! attachments and whose interior misses `H`. For one hole we record the
//! attachment mask `N_H(z)` of each outside vertex and the components of
//! the vertices with no attachment, which makes each test a lookup.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::certificate::{Certificate, Kind};
use crate::graph::Graph;
use crate::set::VertexSet;

struct Group {
    verts: VertexSet,
    // components of the unattached vertices adjacent to some member
    touch: VertexSet,
}

pub(super) struct HoleScan<'a> {
    g: &'a Graph,
    hole: &'a [usize],
    unattached: VertexSet,
    groups: BTreeMap<u64, Group>,
}

impl<'a> HoleScan<'a> {
    pub(super) fn new(g: &'a Graph, hole: &'a [usize]) -> HoleScan<'a> {
        let n = g.n();
        let mut att = alloc::vec![0u64; n];
        let in_hole: VertexSet = hole.iter().copied().collect();
        for (p, &h) in hole.iter().enumerate() {
            for &z in g.neighbors(h) {
                if !in_hole.contains(z) {
                    att[z] |= 1 << p;
                }
            }
        }
        let outside = g.vertices().difference(&in_hole);
        let unattached: VertexSet = outside.iter().filter(|&z| att[z] == 0).collect();
        let mut comp = alloc::vec![usize::MAX; n];
        for (i, c) in g.components_within(&unattached).iter().enumerate() {
            for z in c {
                comp[z] = i;
            }
        }
        let mut groups: BTreeMap<u64, Group> = BTreeMap::new();
        for z in &outside {
            if att[z] == 0 {
                continue;
            }
            let grp = groups.entry(att[z]).or_insert_with(|| Group {
                verts: VertexSet::new(),
                touch: VertexSet::new(),
            });
            grp.verts.insert(z);
            for &y in g.neighbors(z) {
                if comp[y] != usize::MAX {
                    grp.touch.insert(comp[y]);
                }
            }
        }
        HoleScan {
            g,
            hole,
            unattached,
            groups,
        }
    }

    fn len(&self) -> usize {
        self.hole.len()
    }

    fn edge(&self, i: usize) -> u64 {
        1 << i | 1 << ((i + 1) % self.len())
    }

    fn any_with(&self, mask: u64) -> Option<usize> {
        self.groups.get(&mask).and_then(|g| g.verts.first())
    }

    /// An induced path from a vertex attached exactly at `m1` to one attached
    /// exactly at `m2`, with unattached interior.
    fn link(&self, m1: u64, m2: u64) -> Option<Vec<usize>> {
        let x = self.groups.get(&m1)?;
        let y = self.groups.get(&m2)?;
        let direct = x.verts.iter().any(|v| !self.g.adj(v).is_disjoint(&y.verts));
        if !direct && x.touch.is_disjoint(&y.touch) {
            return None;
        }
        self.g.shortest_path_within(&x.verts, &y.verts, &self.unattached)
    }

    /// Walks the hole from position `from` to `to`, forwards or backwards.
    fn walk(&self, from: usize, to: usize, forward: bool) -> Vec<usize> {
        let l = self.len();
        let mut out = alloc::vec![self.hole[from]];
        let mut p = from;
        while p != to {
            p = if forward { (p + 1) % l } else { (p + l - 1) % l };
            out.push(self.hole[p]);
        }
        out
    }

    pub(super) fn find(&self, kind: Kind) -> Option<Certificate> {
        match kind {
            Kind::Theta => self.theta(),
            Kind::Pyramid => self.pyramid(),
            Kind::Prism => self.prism(),
            Kind::PinchedPrism => self.pinched_prism(),
            Kind::Cube => self.cube(),
            Kind::CliqueKt | Kind::Wheel => None,
        }
    }

    fn theta(&self) -> Option<Certificate> {
        let l = self.len();
        for i in 0..l {
            for j in i + 2..l {
                if i == 0 && j == l - 1 {
                    continue;
                }
                let q = match self.any_with(1 << i | 1 << j) {
                    Some(z) => alloc::vec![z],
                    None => match self.link(1 << i, 1 << j) {
                        Some(q) => q,
                        None => continue,
                    },
                };
                let (a, b) = (self.hole[i], self.hole[j]);
                let mut p3 = alloc::vec![a];
                p3.extend(q);
                p3.push(b);
                return Some(Certificate::Theta {
                    a,
                    b,
                    paths: [self.walk(i, j, true), self.walk(i, j, false), p3],
                });
            }
        }
        None
    }

    fn pyramid(&self) -> Option<Certificate> {
        let l = self.len();
        if l < 5 {
            return None;
        }
        for i in 0..l {
            for j in 0..l {
                let j1 = (j + 1) % l;
                if [j, j1, (j + l - 1) % l, (j + 2) % l].contains(&i) {
                    continue;
                }
                let e = self.edge(j);
                let q = match self.any_with(1 << i | e) {
                    Some(z) => alloc::vec![z],
                    None => match self.link(1 << i, e) {
                        Some(q) => q,
                        None => continue,
                    },
                };
                let apex = self.hole[i];
                let b3 = *q.last().unwrap();
                let mut p3 = alloc::vec![apex];
                p3.extend(q);
                return Some(Certificate::Pyramid {
                    apex,
                    base: [self.hole[j], self.hole[j1], b3],
                    paths: [self.walk(i, j, true), self.walk(i, j1, false), p3],
                });
            }
        }
        None
    }

    fn prism(&self) -> Option<Certificate> {
        let l = self.len();
        for i in 0..l {
            for j in i + 2..l {
                let j1 = (j + 1) % l;
                if j1 == i {
                    continue;
                }
                let Some(q) = self.link(self.edge(i), self.edge(j)) else {
                    continue;
                };
                let i1 = i + 1;
                let (x, y) = (q[0], *q.last().unwrap());
                return Some(Certificate::Prism {
                    a: [self.hole[i1], self.hole[i], x],
                    b: [self.hole[j], self.hole[j1], y],
                    paths: [self.walk(i1, j, true), self.walk(i, j1, false), q],
                });
            }
        }
        None
    }

    fn pinched_prism(&self) -> Option<Certificate> {
        let l = self.len();
        if l < 6 {
            return None;
        }
        let rot = |m: u64, fwd: bool| -> u64 {
            let full = if l == 64 { u64::MAX } else { (1u64 << l) - 1 };
            if fwd {
                (m << 1 | m >> (l - 1)) & full
            } else {
                (m >> 1 | m << (l - 1)) & full
            }
        };
        for (&m, grp) in &self.groups {
            if m.count_ones() != 4 {
                continue;
            }
            // each attachment has exactly one attachment among its hole neighbours
            let next = rot(m, true) & m;
            let prev = rot(m, false) & m;
            if next & prev == 0 && (next | prev) == m {
                return Some(Certificate::PinchedPrism {
                    center: grp.verts.first().unwrap(),
                    hole: self.hole.to_vec(),
                });
            }
        }
        None
    }

    fn cube(&self) -> Option<Certificate> {
        if self.len() != 6 {
            return None;
        }
        let even = self.groups.get(&0b010101)?;
        let odd = self.groups.get(&0b101010)?;
        for z1 in &even.verts {
            if let Some(z2) = odd.verts.difference(self.g.adj(z1)).first() {
                let h = self.hole;
                return Some(Certificate::Cube {
                    a: [h[0], h[1], h[2], h[3], h[4], h[5]],
                    b: [z1, z2],
                });
            }
        }
        None
    }
}
