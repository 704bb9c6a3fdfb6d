use alloc::format;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{atoms_of, trivially_clean, Caps};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::holes::for_each_hole;
use crate::set::VertexSet;

/// A hole together with a hub. `hole` is cyclic and its list order is the
/// clockwise orientation; `attachments` are the positions in `hole` of the
/// hub's neighbours, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wheel {
    pub hole: Vec<usize>,
    pub hub: usize,
    pub attachments: Vec<usize>,
}

/// Positions of `hub`'s neighbours along `hole`.
fn attachment_positions(g: &Graph, hole: &[usize], hub: usize) -> Vec<usize> {
    (0..hole.len()).filter(|&i| g.has_edge(hub, hole[i])).collect()
}

fn count_long(len: usize, att: &[usize]) -> usize {
    let k = att.len();
    (0..k)
        .filter(|&r| {
            let gap = (att[(r + 1) % k] + len - att[r]) % len;
            let gap = if gap == 0 { len } else { gap };
            gap >= 2
        })
        .count()
}

/// Whether `hub` and `hole` form a wheel, assuming `hole` is a hole of `g`
/// of length at least five not containing `hub`.
pub(super) fn is_wheel_on(g: &Graph, hole: &[usize], hub: usize) -> Option<Wheel> {
    let att = attachment_positions(g, hole, hub);
    if att.len() >= 3 && count_long(hole.len(), &att) >= 2 {
        Some(Wheel {
            hole: hole.to_vec(),
            hub,
            attachments: att,
        })
    } else {
        None
    }
}

impl Wheel {
    /// Builds and checks a wheel from a hole and a hub.
    pub fn new(g: &Graph, hole: Vec<usize>, hub: usize) -> Result<Wheel> {
        let w = Wheel {
            attachments: if hub < g.n() {
                attachment_positions(g, &hole, hub)
            } else {
                Vec::new()
            },
            hole,
            hub,
        };
        if w.is_valid(g) {
            Ok(w)
        } else {
            Err(Error::Precondition(format!("({:?}, {hub}) is not a wheel", w.hole)))
        }
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.hub < g.n()
            && self.hole.len() >= 5
            && g.is_hole(&self.hole)
            && !self.hole.contains(&self.hub)
            && self.attachments == attachment_positions(g, &self.hole, self.hub)
            && self.attachments.len() >= 3
            && self.long_sectors() >= 2
    }

    /// `N_W(v)` as vertices.
    pub fn neighbors(&self) -> VertexSet {
        self.attachments.iter().map(|&i| self.hole[i]).collect()
    }

    /// The sectors in clockwise order; sector `r` runs from attachment `r`
    /// to attachment `r + 1`.
    pub fn sectors(&self) -> Vec<Vec<usize>> {
        let l = self.hole.len();
        let k = self.attachments.len();
        (0..k)
            .map(|r| {
                let (s, e) = (self.attachments[r], self.attachments[(r + 1) % k]);
                let mut p = alloc::vec![self.hole[s]];
                let mut i = s;
                loop {
                    i = (i + 1) % l;
                    p.push(self.hole[i]);
                    if i == e {
                        break;
                    }
                }
                p
            })
            .collect()
    }

    pub fn long_sectors(&self) -> usize {
        count_long(self.hole.len(), &self.attachments)
    }

    /// The contour `(a_1, .., a_k, b)` if the wheel is stranded.
    pub fn is_stranded(&self) -> Option<Vec<usize>> {
        let l = self.hole.len();
        let k = self.attachments.len();
        let long: Vec<bool> = (0..k)
            .map(|r| (self.attachments[(r + 1) % k] + l - self.attachments[r]) % l >= 2)
            .collect();
        if long.iter().filter(|&&x| x).count() != 2 {
            return None;
        }
        let r = (0..k).find(|&r| long[r] && long[(r + 1) % k])?;
        // b sits between the two long sectors; the a's follow it clockwise
        let mut contour: Vec<usize> = (0..k - 1)
            .map(|i| self.hole[self.attachments[(r + 2 + i) % k]])
            .collect();
        contour.push(self.hole[self.attachments[(r + 1) % k]]);
        Some(contour)
    }

    fn within_one_sector(&self, x: &VertexSet) -> bool {
        self.sectors()
            .iter()
            .any(|s| x.is_subset(&s.iter().copied().collect()))
    }

    /// `x` lies outside `N[v] ∪ W` and `N_W(x)` lies in one sector.
    pub fn is_local_vertex(&self, g: &Graph, x: usize) -> bool {
        if x == self.hub || self.hole.contains(&x) || g.has_edge(x, self.hub) {
            return false;
        }
        let nw: VertexSet = self.hole.iter().copied().filter(|&h| g.has_edge(x, h)).collect();
        self.within_one_sector(&nw)
    }

    /// `N[D] ∩ W` lies in one sector.
    pub fn is_local_component(&self, g: &Graph, d: &VertexSet) -> bool {
        let w: VertexSet = self.hole.iter().copied().collect();
        self.within_one_sector(&g.closed_nbhd(d).intersection(&w))
    }
}

/// All wheels with hub `v`, sorted by `(|N_W(v)|, hole)`.
pub fn wheels_at(g: &Graph, v: usize, caps: &Caps) -> Result<Vec<Wheel>> {
    g.check_vertex(v)?;
    let mut out = Vec::new();
    for atom in atoms_of(g) {
        if !atom.contains(v) || g.adj(v).intersection_len(&atom) < 3 {
            continue;
        }
        let mut rest = atom.clone();
        rest.remove(v);
        caps.check(rest.len())?;
        let ind = g.induced(&rest);
        let _ = for_each_hole(&ind.graph, ind.graph.n(), caps.hole_steps, |h| {
            if h.len() >= 5 {
                let hole = ind.lift_list(h);
                if let Some(w) = is_wheel_on(g, &hole, v) {
                    out.push(w);
                }
            }
            ControlFlow::Continue(())
        })?;
    }
    out.sort_by(|a, b| (a.attachments.len(), &a.hole).cmp(&(b.attachments.len(), &b.hole)));
    out.dedup();
    Ok(out)
}

/// A wheel at `v` minimising `|N_W(v)|`, ties broken by the least hole;
/// `None` when `v` is not a hub.
pub fn optimal_wheel(g: &Graph, v: usize, caps: &Caps) -> Result<Option<Wheel>> {
    Ok(wheels_at(g, v, caps)?.into_iter().next())
}

/// Every vertex that is the hub of some wheel.
pub fn hubs(g: &Graph, caps: &Caps) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    for atom in atoms_of(g) {
        if atom.len() < 6 {
            continue;
        }
        let ind = g.induced(&atom);
        let local = &ind.graph;
        if trivially_clean(local) {
            continue;
        }
        caps.check(atom.len())?;
        let mut found = VertexSet::new();
        let _ = for_each_hole(local, local.n(), caps.hole_steps, |h| {
            if h.len() >= 5 {
                let in_hole: VertexSet = h.iter().copied().collect();
                for z in local.vertices().difference(&in_hole).difference(&found).iter() {
                    if local.adj(z).intersection_len(&in_hole) >= 3 && is_wheel_on(local, h, z).is_some() {
                        found.insert(z);
                    }
                }
            }
            ControlFlow::Continue(())
        })?;
        out.union_with(&ind.lift(&found));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;

    /// Cycle on `0..len` plus `extra` more vertices with the given edges.
    pub(crate) fn cycle_plus(len: usize, extra: usize, edges: &[(usize, usize)]) -> Graph {
        let mut es = gen::cycle(len).edges();
        es.extend_from_slice(edges);
        Graph::from_edges(len + extra, &es).unwrap()
    }

    fn hub_example() -> Graph {
        // C5 on 0..5 plus 5 adjacent to 0, 1, 3
        cycle_plus(5, 1, &[(5, 0), (5, 1), (5, 3)])
    }

    #[test]
    fn small_hub() {
        let g = hub_example();
        let caps = Caps::default();
        assert_eq!(hubs(&g, &caps).unwrap().to_vec(), [5]);
        let ws = wheels_at(&g, 5, &caps).unwrap();
        assert_eq!(ws.len(), 1);
        let w = &ws[0];
        assert_eq!(w.sectors().len(), 3);
        assert_eq!(w.long_sectors(), 2);
        assert_eq!(w.is_stranded(), Some(alloc::vec![0, 1, 3]));
        assert_eq!(optimal_wheel(&g, 5, &caps).unwrap().unwrap().attachments.len(), 3);
        assert_eq!(optimal_wheel(&g, 0, &caps).unwrap(), None);
    }

    #[test]
    fn holes_and_bipartite() {
        let caps = Caps::default();
        assert!(hubs(&gen::cycle(9), &caps).unwrap().is_empty());
        // K33 has no hole of length five or more
        assert!(hubs(&gen::complete_bipartite(3, 3), &caps).unwrap().is_empty());
    }

    #[test]
    fn stranded_contour() {
        // C8 with hub adjacent to 0, 1, 2 and the antipodal 5
        let g = cycle_plus(8, 1, &[(8, 0), (8, 1), (8, 2), (8, 5)]);
        let w = Wheel::new(&g, (0..8).collect(), 8).unwrap();
        assert_eq!(w.is_stranded(), Some(alloc::vec![0, 1, 2, 5]));
        let g2 = cycle_plus(8, 1, &[(8, 0), (8, 2), (8, 4), (8, 6)]);
        assert_eq!(Wheel::new(&g2, (0..8).collect(), 8).unwrap().is_stranded(), None);
    }

    #[test]
    fn locality() {
        // local vertex 9 attached inside the sector 2..5
        let g = cycle_plus(8, 2, &[(8, 0), (8, 1), (8, 2), (8, 5), (9, 3), (9, 4)]);
        let w = Wheel::new(&g, (0..8).collect(), 8).unwrap();
        assert!(w.is_local_vertex(&g, 9));
        assert!(!w.is_local_vertex(&g, 3));
        assert!(w.is_local_component(&g, &[6, 7].into_iter().collect()));
        assert!(w.is_local_component(&g, &VertexSet::singleton(9)));
        assert!(!w.is_local_component(&g, &[3, 4, 6, 7, 9].into_iter().collect()));
    }

    #[test]
    fn matches_oracle() {
        let caps = Caps::default();
        for seed in 0..60 {
            let g = gen::random_graph(10, 0.35, seed).unwrap();
            let want = crate::oracle::brute_hubs(&g).unwrap();
            assert_eq!(hubs(&g, &caps).unwrap().to_vec(), want, "seed {seed}");
            let sizes = crate::oracle::brute_optimal_wheel_sizes(&g).unwrap();
            for v in 0..g.n() {
                let got = optimal_wheel(&g, v, &caps).unwrap();
                assert_eq!(got.as_ref().map(|w| w.attachments.len()), sizes[v]);
                if let Some(w) = got {
                    assert!(w.is_valid(&g));
                }
            }
        }
    }
}
