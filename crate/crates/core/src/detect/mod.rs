//! Certificate-producing detection of thetas, pyramids, prisms, pinched
//! prisms, cubes, cliques and wheels.
//!
//! Every pattern except cliques contains a hole and has no clique cutset,
//! so searches run on the atoms of a clique-cutset decomposition and scan
//! each hole of an atom once.

mod certificate;
mod connector;
mod cube;
mod scan;
mod wheel;

use alloc::vec::Vec;
use core::ops::ControlFlow;

pub use certificate::{Certificate, Kind};
pub use connector::{minimal_connected_connector, Connector, ConnectorShape};
pub use cube::{find_cube_partition, CubePartition};
pub use wheel::{hubs, optimal_wheel, wheels_at, Wheel};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::holes::{for_each_hole, DEFAULT_HOLE_STEPS};
use crate::separators::clique_cutset_atoms;
use crate::set::VertexSet;

/// Limits on exhaustive searches. `max_n` bounds the size of each atom
/// handed to the hole search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_n: usize,
    pub hole_steps: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            max_n: 30,
            hole_steps: DEFAULT_HOLE_STEPS,
        }
    }
}

impl Caps {
    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::cap("detection atom size", self.max_n, n))
        } else {
            Ok(())
        }
    }
}

pub(crate) fn atoms_of(g: &Graph) -> Vec<VertexSet> {
    clique_cutset_atoms(g).atoms
}

/// Atoms with no hole, or whose only hole is the whole atom.
pub(super) fn trivially_clean(g: &Graph) -> bool {
    let n = g.n();
    n < 4 || g.m() * 2 == n * (n - 1) || (g.is_connected() && (0..n).all(|v| g.degree(v) == 2))
}

fn search(g: &Graph, kinds: &[Kind], caps: &Caps) -> Result<Option<Certificate>> {
    for atom in atoms_of(g) {
        let ind = g.induced(&atom);
        let local = &ind.graph;
        if trivially_clean(local) {
            continue;
        }
        caps.check(local.n())?;
        let mut found = None;
        let _ = for_each_hole(local, local.n(), caps.hole_steps, |h| {
            let sc = scan::HoleScan::new(local, h);
            for &k in kinds {
                if let Some(c) = sc.find(k) {
                    found = Some(c);
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
        if let Some(c) = found {
            return Ok(Some(c.map(|v| ind.parent(v))));
        }
    }
    Ok(None)
}

pub fn find_theta(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(g, &[Kind::Theta], caps)
}

pub fn find_pyramid(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(g, &[Kind::Pyramid], caps)
}

pub fn find_prism(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(g, &[Kind::Prism], caps)
}

pub fn find_pinched_prism(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(g, &[Kind::PinchedPrism], caps)
}

pub fn find_cube(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(g, &[Kind::Cube], caps)
}

/// Dispatches on `kind`; `CliqueKt` looks for a clique of size `t`, and
/// `Wheel` returns the optimal wheel at the least hub.
pub fn find(g: &Graph, kind: Kind, t: usize, caps: &Caps) -> Result<Option<Certificate>> {
    match kind {
        Kind::CliqueKt => Ok(find_clique(g, t).map(Certificate::Clique)),
        Kind::Wheel => match hubs(g, caps)?.first() {
            Some(v) => Ok(optimal_wheel(g, v, caps)?.map(Certificate::Wheel)),
            None => Ok(None),
        },
        k => search(g, &[k], caps),
    }
}

/// The forbidden structure of (theta, pyramid, prism, pinched prism)-free
/// graphs found first, if any.
pub fn in_class_c(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(g, &[Kind::Theta, Kind::Pyramid, Kind::Prism, Kind::PinchedPrism], caps)
}

/// `None` when `g` is (theta, pyramid, generalized prism, `K_t`)-free,
/// otherwise a first violation. Patterns are checked before cliques.
pub fn in_class_ct(g: &Graph, t: usize, caps: &Caps) -> Result<Option<Certificate>> {
    if let Some(c) = in_class_c(g, caps)? {
        return Ok(Some(c));
    }
    Ok(find_clique(g, t).map(Certificate::Clique))
}

/// `None` when `g` is cube-free and in the class without the clique bound.
pub fn in_class_cstar(g: &Graph, caps: &Caps) -> Result<Option<Certificate>> {
    search(
        g,
        &[Kind::Theta, Kind::Pyramid, Kind::Prism, Kind::PinchedPrism, Kind::Cube],
        caps,
    )
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    target: usize,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, cur: &mut Vec<usize>, mut cand: VertexSet) {
        if cur.len() > self.best.len() {
            self.best = cur.clone();
        }
        if self.best.len() >= self.target {
            return;
        }
        while let Some(v) = cand.first() {
            if cur.len() + cand.len() <= self.best.len() {
                return;
            }
            cand.remove(v);
            cur.push(v);
            self.expand(cur, cand.intersection(self.g.adj(v)));
            cur.pop();
            if self.best.len() >= self.target {
                return;
            }
        }
    }
}

fn clique_search(g: &Graph, target: usize) -> Vec<usize> {
    let mut s = CliqueSearch {
        g,
        best: Vec::new(),
        target,
    };
    s.expand(&mut Vec::new(), g.vertices());
    s.best
}

/// A maximum clique, sorted.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    clique_search(g, usize::MAX)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Some clique on exactly `t` vertices, if any.
pub fn find_clique(g: &Graph, t: usize) -> Option<Vec<usize>> {
    let mut c = clique_search(g, t);
    if c.len() >= t {
        c.truncate(t);
        Some(c)
    } else {
        None
    }
}

pub fn has_clique(g: &Graph, t: usize) -> bool {
    find_clique(g, t).is_some()
}
