//! Exhaustive hole enumeration for graphs with at most 64 vertices.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by the hole search.
pub const MAX_HOLE_N: usize = 64;

/// Default bound on search-tree nodes per enumeration.
pub const DEFAULT_HOLE_STEPS: u64 = 20_000_000;

/// Calls `f` once per hole of `g` with at most `max_len` vertices.
///
/// Each hole is reported in canonical form: it starts at its smallest
/// vertex and continues towards the smaller of that vertex's two hole
/// neighbors. The search stops early when `f` breaks, and fails with a cap
/// error once `max_steps` search nodes have been expanded.
pub fn for_each_hole<F>(g: &Graph, max_len: usize, max_steps: u64, mut f: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    if n > MAX_HOLE_N {
        return Err(Error::cap("hole enumeration vertex count", MAX_HOLE_N, n));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let mut search = Search {
        adj: &adj,
        max_len,
        steps: 0,
        max_steps,
        path: Vec::with_capacity(n),
    };
    for s in 0..n {
        let above = if s + 1 >= 64 { 0 } else { !0u64 << (s + 1) };
        let ns = adj[s] & above;
        let mut firsts = ns;
        while firsts != 0 {
            let p1 = firsts.trailing_zeros() as usize;
            firsts &= firsts - 1;
            let closers = ns & higher_than(p1);
            if closers == 0 {
                continue;
            }
            search.path.clear();
            search.path.push(s);
            search.path.push(p1);
            let frame = Frame {
                above,
                ns,
                closers,
                blocked: 0,
                on_path: 1 << s | 1 << p1,
            };
            if search.dfs(&frame, &mut f)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// All holes of `g` with at most `max_len` vertices, in canonical form.
pub fn enumerate_holes(g: &Graph, max_len: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let _ = for_each_hole(g, max_len, DEFAULT_HOLE_STEPS, |h| {
        out.push(h.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn higher_than(v: usize) -> u64 {
    if v + 1 >= 64 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

struct Frame {
    above: u64,
    ns: u64,
    closers: u64,
    // union of N[p_1..p_{k-1}]
    blocked: u64,
    on_path: u64,
}

struct Search<'a> {
    adj: &'a [u64],
    max_len: usize,
    steps: u64,
    max_steps: u64,
    path: Vec<usize>,
}

impl Search<'_> {
    fn dfs<F>(&mut self, fr: &Frame, f: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::cap(
                "hole search steps",
                self.max_steps as usize,
                self.steps as usize,
            ));
        }
        let k = self.path.len() - 1;
        let pk = self.path[k];
        let cand = self.adj[pk] & fr.above & !fr.blocked & !fr.on_path;
        if k >= 2 && self.path.len() < self.max_len {
            let mut close = cand & fr.closers;
            while close != 0 {
                let w = close.trailing_zeros() as usize;
                close &= close - 1;
                self.path.push(w);
                let flow = f(&self.path);
                self.path.pop();
                if flow.is_break() {
                    return Ok(flow);
                }
            }
        }
        if self.path.len() + 2 > self.max_len {
            return Ok(ControlFlow::Continue(()));
        }
        let blocked = fr.blocked | self.adj[pk] | 1 << pk;
        let mut ext = cand & !fr.ns;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let next = Frame {
                above: fr.above,
                ns: fr.ns,
                closers: fr.closers & !blocked,
                blocked,
                on_path: fr.on_path | 1 << w,
            };
            if next.closers == 0 || !self.can_close(w, &next) {
                continue;
            }
            self.path.push(w);
            let flow = self.dfs(&next, f)?;
            self.path.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Whether some closer is reachable from `w` through vertices that could
    /// still be interior path vertices.
    fn can_close(&self, w: usize, fr: &Frame) -> bool {
        let interior = fr.above & !fr.blocked & !fr.ns & !fr.on_path;
        let mut seen = 1u64 << w;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut it = frontier;
            while it != 0 {
                let x = it.trailing_zeros() as usize;
                it &= it - 1;
                next |= self.adj[x];
            }
            if next & fr.closers != 0 {
                return true;
            }
            next &= interior & !seen;
            seen |= next;
            frontier = next;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn cycle_has_one_hole() {
        let h = enumerate_holes(&generators::cycle(5), 64).unwrap();
        assert_eq!(h, [alloc::vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn clique_has_none() {
        assert!(enumerate_holes(&generators::clique(4), 64).unwrap().is_empty());
    }

    #[test]
    fn k33_holes() {
        // K_{3,3} has 9 four-holes and no longer ones (6-cycles have chords).
        let h = enumerate_holes(&generators::complete_bipartite(3, 3), 64).unwrap();
        assert_eq!(h.len(), 9);
        assert!(h.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn max_len_respected() {
        let g = generators::theta(2, 3, 4).unwrap();
        let all = enumerate_holes(&g, 64).unwrap();
        assert_eq!(all.len(), 3);
        let short = enumerate_holes(&g, 5).unwrap();
        assert_eq!(short.len(), 1);
    }

    #[test]
    fn too_large() {
        assert!(enumerate_holes(&generators::path(65), 64).is_err());
    }
}
