//! Recursive construction of logarithmic-width tree decompositions.
//!
//! Each piece is split at clique cutsets; an atom without hubs is solved
//! directly, otherwise the hub layers drive a sequence of central bags
//! `β_0 ⊇ β_1 ⊇ ..`, the last of which is decomposed either directly
//! (no hubs left) or around a balanced hub. The decomposition is then
//! grown back out through the sequence.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::central_bag::{central_bag, contraction_with_hubs, extend_neighborhood, extend_tree, CentralBag};
use crate::detect::{self, Caps, Certificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, Induced};
use crate::hub_partition::{ceil_log2, is_balanced, partition_of};
use crate::separators::{clique_cutset_atoms, make_structured, ramsey, CliqueAtoms};
use crate::set::VertexSet;
use crate::treedec::{
    decomposition_from_order, exact_treewidth_capped, min_fill_order, TreeDecomposition, DEFAULT_EXACT_CAP,
};

/// `R(t,4) + R(t,4)(4δ + R(t,3))(⌈log₂ n⌉ + 1 + hdim)`.
pub fn width_bound(t: usize, n: usize, delta: usize, hdim: usize) -> usize {
    let r4 = ramsey(t, 4);
    r4 + r4 * (4 * delta + ramsey(t, 3)) * (ceil_log2(n) + 1 + hdim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub caps: Caps,
    /// Exact treewidth is used for hub-free pieces up to this size, min-fill above.
    pub exact_cap: usize,
    /// Verify membership in the class before building.
    pub check_class: bool,
}

impl Default for BuildOptions {
    fn default() -> BuildOptions {
        BuildOptions {
            caps: Caps::default(),
            exact_cap: DEFAULT_EXACT_CAP,
            check_class: true,
        }
    }
}

/// How one recursive call was handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Split at clique cutsets and glued.
    CliqueCutset,
    /// Contains a cube; one bag.
    Cube,
    /// No hubs at the end of the sequence.
    HubFree,
    /// A balanced hub at the end of the sequence.
    Balanced,
    /// Detection limits hit or the sequence broke down; solved directly.
    Fallback,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::CliqueCutset => "clique-cutset",
            Branch::Cube => "cube",
            Branch::HubFree => "hub-free",
            Branch::Balanced => "balanced",
            Branch::Fallback => "fallback",
        }
    }
}

/// One step `β_i → β_{i+1}` of a central-bag sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelStat {
    /// `|β_i|`.
    pub beta: usize,
    /// `|Hub(β_i)|`.
    pub hubs: usize,
    /// `|S'_{i+1}|`.
    pub s_prime: usize,
    pub core: usize,
    /// Components of `β_i \ β_{i+1}`.
    pub outside: usize,
    /// Largest bag growth when extending back through this step.
    pub growth: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub depth: usize,
    pub n: usize,
    pub branch: Branch,
    /// Length of the central-bag sequence.
    pub steps: usize,
    pub width: isize,
}

/// Outcome of the class check at the start of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassCheck {
    Passed,
    Violated(Certificate),
    /// A detection limit was hit.
    Skipped(String),
    Disabled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildReport {
    pub n: usize,
    pub t: usize,
    pub achieved_width: isize,
    pub bound: usize,
    pub delta_used: usize,
    pub hdim_used: usize,
    /// Sequence length for the largest atom.
    pub depth_final: usize,
    /// Sequence steps of the largest atom.
    pub levels: Vec<LevelStat>,
    pub trace: Vec<TraceEntry>,
    /// The input passed the class check and every claim checked on the way held.
    pub certified: bool,
    pub class: ClassCheck,
    pub notes: Vec<String>,
}

impl BuildReport {
    pub fn within_bound(&self) -> bool {
        self.achieved_width < 0 || self.achieved_width as usize <= self.bound
    }

    pub fn branch_count(&self, b: Branch) -> usize {
        self.trace.iter().filter(|e| e.branch == b).count()
    }
}

/// Joins decompositions of the atoms (each on the local ids of its atom)
/// along the atom tree, linking nodes whose bags hold the shared clique.
pub fn glue_at_clique(g: &Graph, atoms: &CliqueAtoms, parts: &[TreeDecomposition]) -> Result<TreeDecomposition> {
    if atoms.atoms.len() != parts.len() {
        return Err(Error::InvalidParameter(format!(
            "{} decompositions for {} atoms",
            parts.len(),
            atoms.atoms.len()
        )));
    }
    if parts.is_empty() {
        return Ok(TreeDecomposition::trivial(g.n()));
    }
    let mut lifted = Vec::with_capacity(parts.len());
    for (atom, t) in atoms.atoms.iter().zip(parts) {
        let ind = g.induced(atom);
        t.validate(&ind.graph)
            .map_err(|e| Error::InvalidDecomposition(format!("atom decomposition: {e}")))?;
        lifted.push(t.relabel(&ind.to_parent, g.n()));
    }
    let (mut out, offsets) = TreeDecomposition::union_of(&lifted, g.n());
    for e in &atoms.glue {
        let find = |i: usize| {
            lifted[i]
                .node_containing(&e.clique)
                .map(|x| x + offsets[i])
                .ok_or_else(|| Error::InvalidDecomposition(format!("no bag of atom {i} holds its glue clique")))
        };
        out.edges.push((find(e.a)?, find(e.b)?));
    }
    Ok(out)
}

/// Tree decomposition of `g` for graphs without theta, pyramid, generalized
/// prism and `K_t`, following the central-bag recursion.
///
/// Inputs outside the class, or too large for the detectors, are still
/// decomposed; the report then says the bound is not certified.
pub fn decompose(g: &Graph, t: usize, opts: &BuildOptions) -> Result<(TreeDecomposition, BuildReport)> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let mut run = Run {
        opts,
        t,
        delta: 1,
        certified: opts.check_class,
        notes: Vec::new(),
        trace: Vec::new(),
        largest: None,
    };
    let class = if opts.check_class {
        match detect::in_class_ct(g, t, &opts.caps) {
            Ok(None) => ClassCheck::Passed,
            Ok(Some(c)) => {
                run.uncertify(format!("input contains a {}", c.kind().name()));
                ClassCheck::Violated(c)
            }
            Err(e) if e.is_cap() => {
                run.uncertify(format!("class check skipped: {e}"));
                ClassCheck::Skipped(e.to_string())
            }
            Err(e) => return Err(e),
        }
    } else {
        run.uncertify("class check disabled".into());
        ClassCheck::Disabled
    };
    let mut hdim = 0;
    let layers = match detect::hubs(g, &opts.caps) {
        Ok(hubs) => {
            let p = partition_of(g, hubs);
            if let Err(e) = p.check(g) {
                run.claim(false, || format!("hub partition: {e}"))?;
            }
            run.delta = p.delta;
            hdim = p.order();
            p.layers
        }
        Err(e) if e.is_cap() => {
            run.uncertify(format!("hub search skipped: {e}"));
            Vec::new()
        }
        Err(e) => return Err(e),
    };
    let td = run.solve(g, &layers, 0)?;
    td.validate(g)
        .map_err(|e| Error::InvalidDecomposition(format!("builder output: {e}")))?;
    let (levels, depth_final) = run.largest.take().map(|(_, l, d)| (l, d)).unwrap_or_default();
    let report = BuildReport {
        n: g.n(),
        t,
        achieved_width: td.width(),
        bound: width_bound(t, g.n().max(1), run.delta, hdim),
        delta_used: run.delta,
        hdim_used: hdim,
        depth_final,
        levels,
        trace: run.trace,
        certified: run.certified,
        class,
        notes: run.notes,
    };
    if report.certified && !report.within_bound() {
        return Err(Error::Precondition(format!(
            "certified run reached width {} above the bound {}",
            report.achieved_width, report.bound
        )));
    }
    Ok((td, report))
}

struct Run<'a> {
    opts: &'a BuildOptions,
    t: usize,
    delta: usize,
    certified: bool,
    notes: Vec<String>,
    trace: Vec<TraceEntry>,
    largest: Option<(usize, Vec<LevelStat>, usize)>,
}

enum Final {
    HubFree,
    Balanced(usize),
    Stuck,
}

/// Layers restricted to the vertices of an induced subgraph, in its ids.
fn restrict(layers: &[VertexSet], ind: &Induced) -> Vec<VertexSet> {
    layers
        .iter()
        .map(|l| ind.localize(l))
        .filter(|l| !l.is_empty())
        .collect()
}

/// Largest `|out_i| - |in_i|` over matching bags.
fn growth(before: &[&VertexSet], after: &TreeDecomposition) -> usize {
    before
        .iter()
        .zip(&after.bags)
        .map(|(b, a)| a.len().saturating_sub(b.len()))
        .max()
        .unwrap_or(0)
}

impl Run<'_> {
    fn uncertify(&mut self, why: String) {
        self.certified = false;
        if !self.notes.contains(&why) {
            self.notes.push(why);
        }
    }

    /// A property the construction relies on. Fatal on certified runs.
    fn claim(&mut self, ok: bool, what: impl FnOnce() -> String) -> Result<()> {
        if ok {
            return Ok(());
        }
        let w = what();
        if self.certified {
            return Err(Error::Precondition(format!("claim failed on a certified run: {w}")));
        }
        self.uncertify(w);
        Ok(())
    }

    fn record(&mut self, depth: usize, n: usize, branch: Branch, steps: usize, td: &TreeDecomposition) {
        self.trace.push(TraceEntry {
            depth,
            n,
            branch,
            steps,
            width: td.width(),
        });
    }

    /// Exact search on small pieces, min-fill otherwise, then made structured.
    fn direct(&self, g: &Graph) -> Result<TreeDecomposition> {
        if g.n() == 0 {
            return Ok(TreeDecomposition::trivial(0));
        }
        let td = if g.n() <= self.opts.exact_cap {
            exact_treewidth_capped(g, self.opts.exact_cap)?.1
        } else {
            decomposition_from_order(g, &min_fill_order(g))
        };
        make_structured(g, &td)
    }

    /// Bag growth allowed per extension step.
    fn step_allowance(&self) -> usize {
        ramsey(self.t, 4) * (4 * self.delta + ramsey(self.t, 3))
    }

    fn solve(&mut self, g: &Graph, layers: &[VertexSet], depth: usize) -> Result<TreeDecomposition> {
        if g.n() == 0 {
            return Ok(TreeDecomposition::trivial(0));
        }
        let atoms = clique_cutset_atoms(g);
        if atoms.atoms.len() <= 1 {
            return self.atom(g, layers, depth);
        }
        let mut parts = Vec::with_capacity(atoms.atoms.len());
        for a in &atoms.atoms {
            let ind = g.induced(a);
            let sub = restrict(layers, &ind);
            parts.push(self.solve(&ind.graph, &sub, depth + 1)?);
        }
        let td = glue_at_clique(g, &atoms, &parts)?;
        self.record(depth, g.n(), Branch::CliqueCutset, 0, &td);
        Ok(td)
    }

    fn fallback(&mut self, g: &Graph, depth: usize, why: String) -> Result<TreeDecomposition> {
        self.uncertify(why);
        let td = self.direct(g)?;
        self.record(depth, g.n(), Branch::Fallback, 0, &td);
        Ok(td)
    }

    /// `g` has no clique cutset.
    fn atom(&mut self, g: &Graph, layers: &[VertexSet], depth: usize) -> Result<TreeDecomposition> {
        let caps = self.opts.caps;
        let n = g.n();
        match detect::find_cube(g, &caps) {
            Ok(Some(_)) => {
                let t = self.t;
                self.claim(n < 9 * t, || format!("cube atom on {n} vertices, not below 9t"))?;
                let td = TreeDecomposition::trivial(n);
                self.record(depth, n, Branch::Cube, 0, &td);
                return Ok(td);
            }
            Ok(None) => {}
            Err(e) if e.is_cap() => return self.fallback(g, depth, format!("cube search skipped: {e}")),
            Err(e) => return Err(e),
        }
        let hubs = match detect::hubs(g, &caps) {
            Ok(h) => h,
            Err(e) if e.is_cap() => return self.fallback(g, depth, format!("hub search skipped: {e}")),
            Err(e) => return Err(e),
        };
        let mut layers: Vec<VertexSet> = layers
            .iter()
            .map(|l| l.intersection(&hubs))
            .filter(|l| !l.is_empty())
            .collect();
        let covered: VertexSet = layers.iter().flatten().collect();
        if covered != hubs {
            self.claim(false, || "inherited hub layers miss a hub".into())?;
            let p = partition_of(g, hubs.clone());
            self.delta = self.delta.max(p.delta);
            layers = p.layers;
        }

        // the central-bag sequence; `seq[i]` holds β_i and the bag taken in it
        let mut seq: Vec<(VertexSet, CentralBag)> = Vec::new();
        let mut stats = Vec::new();
        let mut beta = g.vertices();
        let mut hb = hubs;
        let fin = loop {
            if hb.is_empty() {
                break Final::HubFree;
            }
            let i = seq.len();
            let ok = layers[..i.min(layers.len())].iter().all(|l| l.is_disjoint(&hb));
            self.claim(ok, || format!("earlier hub layers still hold hubs of β_{i}"))?;
            if i >= layers.len() {
                self.claim(false, || "hub layers exhausted before the hubs".into())?;
                break Final::Stuck;
            }
            let cap = 4 * self.delta;
            let ok = layers[i].iter().all(|v| g.adj(v).intersection_len(&hb) <= cap);
            self.claim(ok, || format!("a vertex of layer {i} has more than 4δ hub neighbours in β_{i}"))?;
            let bind = g.induced(&beta);
            let sp = bind.localize(&layers[i].intersection(&hb));
            if let Some(v) = sp.iter().find(|&v| is_balanced(&bind.graph, v)) {
                break Final::Balanced(bind.parent(v));
            }
            let cb = central_bag(&bind.graph, &sp)?;
            let next = bind.lift(&cb.beta);
            stats.push(LevelStat {
                beta: beta.len(),
                hubs: hb.len(),
                s_prime: sp.len(),
                core: cb.core.len(),
                outside: cb.outside_components(&bind.graph).len(),
                growth: 0,
            });
            seq.push((beta, cb));
            beta = next;
            let nb = g.induced(&beta);
            hb = match detect::hubs(&nb.graph, &caps) {
                Ok(h) => nb.lift(&h),
                Err(e) if e.is_cap() => {
                    self.uncertify(format!("hub search skipped: {e}"));
                    break Final::Stuck;
                }
                Err(e) => return Err(e),
            };
        };

        let bind = g.induced(&beta);
        let (mut td, branch) = match fin {
            Final::HubFree => (self.direct(&bind.graph)?, Branch::HubFree),
            Final::Stuck => (self.direct(&bind.graph)?, Branch::Fallback),
            Final::Balanced(v) => (self.around(g, &bind, v, &hb, &layers, depth)?, Branch::Balanced),
        };

        // grow back out through the sequence
        for (s, (parent, cb)) in seq.iter().enumerate().rev() {
            let pind = g.induced(parent);
            let graph_s = &g.induced(&pind.lift(&cb.beta)).graph;
            let tb = make_structured(graph_s, &td)?;
            let mut parts = Vec::new();
            for d in cb.outside_components(&pind.graph) {
                let sub = g.induced(&pind.lift(&d));
                let sl = restrict(&layers, &sub);
                parts.push(self.solve(&sub.graph, &sl, depth + 1)?);
            }
            let (out, _) = extend_tree(&pind.graph, cb, &tb, &parts)?;
            let before: Vec<&VertexSet> = tb.bags.iter().chain(parts.iter().flat_map(|p| &p.bags)).collect();
            let grew = growth(&before, &out);
            stats[s].growth = grew;
            let allow = self.step_allowance();
            self.claim(grew <= allow, || format!("central-bag step {s} grew a bag by {grew} > {allow}"))?;
            td = out;
        }
        let steps = seq.len();
        self.record(depth, n, branch, steps, &td);
        if self.largest.as_ref().is_none_or(|(m, _, _)| n > *m) {
            self.largest = Some((n, stats, steps));
        }
        Ok(td)
    }

    /// Decomposition of `β = bind` around the balanced hub `v` (ids of `g`).
    fn around(
        &mut self,
        g: &Graph,
        bind: &Induced,
        v: usize,
        hubs: &VertexSet,
        layers: &[VertexSet],
        depth: usize,
    ) -> Result<TreeDecomposition> {
        let bg = &bind.graph;
        let vl = bind.local(v).expect("v lies in β");
        let h = contraction_with_hubs(bg, vl, &bind.localize(hubs))?;
        if self.certified {
            match detect::hubs(&h.graph, &self.opts.caps) {
                Ok(hh) => self.claim(hh.is_empty(), || format!("the graph built around {v} has hubs"))?,
                Err(e) if e.is_cap() => self.notes.push(format!("wheel-freeness of H not checked: {e}")),
                Err(e) => return Err(e),
            }
        }
        let t0 = self.direct(&h.graph)?;
        let mut parts = Vec::with_capacity(h.components.len());
        for d in &h.components {
            let sub = g.induced(&bind.lift(d));
            let sl = restrict(layers, &sub);
            parts.push(self.solve(&sub.graph, &sl, depth + 1)?);
        }
        let out = extend_neighborhood(bg, &h, &t0, &parts)?;
        let before: Vec<&VertexSet> = t0.bags.iter().chain(parts.iter().flat_map(|p| &p.bags)).collect();
        let grew = growth(&before, &out);
        let allow = self.step_allowance();
        self.claim(grew <= allow, || format!("neighbourhood step grew a bag by {grew} > {allow}"))?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators as gen;
    use crate::treedec::exact_treewidth;

    #[test]
    fn bound_formula() {
        assert_eq!(width_bound(3, 1, 1, 0), 99);
        assert_eq!(width_bound(3, 8, 1, 0) - width_bound(3, 4, 1, 0), 90);
        assert!(width_bound(4, 10, 2, 1) > width_bound(3, 10, 2, 1));
        assert!(width_bound(3, 10, 3, 1) > width_bound(3, 10, 2, 1));
        assert!(width_bound(3, 10, 2, 2) > width_bound(3, 10, 2, 1));
    }

    #[test]
    fn glue() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]).unwrap();
        let atoms = clique_cutset_atoms(&g);
        assert_eq!(atoms.atoms.len(), 2);
        let parts: Vec<_> = atoms.atoms.iter().map(|a| exact_treewidth(&g.induced(a).graph).unwrap().1).collect();
        let td = glue_at_clique(&g, &atoms, &parts).unwrap();
        assert_eq!(td.validate(&g), Ok(()));
        assert_eq!(td.width(), 2);
        let p = gen::path(6);
        let atoms = clique_cutset_atoms(&p);
        let parts: Vec<_> = atoms.atoms.iter().map(|a| exact_treewidth(&p.induced(a).graph).unwrap().1).collect();
        let td = glue_at_clique(&p, &atoms, &parts).unwrap();
        assert_eq!(td.validate(&p), Ok(()));
        assert_eq!(td.width(), 1);
        assert!(glue_at_clique(&p, &atoms, &[]).is_err());
    }

    #[test]
    fn trees_and_cycles() {
        let opts = BuildOptions::default();
        for seed in 0..10 {
            let g = gen::random_in_class(12, 0.15, 3, seed, 200).unwrap().unwrap();
            let (td, r) = decompose(&g, 3, &opts).unwrap();
            assert_eq!(td.validate(&g), Ok(()));
            assert!(r.certified, "{:?}", r.notes);
        }
        let tree = gen::star(7);
        let (td, r) = decompose(&tree, 3, &opts).unwrap();
        assert_eq!(td.width(), 1);
        assert!(r.certified && r.within_bound());
        let c = gen::cycle(64);
        let (td, r) = decompose(&c, 3, &opts).unwrap();
        assert_eq!(td.width(), 2);
        assert!(r.certified);
        assert_eq!(r.trace.last().unwrap().branch, Branch::HubFree);
    }

    #[test]
    fn hubs_drive_the_sequence() {
        // C_13 plus a hub on 0, 2, 4; the long sector makes the hub unbalanced
        let mut es = gen::cycle(13).edges();
        es.extend([(13, 0), (13, 2), (13, 4)]);
        let g = Graph::from_edges(14, &es).unwrap();
        let (td, r) = decompose(&g, 3, &BuildOptions::default()).unwrap();
        assert_eq!(td.validate(&g), Ok(()));
        assert!(r.certified, "{:?}", r.notes);
        assert_eq!(r.hdim_used, 1);
        assert_eq!(r.depth_final, 1);
        assert_eq!(r.levels[0].outside, 1);
        assert!(r.within_bound() && td.width() >= exact_treewidth(&g).unwrap().0 as isize);
    }

    #[test]
    fn uncertified_inputs() {
        let k23 = gen::complete_bipartite(2, 3);
        let (td, r) = decompose(&k23, 4, &BuildOptions::default()).unwrap();
        assert_eq!(td.validate(&k23), Ok(()));
        assert!(!r.certified);
        let w = gen::wall(6).unwrap();
        let (td, r) = decompose(&w, 3, &BuildOptions::default()).unwrap();
        assert_eq!(td.validate(&w), Ok(()));
        assert!(!r.certified);
        assert!(decompose(&w, 0, &BuildOptions::default()).is_err());
    }

    #[test]
    fn cube_is_one_bag() {
        let c = gen::cube();
        let (td, r) = decompose(&c, 3, &BuildOptions { check_class: false, ..BuildOptions::default() }).unwrap();
        assert_eq!(td.len(), 1);
        assert_eq!(r.branch_count(Branch::Cube), 1);
    }
}
