//! The deterministic test corpus.

use std::path::Path;

use logtw_core::detect::{self, Caps};
use logtw_core::Graph;

use crate::error::CliError;
use crate::families::{default_t, generate};
use crate::format::write_gr;

pub const MAX_N: usize = 60;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    /// The `t` to decompose with.
    pub t: usize,
    /// `gen` arguments reproducing the graph.
    pub spec: String,
    pub seed: u64,
    pub graph: Graph,
}

impl Entry {
    pub fn file_text(&self) -> String {
        let comments = [
            format!("family {}", self.spec),
            format!("seed {}", self.seed),
            format!("t {}", self.t),
        ];
        write_gr(&self.graph, &comments)
    }
}

struct Builder {
    out: Vec<Entry>,
}

impl Builder {
    fn push(&mut self, spec: &str, seed: u64, t: Option<usize>) -> Result<(), CliError> {
        let words: Vec<String> = spec.split_whitespace().map(String::from).collect();
        let graph = generate(&words[0], &words[1..], seed)?;
        self.add(spec, seed, t, graph);
        Ok(())
    }

    fn add(&mut self, spec: &str, seed: u64, t: Option<usize>, graph: Graph) {
        let t = t.unwrap_or_else(|| default_t(&graph));
        let mut name = spec.replace([' ', ','], "-");
        if matches!(spec.split(' ').next(), Some("random" | "class")) {
            name = format!("{name}-s{seed}");
        }
        self.out.push(Entry { name, t, spec: spec.into(), seed, graph });
    }
}

fn in_class(g: &Graph, t: usize) -> bool {
    matches!(detect::in_class_ct(g, t, &Caps::default()), Ok(None))
}

/// Rejection-sampled members of `C_t`, `count` of them, on 10..=60 vertices.
fn class_members(b: &mut Builder, t: usize, count: usize) -> Result<(), CliError> {
    let mut got = 0;
    let mut seed = 0u64;
    while got < count {
        let n = 10 + (seed as usize * 7) % (MAX_N - 9);
        let c = [1.2, 1.6, 2.0][seed as usize % 3];
        let p = ((c / n as f64) * 1000.0).round() / 1000.0;
        let spec = format!("class {n} {p} {t}");
        let words: Vec<String> = spec.split_whitespace().map(String::from).collect();
        if let Ok(g) = generate("class", &words[1..], 1000 * t as u64 + seed) {
            b.add(&spec, 1000 * t as u64 + seed, Some(t), g);
            got += 1;
        }
        seed += 1;
    }
    Ok(())
}

/// Holes with one or two hubs on spaced spokes, kept when in `C_4` with
/// a hub.
fn wheel_members(b: &mut Builder, count: usize) -> Result<(), CliError> {
    const SHAPES: [&str; 3] = ["0,2,4", "0,1,2,4", "0,1,3,4"];
    let mut got = 0;
    for l in 12..=MAX_N - 2 {
        for (i, s1) in SHAPES.iter().enumerate() {
            for second in [None, Some(SHAPES[i]), Some(SHAPES[(i + 1) % 3])] {
                let spec = match second {
                    None => format!("wheels {l} {s1}"),
                    Some(s2) => format!("wheels {l} {s1} {s2}"),
                };
                let words: Vec<String> = spec.split_whitespace().map(String::from).collect();
                let g = generate("wheels", &words[1..], 0)?;
                if in_class(&g, 4) && !detect::hubs(&g, &Caps::default()).map(|h| h.is_empty()).unwrap_or(true) {
                    b.add(&spec, 0, Some(4), g);
                    got += 1;
                    if got == count {
                        return Ok(());
                    }
                }
            }
        }
    }
    Err(CliError::Other(format!("only {got} wheel members found")))
}

/// Every corpus graph, in a fixed order.
pub fn build() -> Result<Vec<Entry>, CliError> {
    let mut b = Builder { out: Vec::new() };
    for k in 2..=6 {
        b.push(&format!("wall {k}"), 0, None)?;
    }
    for n in (3..=MAX_N).step_by(3) {
        b.push(&format!("cycle {n}"), 0, None)?;
    }
    for s in ["path 10", "path 30", "path 60", "star 10", "star 40", "clique 3", "clique 4", "clique 5", "bipartite 2 3", "bipartite 3 3", "petersen", "cube"] {
        b.push(s, 0, None)?;
    }
    let ls = [2, 3, 5, 8];
    for (i, &x) in ls.iter().enumerate() {
        for (j, &y) in ls.iter().enumerate().skip(i) {
            for &z in &ls[j..] {
                b.push(&format!("theta {x} {y} {z}"), 0, None)?;
            }
        }
    }
    for (x, y, z) in [(1, 2, 2), (1, 2, 3), (1, 3, 5), (2, 2, 2), (2, 3, 4), (3, 3, 3), (1, 4, 6), (2, 5, 5)] {
        b.push(&format!("pyramid {x} {y} {z}"), 0, None)?;
    }
    for (x, y, z) in [(1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 2, 2), (3, 3, 3), (1, 3, 6)] {
        b.push(&format!("prism {x} {y} {z}"), 0, None)?;
    }
    for (x, y) in [(2, 2), (2, 3), (3, 4), (4, 4)] {
        b.push(&format!("pinched-prism {x} {y}"), 0, None)?;
    }
    for i in 0..40u64 {
        let n = 5 + (i as usize * 11) % (MAX_N - 4);
        let p = [0.05, 0.1, 0.2, 0.35][i as usize % 4];
        b.push(&format!("random {n} {p}"), 500 + i, None)?;
    }
    class_members(&mut b, 3, 40)?;
    class_members(&mut b, 4, 40)?;
    wheel_members(&mut b, 20)?;
    b.push("wheel 13 0 2 4", 0, Some(3))?;
    Ok(b.out)
}

/// Writes `<name>.gr` for every entry, plus `MANIFEST` listing `name t`.
pub fn write(dir: &Path) -> Result<usize, CliError> {
    std::fs::create_dir_all(dir)?;
    let entries = build()?;
    let mut manifest = String::new();
    for e in &entries {
        std::fs::write(dir.join(format!("{}.gr", e.name)), e.file_text())?;
        manifest.push_str(&format!("{} {}\n", e.name, e.t));
    }
    std::fs::write(dir.join("MANIFEST"), manifest)?;
    Ok(entries.len())
}
