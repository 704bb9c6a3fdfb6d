//! Width against `⌈log₂ n⌉` on sampled (theta, triangle)-free graphs or on
//! a directory of `.gr` files.

use std::fmt::Write as _;
use std::path::Path;

use logtw_core::builder::{decompose, BuildOptions, BuildReport};
use logtw_core::generators as gen;
use logtw_core::hub_partition::ceil_log2;
use logtw_core::Graph;

use crate::error::CliError;
use crate::families::default_t;
use crate::format::parse_gr;

pub const HEADER: &str = "name\tn\tm\twidth\tlog2n\tbound\tdelta\thdim\tcertified";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub width: isize,
    pub log2n: usize,
    pub bound: usize,
    pub delta: usize,
    pub hdim: usize,
    pub certified: bool,
}

impl Row {
    fn new(name: String, g: &Graph, r: &BuildReport) -> Row {
        Row {
            name,
            n: g.n(),
            m: g.m(),
            width: r.achieved_width,
            log2n: ceil_log2(g.n()),
            bound: r.bound,
            delta: r.delta_used,
            hdim: r.hdim_used,
            certified: r.certified,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.name, self.n, self.m, self.width, self.log2n, self.bound, self.delta, self.hdim, self.certified
        )
    }

    pub fn parse(line: &str) -> Option<Row> {
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 9 {
            return None;
        }
        Some(Row {
            name: f[0].into(),
            n: f[1].parse().ok()?,
            m: f[2].parse().ok()?,
            width: f[3].parse().ok()?,
            log2n: f[4].parse().ok()?,
            bound: f[5].parse().ok()?,
            delta: f[6].parse().ok()?,
            hdim: f[7].parse().ok()?,
            certified: f[8].parse().ok()?,
        })
    }
}

/// A (theta, triangle)-free sample on `n` vertices with about `0.75 n` edges.
pub fn sample(n: usize, seed: u64) -> Result<Graph, CliError> {
    let p = (1.5 / n as f64).min(1.0);
    gen::random_in_class(n, p, 3, seed, 1000)?
        .ok_or_else(|| CliError::Other(format!("no (theta, triangle)-free sample on {n} vertices")))
}

pub fn sampled(sizes: &[usize], seeds: u64, opts: &BuildOptions) -> Result<Vec<Row>, CliError> {
    let mut rows = Vec::new();
    for seed in 0..seeds {
        for &n in sizes {
            let g = sample(n, seed)?;
            let (_, r) = decompose(&g, 3, opts)?;
            rows.push(Row::new(format!("sample-{n}-s{seed}"), &g, &r));
        }
    }
    Ok(rows)
}

/// One row per `.gr` file, in name order; `t` comes from a `c t` comment.
pub fn directory(dir: &Path, opts: &BuildOptions) -> Result<Vec<Row>, CliError> {
    let mut files: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gr"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    for f in files {
        let gr = parse_gr(&std::fs::read_to_string(&f)?)?;
        let t = match gr.comment("t") {
            Some(t) => t.parse().map_err(|_| CliError::Parse(format!("{}: bad t comment", f.display())))?,
            None => default_t(&gr.graph),
        };
        let (_, r) = decompose(&gr.graph, t, opts)?;
        let name = f.file_stem().unwrap_or_default().to_string_lossy().into_owned();
        rows.push(Row::new(name, &gr.graph, &r));
    }
    Ok(rows)
}

pub fn table(rows: &[Row]) -> String {
    let mut s = String::new();
    writeln!(s, "{HEADER}").unwrap();
    for r in rows {
        writeln!(s, "{}", r.line()).unwrap();
    }
    s
}
