//! PACE-style `.gr` and `.td` files and the `key=value` build report.

use std::fmt::Write as _;

use logtw_core::builder::{BuildReport, ClassCheck};
use logtw_core::{Graph, TreeDecomposition, VertexSet};

use crate::error::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse(format!("line {line}: {}", msg.into()))
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, CliError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

/// A graph with the comment lines that came with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrFile {
    pub graph: Graph,
    pub comments: Vec<String>,
}

impl GrFile {
    /// Value of a `c <key> <value>` comment.
    pub fn comment(&self, key: &str) -> Option<&str> {
        self.comments.iter().find_map(|c| {
            let (k, v) = c.split_once(' ')?;
            (k == key).then_some(v.trim())
        })
    }
}

pub fn parse_gr(text: &str) -> Result<GrFile, CliError> {
    let comments = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('c'))
        .map(|c| c.trim().to_string())
        .collect();
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| CliError::Parse("empty graph file".into()))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("p") || it.next() != Some("tw") {
        return Err(parse_err(hl, "expected header `p tw <n> <m>`"));
    }
    let n = num(it.next(), hl, "vertex count")?;
    let m = num(it.next(), hl, "edge count")?;
    if it.next().is_some() {
        return Err(parse_err(hl, "trailing tokens in header"));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        let u = num(it.next(), ln, "endpoint")?;
        let v = num(it.next(), ln, "endpoint")?;
        if it.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse_err(ln, format!("vertex out of range 1..={n}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(CliError::Parse(format!("header promises {m} edges, found {}", edges.len())));
    }
    let graph = Graph::from_edges(n, &edges).map_err(|e| CliError::Parse(e.to_string()))?;
    if graph.m() != m {
        return Err(CliError::Parse("duplicate edges".into()));
    }
    Ok(GrFile { graph, comments })
}

pub fn write_gr(g: &Graph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        writeln!(s, "c {c}").unwrap();
    }
    writeln!(s, "p tw {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition, CliError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| CliError::Parse("empty decomposition file".into()))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("s") || it.next() != Some("td") {
        return Err(parse_err(hl, "expected header `s td <N> <w+1> <n>`"));
    }
    let nodes = num(it.next(), hl, "bag count")?;
    let max_bag = num(it.next(), hl, "bag size")?;
    let n = num(it.next(), hl, "vertex count")?;
    let mut bags = vec![None; nodes];
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        if l.starts_with('b') {
            it.next();
            let i = num(it.next(), ln, "bag id")?;
            if i == 0 || i > nodes {
                return Err(parse_err(ln, format!("bag id out of range 1..={nodes}")));
            }
            let mut bag = VertexSet::new();
            for tok in it {
                let v = num(Some(tok), ln, "vertex")?;
                if v == 0 || v > n {
                    return Err(parse_err(ln, format!("vertex out of range 1..={n}")));
                }
                bag.insert(v - 1);
            }
            if bags[i - 1].replace(bag).is_some() {
                return Err(parse_err(ln, format!("bag {i} given twice")));
            }
        } else {
            let a = num(it.next(), ln, "bag id")?;
            let b = num(it.next(), ln, "bag id")?;
            if it.next().is_some() {
                return Err(parse_err(ln, "trailing tokens"));
            }
            if a == 0 || b == 0 || a > nodes || b > nodes {
                return Err(parse_err(ln, format!("tree edge outside 1..={nodes}")));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| CliError::Parse(format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    let largest = bags.iter().map(VertexSet::len).max().unwrap_or(0);
    if largest != max_bag {
        return Err(CliError::Parse(format!("header says the largest bag has {max_bag} vertices, found {largest}")));
    }
    Ok(TreeDecomposition { bags, edges, host_n: n })
}

pub fn write_td(td: &TreeDecomposition) -> String {
    let mut s = String::new();
    writeln!(s, "s td {} {} {}", td.len(), td.max_bag(), td.host_n).unwrap();
    for (i, b) in td.bags.iter().enumerate() {
        write!(s, "b {}", i + 1).unwrap();
        for v in b {
            write!(s, " {}", v + 1).unwrap();
        }
        s.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(s, "{} {}", a + 1, b + 1).unwrap();
    }
    s
}

pub fn class_name(c: &ClassCheck) -> &'static str {
    match c {
        ClassCheck::Passed => "passed",
        ClassCheck::Violated(_) => "violated",
        ClassCheck::Skipped(_) => "skipped",
        ClassCheck::Disabled => "disabled",
    }
}

pub fn write_report(r: &BuildReport) -> String {
    use logtw_core::builder::Branch::*;
    let mut s = String::new();
    let mut kv = |k: &str, v: &dyn std::fmt::Display| writeln!(s, "{k}={v}").unwrap();
    kv("n", &r.n);
    kv("t", &r.t);
    kv("achieved_width", &r.achieved_width);
    kv("bound", &r.bound);
    kv("delta", &r.delta_used);
    kv("hdim", &r.hdim_used);
    kv("depth_final", &r.depth_final);
    kv("certified", &r.certified);
    kv("class", &class_name(&r.class));
    for b in [CliqueCutset, Cube, HubFree, Balanced, Fallback] {
        kv(&format!("branch.{}", b.name()), &r.branch_count(b));
    }
    for (i, l) in r.levels.iter().enumerate() {
        kv(
            &format!("level.{i}"),
            &format_args!(
                "beta={} hubs={} s_prime={} core={} outside={} growth={}",
                l.beta, l.hubs, l.s_prime, l.core, l.outside, l.growth
            ),
        );
    }
    for (i, note) in r.notes.iter().enumerate() {
        kv(&format!("note.{i}"), note);
    }
    s
}

/// Parses `key=value` lines; later keys win.
pub fn parse_report(text: &str) -> std::collections::BTreeMap<String, String> {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use logtw_core::generators as gen;
    use logtw_core::treedec::exact_treewidth;

    #[test]
    fn gr_round_trip() {
        let g = gen::petersen();
        let text = write_gr(&g, &["t 4".into()]);
        let f = parse_gr(&text).unwrap();
        assert_eq!(f.graph, g);
        assert_eq!(f.comment("t"), Some("4"));
        assert_eq!(write_gr(&f.graph, &f.comments), text);
    }

    #[test]
    fn td_round_trip() {
        let g = gen::wall(3).unwrap();
        let (_, td) = exact_treewidth(&g).unwrap();
        let text = write_td(&td);
        assert_eq!(parse_td(&text).unwrap(), td);
        assert!(text.starts_with(&format!("s td {} 4 {}", td.len(), g.n())));
    }

    #[test]
    fn exact_text() {
        let g = gen::path(3);
        assert_eq!(write_gr(&g, &[]), "p tw 3 2\n1 2\n2 3\n");
        let td = TreeDecomposition {
            bags: vec![[0, 1].into_iter().collect(), [1, 2].into_iter().collect()],
            edges: vec![(0, 1)],
            host_n: 3,
        };
        assert_eq!(write_td(&td), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "p td 3 1\n1 2\n", "p tw 3 2\n1 2\n", "p tw 2 1\n1 3\n", "p tw 2 1\n1 x\n", "p tw 2 2\n1 2\n2 1\n"] {
            assert!(matches!(parse_gr(bad), Err(CliError::Parse(_))), "{bad:?}");
        }
        for bad in ["s td 1 1 2\nb 1 3\n", "s td 2 1 2\nb 1 1\n", "s td 1 2 2\nb 1 1\n", "s td 1 1 1\nb 2 1\n"] {
            assert!(matches!(parse_td(bad), Err(CliError::Parse(_))), "{bad:?}");
        }
    }
}
