//! Named graph families and seeded random graphs.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detect;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced invalid edge")
}

/// Path on `n` vertices `0 - 1 - .. - n-1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Cycle `0 - 1 - .. - n-1 - 0`. Panics if `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    build(n, &edges)
}

pub fn clique(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

/// Star with center `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// The `k × k` wall drawn as rows of bricks.
///
/// Vertex `(r, c)` exists for `r in 0..k` and `c in 0..2k` except that the
/// first row keeps only even columns and the last row only the columns with
/// `k + c` even. Consecutive vertices of a row are adjacent, and `(r, c)` is
/// joined to `(r + 1, c)` when `r + c` is even. Ids are assigned row by row.
pub fn wall(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("wall needs k >= 2, got {k}")));
    }
    let present = |r: usize, c: usize| {
        if r == 0 {
            c % 2 == 0 && c <= 2 * k - 2
        } else if r == k - 1 {
            (k + c) % 2 == 0
        } else {
            true
        }
    };
    let mut id = alloc::vec![alloc::vec![usize::MAX; 2 * k]; k];
    let mut n = 0;
    for (r, row) in id.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            if present(r, c) {
                *slot = n;
                n += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for r in 0..k {
        let row: Vec<usize> = id[r].iter().copied().filter(|&x| x != usize::MAX).collect();
        for w in row.windows(2) {
            edges.push((w[0], w[1]));
        }
        if r + 1 < k {
            for c in 0..2 * k {
                if (r + c) % 2 == 0 && id[r][c] != usize::MAX && id[r + 1][c] != usize::MAX {
                    edges.push((id[r][c], id[r + 1][c]));
                }
            }
        }
    }
    Ok(build(n, &edges))
}

/// Line graph: one vertex per edge of `g` (in `g.edges()` order), adjacent
/// when the edges share an end.
pub fn line_graph(g: &Graph) -> Graph {
    let es = g.edges();
    let mut edges = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    build(es.len(), &edges)
}

/// Appends a path of `len` edges from `from` to `to`, creating `len - 1`
/// new interior vertices starting at id `*next`.
fn add_path(edges: &mut Vec<(usize, usize)>, next: &mut usize, from: usize, to: usize, len: usize) {
    let mut prev = from;
    for _ in 1..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, to));
}

/// Theta with ends `0`, `1` and paths of the given lengths (all ≥ 2).
pub fn theta(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    if l1 < 2 || l2 < 2 || l3 < 2 {
        return Err(Error::InvalidParameter(format!(
            "theta paths need length >= 2, got ({l1}, {l2}, {l3})"
        )));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for l in [l1, l2, l3] {
        add_path(&mut edges, &mut next, 0, 1, l);
    }
    Ok(build(next, &edges))
}

/// Pyramid with apex `0` and base triangle `1, 2, 3`; path `i` runs from the
/// apex to base vertex `i`. Lengths ≥ 1 with at most one equal to 1.
pub fn pyramid(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    let ls = [l1, l2, l3];
    if ls.contains(&0) || ls.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::InvalidParameter(format!(
            "pyramid paths need length >= 1 with at most one of length 1, got ({l1}, {l2}, {l3})"
        )));
    }
    let mut edges = alloc::vec![(1, 2), (1, 3), (2, 3)];
    let mut next = 4;
    for (i, l) in ls.into_iter().enumerate() {
        add_path(&mut edges, &mut next, 0, i + 1, l);
    }
    Ok(build(next, &edges))
}

/// Prism with triangles `0, 1, 2` and `3, 4, 5`; path `i` joins `i` to
/// `i + 3`. Lengths ≥ 1.
pub fn prism(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    let ls = [l1, l2, l3];
    if ls.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "prism paths need length >= 1, got ({l1}, {l2}, {l3})"
        )));
    }
    let mut edges = alloc::vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    let mut next = 6;
    for (i, l) in ls.into_iter().enumerate() {
        add_path(&mut edges, &mut next, i, i + 3, l);
    }
    Ok(build(next, &edges))
}

/// Pinched prism with center `0`. The hole is `1 - 2 ~ 3 - 4 ~ 1` where
/// `2 ~ 3` has length `l1`, `4 ~ 1` has length `l2` (both ≥ 2), and the
/// center sees exactly `1, 2, 3, 4`.
pub fn pinched_prism(l1: usize, l2: usize) -> Result<Graph> {
    if l1 < 2 || l2 < 2 {
        return Err(Error::InvalidParameter(format!(
            "pinched prism paths need length >= 2, got ({l1}, {l2})"
        )));
    }
    let mut edges = alloc::vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)];
    let mut next = 5;
    add_path(&mut edges, &mut next, 2, 3, l1);
    add_path(&mut edges, &mut next, 4, 1, l2);
    Ok(build(next, &edges))
}

/// The cube: hole `0..6`, vertex `6` complete to `{0, 2, 4}` and vertex `7`
/// complete to `{1, 3, 5}`.
pub fn cube() -> Graph {
    let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.extend([(6, 0), (6, 2), (6, 4), (7, 1), (7, 3), (7, 5)]);
    build(8, &edges)
}

fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn sample(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_f64(rng) < p {
                edges.push((u, v));
            }
        }
    }
    build(n, &edges)
}

/// Erdős–Rényi `G(n, p)`, seeded. Pairs are decided in lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    Ok(sample(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Rejection-samples `G(n, p)` until a member of the (theta, pyramid,
/// generalized prism, `K_t`)-free class appears. Samples whose class check
/// exceeds a detection cap count as rejections.
pub fn random_in_class(n: usize, p: f64, t: usize, seed: u64, max_tries: usize) -> Result<Option<Graph>> {
    random_matching(n, p, seed, max_tries, |g| {
        matches!(detect::in_class_ct(g, t, &detect::Caps::default()), Ok(None))
    })
}

/// Rejection-samples `G(n, p)` until `accept` holds.
pub fn random_matching(
    n: usize,
    p: f64,
    seed: u64,
    max_tries: usize,
    mut accept: impl FnMut(&Graph) -> bool,
) -> Result<Option<Graph>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let g = sample(n, p, &mut rng);
        if accept(&g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_shape() {
        let w5 = wall(5).unwrap();
        assert_eq!(w5.n(), 5 + 3 * 10 + 5);
        assert_eq!(w5.max_degree(), 3);
        let w3 = wall(3).unwrap();
        assert_eq!(w3.n(), 12);
        assert!(w3.is_connected());
        assert!(wall(1).is_err());
        let w2 = wall(2).unwrap();
        assert_eq!((w2.n(), w2.m()), (4, 4));
        assert!(w2.is_connected() && (0..4).all(|v| w2.degree(v) == 2));
    }

    #[test]
    fn line_graph_of_path() {
        assert_eq!(line_graph(&path(4)), path(3));
    }

    #[test]
    fn theta_222_is_k23() {
        let t = theta(2, 2, 2).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.m(), 6);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.degree(1), 3);
        assert!(theta(1, 2, 2).is_err());
    }

    #[test]
    fn constraint_errors() {
        assert!(pyramid(1, 1, 2).is_err());
        assert!(pyramid(1, 2, 2).is_ok());
        assert!(prism(0, 1, 1).is_err());
        assert!(pinched_prism(1, 3).is_err());
        assert_eq!(pinched_prism(2, 2).unwrap().n(), 7);
        assert!(random_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_graph(20, 0.1, 7).unwrap();
        let b = random_graph(20, 0.1, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(random_graph(10, 0.0, 1).unwrap().m(), 0);
        assert_eq!(random_graph(6, 1.0, 1).unwrap().m(), 15);
    }
}
