#![allow(dead_code)]

use logtw_core::detect::{self, Caps};
use logtw_core::generators as gen;
use logtw_core::Graph;

pub fn caps() -> Caps {
    Caps::default()
}

pub fn in_ct(g: &Graph, t: usize) -> bool {
    matches!(detect::in_class_ct(g, t, &caps()), Ok(None))
}

/// Rejection-sampled members of `C_t` on `lo..=hi` vertices.
pub fn sampled_members(t: usize, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count && seed < 50 * count as u64 {
        let n = lo + (seed as usize % (hi - lo + 1));
        let p = [0.15, 0.22, 0.3][seed as usize % 3];
        if let Some(g) = gen::random_in_class(n, p, t, seed, 40).unwrap() {
            out.push(g);
        }
        seed += 1;
    }
    out
}

fn splitmix(x: &mut u64) -> u64 {
    *x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Members of `C_t` with at least one hub: a hole with one or two hubs on
/// spaced triples, plus a few random extra vertices, kept when the result is
/// in the class.
pub fn hub_members(t: usize, count: usize, max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut state = 17u64;
    let mut tries = 0;
    while out.len() < count && tries < 200 * count {
        tries += 1;
        let r = splitmix(&mut state);
        let hubs = 1 + (r >> 8) as usize % 2;
        let len = (7 + (r % 7) as usize).min(max_n - hubs);
        let mut es = gen::cycle(len).edges();
        let mut n = len;
        for h in 0..hubs {
            let base = if h == 0 { 0 } else { len / 2 };
            let shape = (r >> (12 + 2 * h)) % 3;
            let tri: &[usize] = match shape {
                0 => &[0, 2, 4],
                1 => &[0, 1, 2, 4],
                _ => &[0, 1, 3, 4],
            };
            for &o in tri {
                es.push(((base + o) % len, n));
            }
            n += 1;
        }
        let extra = (r >> 20) as usize % 3;
        for _ in 0..extra {
            if n >= max_n {
                break;
            }
            let mut s = splitmix(&mut state);
            for u in 0..n {
                if s % 4 == 0 {
                    es.push((u, n));
                }
                s /= 4;
                if s == 0 {
                    s = splitmix(&mut state);
                }
            }
            n += 1;
        }
        let g = Graph::from_edges(n, &es).unwrap();
        if !in_ct(&g, t) {
            continue;
        }
        if detect::hubs(&g, &caps()).map(|h| h.is_empty()).unwrap_or(true) {
            continue;
        }
        out.push(g);
    }
    out
}

/// Class corpus on at most 14 vertices: sampled members and hub members.
pub fn class_corpus(t: usize) -> Vec<Graph> {
    let mut v = sampled_members(t, 40, 6, 14);
    v.extend(hub_members(t, 40, 14));
    v
}

/// A seeded permutation of `0..n`.
pub fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut state = seed;
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    v
}
