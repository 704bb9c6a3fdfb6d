//! Brute-force reference implementations.
//!
//! Everything here reads the input only through `n()` and `has_edge()` and
//! works on private bitmask copies, so it shares no search code with the
//! modules it is used to check.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Structures recognised by [`brute_contains_induced`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Theta,
    Pyramid,
    Prism,
    PinchedPrism,
    Cube,
    Clique(usize),
}

fn masks(g: &Graph, cap: usize, what: &'static str) -> Result<Vec<u32>> {
    let n = g.n();
    if n > cap {
        return Err(Error::cap(what, cap, n));
    }
    Ok((0..n)
        .map(|u| (0..n).filter(|&v| v != u && g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect())
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn connected(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = 1u32 << set.trailing_zeros();
    loop {
        let mut grow = seen;
        for v in bits(seen) {
            grow |= adj[v] & set;
        }
        if grow == seen {
            return seen == set;
        }
        seen = grow;
    }
}

fn components(adj: &[u32], set: u32) -> Vec<u32> {
    let mut left = set;
    let mut out = Vec::new();
    while left != 0 {
        let mut c = 1u32 << left.trailing_zeros();
        loop {
            let mut grow = c;
            for v in bits(c) {
                grow |= adj[v] & left;
            }
            if grow == c {
                break;
            }
            c = grow;
        }
        left &= !c;
        out.push(c);
    }
    out
}

/// Exact treewidth by branch and bound over elimination orders (n ≤ 12).
pub fn brute_treewidth(g: &Graph) -> Result<usize> {
    let adj = masks(g, 12, "brute treewidth")?;
    let n = adj.len();
    if n == 0 {
        return Ok(0);
    }
    let mut best = n - 1;
    elim(&adj, (1u32 << n) - 1, 0, None, &mut best);
    Ok(best)
}

fn elim(adj: &[u32], alive: u32, cur: usize, last: Option<(usize, u32)>, best: &mut usize) {
    if alive == 0 {
        *best = (*best).min(cur);
        return;
    }
    let mindeg = bits(alive)
        .map(|v| (adj[v] & alive).count_ones() as usize)
        .min()
        .unwrap();
    if cur.max(mindeg) >= *best {
        return;
    }
    for v in bits(alive) {
        // Eliminations of non-adjacent vertices commute; fix their order.
        if let Some((u, u_nbrs)) = last {
            if u_nbrs >> v & 1 == 0 && v < u {
                continue;
            }
        }
        let nb = adj[v] & alive;
        let w = cur.max(nb.count_ones() as usize);
        if w >= *best {
            continue;
        }
        let mut next = adj.to_vec();
        for x in bits(nb) {
            next[x] |= nb & !(1 << x);
        }
        elim(&next, alive & !(1 << v), w, Some((v, nb)), best);
    }
}

/// Whether `g` contains `pattern` as an induced subgraph, by checking every
/// vertex subset (n ≤ 12).
pub fn brute_contains_induced(g: &Graph, pattern: Pattern) -> Result<bool> {
    let adj = masks(g, 12, "brute induced containment")?;
    let n = adj.len();
    for set in 1u32..(1u32 << n) {
        if is_pattern(&adj, set, pattern) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn deg(adj: &[u32], set: u32, v: usize) -> u32 {
    (adj[v] & set).count_ones()
}

fn is_pattern(adj: &[u32], set: u32, p: Pattern) -> bool {
    match p {
        Pattern::Clique(t) => {
            set.count_ones() as usize == t && bits(set).all(|v| deg(adj, set, v) as usize + 1 == t)
        }
        Pattern::Theta => is_theta(adj, set),
        Pattern::Pyramid => is_pyramid(adj, set),
        Pattern::Prism => is_prism(adj, set),
        Pattern::PinchedPrism => is_pinched(adj, set),
        Pattern::Cube => is_cube(adj, set),
    }
}

fn degree_split(adj: &[u32], set: u32) -> Option<(u32, u32)> {
    let (mut two, mut three) = (0u32, 0u32);
    for v in bits(set) {
        match deg(adj, set, v) {
            2 => two |= 1 << v,
            3 => three |= 1 << v,
            _ => return None,
        }
    }
    Some((two, three))
}

fn is_theta(adj: &[u32], set: u32) -> bool {
    let Some((_, three)) = degree_split(adj, set) else {
        return false;
    };
    if three.count_ones() != 2 || !connected(adj, set) {
        return false;
    }
    let mut it = bits(three);
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    if adj[a] >> b & 1 == 1 {
        return false;
    }
    let comps = components(adj, set & !three);
    comps.len() == 3
        && comps
            .iter()
            .all(|&c| bits(c).any(|x| adj[x] >> a & 1 == 1) && bits(c).any(|x| adj[x] >> b & 1 == 1))
}

/// Walks from `start` (whose predecessor is `prev`) along degree-2 vertices
/// until it meets a vertex of `stop`. Returns the end and the visited bits.
fn trace(adj: &[u32], set: u32, two: u32, stop: u32, prev: usize, start: usize) -> Option<(usize, u32, usize)> {
    let (mut p, mut c) = (prev, start);
    let mut seen = 0u32;
    let mut len = 1;
    loop {
        if stop >> c & 1 == 1 {
            return Some((c, seen, len));
        }
        if two >> c & 1 == 0 || seen >> c & 1 == 1 {
            return None;
        }
        seen |= 1 << c;
        let nxt = adj[c] & set & !(1 << p);
        if nxt.count_ones() != 1 {
            return None;
        }
        p = c;
        c = nxt.trailing_zeros() as usize;
        len += 1;
    }
}

fn triangles_in(adj: &[u32], within: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for a in bits(within) {
        for b in bits(adj[a] & within) {
            if b <= a {
                continue;
            }
            for c in bits(adj[a] & adj[b] & within) {
                if c > b {
                    out.push(1 << a | 1 << b | 1 << c);
                }
            }
        }
    }
    out
}

fn is_pyramid(adj: &[u32], set: u32) -> bool {
    let Some((two, three)) = degree_split(adj, set) else {
        return false;
    };
    if three.count_ones() != 4 {
        return false;
    }
    for tri in triangles_in(adj, three) {
        let apex = three & !tri;
        let a = apex.trailing_zeros() as usize;
        let mut covered = three;
        let mut ones = 0;
        let mut ok = true;
        for b in bits(tri) {
            let out = adj[b] & set & !tri;
            if out.count_ones() != 1 {
                ok = false;
                break;
            }
            match trace(adj, set, two, apex, b, out.trailing_zeros() as usize) {
                Some((end, seen, len)) if end == a && seen & covered == 0 => {
                    covered |= seen;
                    if len == 1 {
                        ones += 1;
                    }
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && ones <= 1 && covered == set {
            return true;
        }
    }
    false
}

fn is_prism(adj: &[u32], set: u32) -> bool {
    let Some((two, three)) = degree_split(adj, set) else {
        return false;
    };
    if three.count_ones() != 6 {
        return false;
    }
    let tris = triangles_in(adj, three);
    for (i, &t1) in tris.iter().enumerate() {
        for &t2 in &tris[i + 1..] {
            if t1 & t2 != 0 || t1 | t2 != three {
                continue;
            }
            let mut covered = three;
            let mut ends = 0u32;
            let mut ok = true;
            for a in bits(t1) {
                let out = adj[a] & set & !t1;
                if out.count_ones() != 1 {
                    ok = false;
                    break;
                }
                match trace(adj, set, two, t2, a, out.trailing_zeros() as usize) {
                    Some((end, seen, _)) if seen & covered == 0 && ends >> end & 1 == 0 => {
                        covered |= seen;
                        ends |= 1 << end;
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && ends == t2 && covered == set {
                return true;
            }
        }
    }
    false
}

fn is_pinched(adj: &[u32], set: u32) -> bool {
    if set.count_ones() < 7 {
        return false;
    }
    for c in bits(set) {
        let rest = set & !(1 << c);
        if !bits(rest).all(|v| deg(adj, rest, v) == 2) || !connected(adj, rest) {
            continue;
        }
        let nc = adj[c] & rest;
        if nc.count_ones() == 4 && bits(nc).all(|v| deg(adj, nc, v) == 1) {
            return true;
        }
    }
    false
}

fn is_cube(adj: &[u32], set: u32) -> bool {
    if set.count_ones() != 8 || !bits(set).all(|v| deg(adj, set, v) == 3) {
        return false;
    }
    // 2-colour by BFS.
    let mut side = 0u32;
    let mut seen = 0u32;
    for s in bits(set) {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut stack = alloc::vec![s];
        seen |= 1 << s;
        while let Some(x) = stack.pop() {
            for y in bits(adj[x] & set) {
                if seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    if side >> x & 1 == 0 {
                        side |= 1 << y;
                    }
                    stack.push(y);
                } else if (side >> x & 1) == (side >> y & 1) {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of holes, counting every induced cycle of length ≥ 4 once (n ≤ 16).
pub fn brute_count_holes(g: &Graph) -> Result<usize> {
    let adj = masks(g, 16, "brute hole count")?;
    let n = adj.len();
    Ok((1u32..(1u32 << n))
        .filter(|&s| is_hole_set(&adj, s))
        .count())
}

fn is_hole_set(adj: &[u32], s: u32) -> bool {
    s.count_ones() >= 4 && bits(s).all(|v| deg(adj, s, v) == 2) && connected(adj, s)
}

fn cyclic_order(adj: &[u32], s: u32) -> Vec<usize> {
    let start = s.trailing_zeros() as usize;
    let mut order = alloc::vec![start];
    let mut prev = start;
    let mut cur = bits(adj[start] & s).next().unwrap();
    while cur != start {
        order.push(cur);
        let next = bits(adj[cur] & s & !(1 << prev)).next().unwrap();
        prev = cur;
        cur = next;
    }
    order
}

fn long_sectors(order: &[usize], nb: u32) -> usize {
    let k = order.len();
    let pos: Vec<usize> = (0..k).filter(|&i| nb >> order[i] & 1 == 1).collect();
    let mut long = 0;
    for (j, &p) in pos.iter().enumerate() {
        let q = pos[(j + 1) % pos.len()];
        let gap = (q + k - p) % k;
        let gap = if gap == 0 { k } else { gap };
        if gap >= 2 {
            long += 1;
        }
    }
    long
}

/// Hubs by checking every (vertex subset, outside vertex) pair (n ≤ 14).
pub fn brute_hubs(g: &Graph) -> Result<Vec<usize>> {
    let adj = masks(g, 14, "brute hubs")?;
    let n = adj.len();
    let mut hub = 0u32;
    for s in 1u32..(1u32 << n) {
        if s.count_ones() < 5 || !is_hole_set(&adj, s) {
            continue;
        }
        let order = cyclic_order(&adj, s);
        for v in 0..n {
            if s >> v & 1 == 1 || hub >> v & 1 == 1 {
                continue;
            }
            let nb = adj[v] & s;
            if nb.count_ones() >= 3 && long_sectors(&order, nb) >= 2 {
                hub |= 1 << v;
            }
        }
    }
    Ok(bits(hub).collect())
}

/// For each vertex that is a hub, the minimum of `|N_W(v)|` over its wheels.
pub fn brute_optimal_wheel_sizes(g: &Graph) -> Result<Vec<Option<usize>>> {
    let adj = masks(g, 14, "brute wheels")?;
    let n = adj.len();
    let mut best = alloc::vec![None::<usize>; n];
    for s in 1u32..(1u32 << n) {
        if s.count_ones() < 5 || !is_hole_set(&adj, s) {
            continue;
        }
        let order = cyclic_order(&adj, s);
        for (v, slot) in best.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                continue;
            }
            let nb = adj[v] & s;
            let k = nb.count_ones() as usize;
            if k >= 3 && long_sectors(&order, nb) >= 2 {
                *slot = Some(slot.map_or(k, |b: usize| b.min(k)));
            }
        }
    }
    Ok(best)
}

/// All minimal separators as sorted vertex lists, by subset enumeration (n ≤ 12).
pub fn brute_minimal_separators(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let adj = masks(g, 12, "brute minimal separators")?;
    let n = adj.len();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for x in 0u32..=all {
        let full = components(&adj, all & !x)
            .into_iter()
            .filter(|&c| {
                let nb = bits(c).fold(0u32, |m, v| m | adj[v]) & !c;
                nb == x
            })
            .count();
        if full >= 2 {
            out.push(bits(x).collect());
        }
    }
    Ok(out)
}

/// Whether some clique (possibly empty) separates `g` (n ≤ 12).
pub fn brute_has_clique_cutset(g: &Graph) -> Result<bool> {
    let adj = masks(g, 12, "brute clique cutset")?;
    let n = adj.len();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    for k in 0u32..=all {
        let clique = bits(k).all(|v| (adj[v] & k).count_ones() + 1 == k.count_ones());
        if clique && components(&adj, all & !k).len() >= 2 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn chordal_mask(adj: &[u32], set: u32) -> bool {
    // Repeatedly strip a simplicial vertex.
    let mut left = set;
    while left != 0 {
        let simp = bits(left).find(|&v| {
            let nb = adj[v] & left;
            bits(nb).all(|u| nb & !(1 << u) & !adj[u] == 0)
        });
        match simp {
            Some(v) => left &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// All potential maximal cliques, straight from the definition: maximal
/// cliques of `G + F` for every inclusion-minimal chordal fill `F` (n ≤ 7).
pub fn brute_pmcs(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let adj = masks(g, 7, "brute PMC enumeration")?;
    let n = adj.len();
    let mut non_edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 0 {
                non_edges.push((u, v));
            }
        }
    }
    let f = non_edges.len();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let filled = |mask: u32| {
        let mut a = adj.clone();
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a[u] |= 1 << v;
                a[v] |= 1 << u;
            }
        }
        a
    };
    let chordal: Vec<bool> = (0u32..(1u32 << f)).map(|m| chordal_mask(&filled(m), all)).collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for m in 0u32..(1u32 << f) {
        if !chordal[m as usize] {
            continue;
        }
        let mut minimal = true;
        let mut sub = m;
        while sub != 0 {
            sub = (sub - 1) & m;
            if chordal[sub as usize] {
                minimal = false;
                break;
            }
        }
        if !minimal {
            continue;
        }
        let a = filled(m);
        for c in 1u32..=all {
            let clique = bits(c).all(|v| (a[v] & c).count_ones() + 1 == c.count_ones());
            let maximal = clique && bits(all & !c).all(|v| a[v] & c != c);
            if maximal {
                let l: Vec<usize> = bits(c).collect();
                if !out.contains(&l) {
                    out.push(l);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Maximum stable set size (n ≤ 16).
pub fn brute_stable_set(g: &Graph) -> Result<usize> {
    let adj = masks(g, 16, "brute stable set")?;
    let n = adj.len();
    Ok((0u32..(1u32 << n))
        .filter(|&s| bits(s).all(|v| adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Minimum vertex cover size (n ≤ 16).
pub fn brute_vertex_cover(g: &Graph) -> Result<usize> {
    let adj = masks(g, 16, "brute vertex cover")?;
    let n = adj.len();
    Ok((0u32..(1u32 << n))
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 1 || adj[u] & !s == 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// Minimum dominating set size (n ≤ 16).
pub fn brute_dominating_set(g: &Graph) -> Result<usize> {
    let adj = masks(g, 16, "brute dominating set")?;
    let n = adj.len();
    Ok((0u32..(1u32 << n))
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 1 || adj[u] & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// Chromatic number by exhaustive backtracking (n ≤ 12).
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    let adj = masks(g, 12, "brute chromatic number")?;
    let n = adj.len();
    if n == 0 {
        return Ok(0);
    }
    Ok((1..=n)
        .find(|&k| colorable(&adj, k, &mut alloc::vec![usize::MAX; n], 0))
        .unwrap_or(n))
}

fn colorable(adj: &[u32], k: usize, col: &mut Vec<usize>, v: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..k {
        if bits(adj[v]).all(|u| col[u] != c) {
            col[v] = c;
            if colorable(adj, k, col, v + 1) {
                return true;
            }
            col[v] = usize::MAX;
        }
    }
    false
}

/// Maximum clique size (n ≤ 16).
pub fn brute_clique_number(g: &Graph) -> Result<usize> {
    let adj = masks(g, 16, "brute clique number")?;
    let n = adj.len();
    Ok((0u32..(1u32 << n))
        .filter(|&s| bits(s).all(|v| (adj[v] & s).count_ones() + 1 == s.count_ones()))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}
