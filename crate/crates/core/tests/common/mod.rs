//! Brute-force oracles and seeded instance generators shared by the
//! integration tests. The oracles only read `Graph::edges`; they compute
//! everything else from scratch.

#![allow(dead_code)]

use std::collections::HashMap;

use cmramsey::graph::{EdgeColoring, Graph};
use cmramsey::ramsey::max_connected_matching;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Adjacency bitmasks, vertices `< 64`.
pub fn masks(vertices: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; vertices];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn nu_rec(adj: &[u64], alive: u64, memo: &mut HashMap<u64, usize>) -> usize {
    // Drop vertices with no live neighbor; they cannot be matched.
    let mut live = alive;
    for (v, &nb) in adj.iter().enumerate() {
        if live & (1 << v) != 0 && nb & alive == 0 {
            live &= !(1 << v);
        }
    }
    if live == 0 {
        return 0;
    }
    if let Some(&r) = memo.get(&live) {
        return r;
    }
    let v = live.trailing_zeros() as usize;
    let rest = live & !(1 << v);
    let mut best = nu_rec(adj, rest, memo);
    let mut nb = adj[v] & rest;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        best = best.max(1 + nu_rec(adj, rest & !(1 << w), memo));
    }
    memo.insert(live, best);
    best
}

/// Matching number by exhaustive branching on the lowest live vertex.
pub fn brute_nu(g: &Graph) -> usize {
    let adj = masks(g.vertex_count(), g.edges());
    let all = if g.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.vertex_count()) - 1
    };
    nu_rec(&adj, all, &mut HashMap::new())
}

/// Connected components of the subgraph induced by `alive`, as masks.
pub fn brute_components(adj: &[u64], alive: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = alive;
    while left != 0 {
        let start = left.trailing_zeros();
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            for (v, &nb) in adj.iter().enumerate() {
                if comp & (1 << v) != 0 {
                    grown |= nb & alive;
                }
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// `max_S (odd components of G - S) - |S|` over all vertex subsets.
pub fn brute_deficiency(g: &Graph) -> usize {
    let v = g.vertex_count();
    let adj = masks(v, g.edges());
    let all = (1u64 << v) - 1;
    let mut best = 0i64;
    for s in 0..=all {
        let odd = brute_components(&adj, all & !s)
            .iter()
            .filter(|c| c.count_ones() % 2 == 1)
            .count();
        best = best.max(odd as i64 - s.count_ones() as i64);
    }
    best as usize
}

/// Colors (ascending) having a component that carries a matching of size `n/2`.
pub fn brute_mono_cm_colors(g: &Graph, c: &EdgeColoring, n: usize) -> Vec<usize> {
    let v = g.vertex_count();
    let mut out = Vec::new();
    for color in 1..=c.color_count() {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .zip(c.colors())
            .filter(|&(_, &x)| x == color)
            .map(|(&e, _)| e)
            .collect();
        let adj = masks(v, &edges);
        let all = (1u64 << v) - 1;
        let hit = brute_components(&adj, all).into_iter().any(|comp| {
            if comp.count_ones() < n as u32 {
                return false;
            }
            2 * nu_rec(&adj, comp, &mut HashMap::new()) >= n
        });
        if hit {
            out.push(color);
        }
    }
    out
}

/// Largest matching inside one component, by brute force.
pub fn brute_connected_nu(g: &Graph) -> usize {
    let v = g.vertex_count();
    let adj = masks(v, g.edges());
    let all = if v == 0 { 0 } else { (1u64 << v) - 1 };
    brute_components(&adj, all)
        .into_iter()
        .map(|comp| nu_rec(&adj, comp, &mut HashMap::new()))
        .max()
        .unwrap_or(0)
}

/// Roles 0 = S, 1 = Q, 2 = I.
pub fn brute_partition_valid(g: &Graph, n: usize, roles: &[u8]) -> bool {
    let v = g.vertex_count();
    let count = |r: u8| roles.iter().filter(|&&x| x == r).count();
    let (s, q, i) = (count(0), count(1), count(2));
    if q + 2 * s != v.min(n - 1) {
        return false;
    }
    if v < n && i > 0 {
        return false;
    }
    let adj = masks(v, g.edges());
    let i_mask: u64 = (0..v).filter(|&x| roles[x] == 2).map(|x| 1u64 << x).sum();
    for x in 0..v {
        match roles[x] {
            2 if adj[x] & i_mask != 0 || 2 * g.degree(x) >= n => return false,
            1 if (adj[x] & i_mask).count_ones() > 1 => return false,
            _ => {}
        }
    }
    true
}

/// All role vectors passing [`brute_partition_valid`].
pub fn brute_valid_partitions(g: &Graph, n: usize) -> Vec<Vec<u8>> {
    let v = g.vertex_count();
    let mut out = Vec::new();
    for code in 0..3usize.pow(v as u32) {
        let roles: Vec<u8> = (0..v)
            .map(|x| (code / 3usize.pow(x as u32) % 3) as u8)
            .collect();
        if brute_partition_valid(g, n, &roles) {
            out.push(roles);
        }
    }
    out
}

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, vertices: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..vertices {
        let parent = order[rng.gen_range(0..i)];
        let (a, b) = (order[i], parent);
        edges.push((a.min(b), a.max(b)));
    }
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(p) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertices, edges).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, vertices: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(vertices, edges).unwrap()
}

/// Every graph on `vertices` labeled vertices.
pub fn all_graphs(vertices: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(vertices, edges).unwrap()
    })
}

/// Every `k`-coloring of `K_N`.
pub fn all_colorings(
    vertices: usize,
    colors: usize,
) -> impl Iterator<Item = (Graph, EdgeColoring)> {
    let g = Graph::complete(vertices);
    let m = g.edge_count();
    (0..colors.pow(m as u32)).map(move |mut code| {
        let cols = (0..m)
            .map(|_| {
                let c = code % colors + 1;
                code /= colors;
                c
            })
            .collect();
        let c = EdgeColoring::new(&g, colors, cols).unwrap();
        (g.clone(), c)
    })
}

/// Edges of `K_N` in random order, each kept in a random color when that
/// color stays free of component matchings of size `n/2`; a fraction
/// `fill` of the edges is offered.
pub fn random_avoiding(
    rng: &mut ChaCha8Rng,
    vertices: usize,
    colors: usize,
    n: usize,
    fill: f64,
) -> (Graph, EdgeColoring) {
    let mut pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let offered = ((pairs.len() as f64) * fill).round() as usize;
    let mut per_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); colors];
    for &e in &pairs[..offered] {
        let color = rng.gen_range(0..colors);
        per_color[color].push(e);
        let g = Graph::new(vertices, per_color[color].iter().copied()).unwrap();
        if 2 * max_connected_matching(&g).size >= n {
            per_color[color].pop();
        }
    }
    let mut all: Vec<((usize, usize), usize)> = per_color
        .iter()
        .enumerate()
        .flat_map(|(c, es)| es.iter().map(move |&e| (e, c + 1)))
        .collect();
    all.sort_unstable();
    let g = Graph::new(vertices, all.iter().map(|&(e, _)| e)).unwrap();
    let c = EdgeColoring::new(&g, colors, all.iter().map(|&(_, c)| c).collect()).unwrap();
    (g, c)
}

/// Connected graph with matching number below `n/2`: up to `n/2 - 1` hub
/// vertices joined to odd cliques and isolated vertices, the cliques small
/// enough that hubs plus clique matchings stay under `n/2`.
pub fn random_small_nu(rng: &mut ChaCha8Rng, n: usize, max_vertices: usize) -> Graph {
    let half = n / 2;
    let hubs = rng.gen_range(0..half);
    let mut budget = half - 1 - hubs;
    let mut edges = Vec::new();
    let mut next = hubs;
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let target = rng.gen_range(1..=max_vertices.max(1));
    while next < target.max(hubs + 1) {
        let t = if budget > 0 {
            rng.gen_range(0..=budget)
        } else {
            0
        };
        let size = (2 * t + 1).min(max_vertices.saturating_sub(next).max(1));
        let t = size / 2;
        budget -= t;
        let piece: Vec<usize> = (next..next + size).collect();
        for (i, &a) in piece.iter().enumerate() {
            for &b in &piece[i + 1..] {
                edges.push((a, b));
            }
        }
        pieces.push(piece);
        next += size;
        if hubs == 0 {
            break;
        }
    }
    let vertices = next;
    for h in 0..hubs {
        for other in 0..h {
            if rng.gen_bool(0.5) {
                edges.push((other, h));
            }
        }
    }
    for piece in &pieces {
        if hubs == 0 {
            break;
        }
        let anchor = piece[rng.gen_range(0..piece.len())];
        edges.push((rng.gen_range(0..hubs), anchor));
        for &x in piece {
            for h in 0..hubs {
                if rng.gen_bool(0.3) {
                    edges.push((h, x));
                }
            }
        }
    }
    if hubs > 1 {
        for h in 1..hubs {
            edges.push((0, h));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(vertices, edges).unwrap()
}
