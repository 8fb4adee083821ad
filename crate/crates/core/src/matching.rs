//! Maximum matchings in general graphs, the Gallai–Edmonds decomposition,
//! and Tutte–Berge deficiency witnesses.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{components_avoiding, Graph};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is covered twice")]
    NotDisjoint(usize),
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    /// Validates `edges` against `g`.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Self, MatchingError> {
        let mut mate = vec![None; g.vertex_count()];
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for (a, b) in [(u, v), (v, u)] {
                if mate[a].is_some() {
                    return Err(MatchingError::NotDisjoint(a));
                }
                mate[a] = Some(b);
            }
        }
        Ok(Self::from_mates(mate))
    }

    fn from_mates(mate: Vec<Option<usize>>) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect();
        Matching { edges, mate }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Matching edges `(u, v)`, `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    /// Covered vertices in ascending order; always `2 * size()` of them.
    pub fn covered(&self) -> Vec<usize> {
        (0..self.mate.len())
            .filter(|&v| self.mate[v].is_some())
            .collect()
    }
}

/// Edmonds' alternating-forest search with blossom shrinking, restricted
/// to vertices not in `removed`.
struct Blossom<'a> {
    g: &'a Graph,
    removed: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, removed: &'a [bool]) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            removed,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the exposed endpoint of an augmenting path from `root`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.removed[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    self.queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn try_augment(&mut self, root: usize) -> bool {
        match self.find_path(root) {
            Some(end) => {
                self.augment(end);
                true
            }
            None => false,
        }
    }

    fn run(&mut self) {
        for v in 0..self.mate.len() {
            if !self.removed[v] && self.mate[v] == NONE {
                self.try_augment(v);
            }
        }
    }

    fn into_matching(self) -> Matching {
        Matching::from_mates(
            self.mate
                .into_iter()
                .map(|m| (m != NONE).then_some(m))
                .collect(),
        )
    }
}

/// Maximum-cardinality matching. Exposed vertices are tried as roots in
/// ascending id order, so the result is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let removed = vec![false; g.vertex_count()];
    let mut engine = Blossom::new(g, &removed);
    engine.run();
    engine.into_matching()
}

/// Gallai–Edmonds decomposition: `d` are the vertices missed by some maximum
/// matching, `a` their neighbors outside `d`, `c` everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let n = g.vertex_count();
    let m = maximum_matching(g);
    let mut in_d = vec![false; n];
    let mut removed = vec![false; n];
    for v in 0..n {
        let Some(u) = m.mate(v) else {
            in_d[v] = true;
            continue;
        };
        // v is inessential iff G - v still has a matching of size ν(G); from
        // M - uv such a matching exists iff there is an augmenting path from u.
        removed[v] = true;
        let mut engine = Blossom::new(g, &removed);
        for (w, mw) in m.mate.iter().enumerate() {
            if let Some(x) = *mw {
                if w != v && w != u {
                    engine.mate[w] = x;
                }
            }
        }
        in_d[v] = engine.try_augment(u);
        removed[v] = false;
    }
    let in_a: Vec<bool> = (0..n)
        .map(|v| !in_d[v] && g.neighbors(v).iter().any(|&w| in_d[w]))
        .collect();
    GallaiEdmonds {
        d: (0..n).filter(|&v| in_d[v]).collect(),
        a: (0..n).filter(|&v| in_a[v]).collect(),
        c: (0..n).filter(|&v| !in_d[v] && !in_a[v]).collect(),
    }
}

/// Odd-order components of `g - s`, sorted by size descending then smallest
/// vertex ascending. Each component is listed in ascending order.
pub fn odd_components(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let mut removed = vec![false; g.vertex_count()];
    for &v in s {
        removed[v] = true;
    }
    let labeling = components_avoiding(g, &removed);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); labeling.count()];
    for v in 0..g.vertex_count() {
        if !removed[v] {
            members[labeling.label(v)].push(v);
        }
    }
    let mut odd: Vec<Vec<usize>> = members.into_iter().filter(|c| c.len() % 2 == 1).collect();
    odd.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    odd
}

/// A set `S` attaining the Tutte–Berge maximum of `q(G - S) - |S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub set: Vec<usize>,
    pub deficiency: usize,
    pub odd_components: Vec<Vec<usize>>,
}

/// Deficiency witness built from the Gallai–Edmonds `A` set.
pub fn tutte_berge(g: &Graph) -> DeficiencyWitness {
    let ge = gallai_edmonds(g);
    let odd = odd_components(g, &ge.a);
    let deficiency = odd.len() - ge.a.len();
    debug_assert_eq!(
        deficiency,
        g.vertex_count() - 2 * maximum_matching(g).size()
    );
    DeficiencyWitness {
        set: ge.a,
        deficiency,
        odd_components: odd,
    }
}
