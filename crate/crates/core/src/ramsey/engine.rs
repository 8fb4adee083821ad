//! Depth-first search for colorings of `K_N` avoiding a monochromatic
//! connected matching of size `n/2`.
//!
//! Edges are colored one at a time in lexicographic order, so vertex `v`'s
//! incident edges are all colored once the edge `(v, N-1)` is. A branch dies
//! as soon as the component of the newly colored edge carries a matching of
//! size `n/2`. Optional reductions, each preserving the verdict:
//!
//! * colors are used in first-use order (color `i+1` only after color `i`);
//! * vertices appear in non-increasing order of their sorted color-degree
//!   vector, checked when a vertex's last edge is colored;
//! * no color class can exceed `(n-2)/2 · N` edges, and only a class made
//!   of disjoint `K_{n-1}` copies covering every vertex reaches that, so a
//!   branch dies when the remaining per-color capacity cannot absorb the
//!   uncolored edges.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeColoring, Graph};
use crate::matching::maximum_matching;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub vertices: usize,
    pub colors: usize,
    /// Matching parameter; a connected matching of size `n/2` is forbidden.
    pub n: usize,
    /// Maximum number of edge assignments tried.
    pub budget: u64,
    pub threads: usize,
    pub color_symmetry: bool,
    pub vertex_symmetry: bool,
    pub capacity_pruning: bool,
    /// Shuffle the candidate colors at every node with this seed.
    pub seed: Option<u64>,
}

impl SearchConfig {
    /// All reductions on, single-threaded, unlimited budget.
    pub fn new(vertices: usize, colors: usize, n: usize) -> Self {
        SearchConfig {
            vertices,
            colors,
            n,
            budget: u64::MAX,
            threads: 1,
            color_symmetry: true,
            vertex_symmetry: true,
            capacity_pruning: true,
            seed: None,
        }
    }

    /// Plain exhaustive enumeration, no reductions.
    pub fn unpruned(vertices: usize, colors: usize, n: usize) -> Self {
        SearchConfig {
            color_symmetry: false,
            vertex_symmetry: false,
            capacity_pruning: false,
            ..Self::new(vertices, colors, n)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Coloring of `K_N` (edges in lexicographic order) with no
    /// monochromatic connected matching of size `n/2`.
    Avoider(EdgeColoring),
    /// The whole reduced space was exhausted: every coloring has one.
    NoneExists,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Problem {
    vertices: usize,
    colors: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Index of the last edge incident to each vertex.
    last_edge: Vec<usize>,
    /// Per-color edge capacity, when capacity pruning is on.
    capacity: Option<usize>,
    color_symmetry: bool,
    vertex_symmetry: bool,
    budget: u64,
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
}

struct State {
    adj: Vec<u64>,
    degree: Vec<usize>,
    /// Colored neighbors of each vertex, any color.
    colored: Vec<u64>,
    count: Vec<usize>,
    assigned: Vec<usize>,
    used: usize,
    rng: Option<ChaCha8Rng>,
}

enum Step {
    Continue,
    Found,
    Stop,
}

impl Problem {
    fn component(&self, state: &State, color: usize, start: usize) -> u64 {
        let adj = &state.adj[color * self.vertices..(color + 1) * self.vertices];
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[w];
            }
            next &= !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Does color `color`'s component through `start` hold a matching of size n/2?
    fn violates(&self, state: &State, color: usize, start: usize) -> bool {
        let comp = self.component(state, color, start);
        if (comp.count_ones() as usize) < self.n {
            return false;
        }
        let adj = &state.adj[color * self.vertices..(color + 1) * self.vertices];
        let half = self.n / 2;
        let mut free = comp;
        let mut greedy = 0;
        let mut m = comp;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if free & (1 << v) == 0 {
                continue;
            }
            let cand = adj[v] & free & !(1u64 << v);
            if cand != 0 {
                let w = cand.trailing_zeros() as usize;
                free &= !(1u64 << v) & !(1u64 << w);
                greedy += 1;
                if greedy >= half {
                    return true;
                }
            }
        }
        let members: Vec<usize> = (0..self.vertices)
            .filter(|&v| comp & (1 << v) != 0)
            .collect();
        let mut local = [usize::MAX; 64];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &members {
            let mut nb = adj[v] & comp;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if v < w {
                    edges.push((local[v], local[w]));
                }
            }
        }
        let g = Graph::new(members.len(), edges).expect("bitset graph is simple");
        maximum_matching(&g).size() >= half
    }

    fn signature(&self, state: &State, v: usize) -> Vec<usize> {
        let mut sig = state.degree[v * self.colors..(v + 1) * self.colors].to_vec();
        sig.sort_unstable_by(|a, b| b.cmp(a));
        sig
    }

    /// Whether color `color` can no longer end as `N/(n-1)` disjoint copies
    /// of `K_{n-1}`, the only shape reaching the capacity; anything else
    /// loses at least one edge.
    fn defective(&self, state: &State, color: usize, next_edge: usize) -> bool {
        let adj = &state.adj[color * self.vertices..(color + 1) * self.vertices];
        let mut seen = 0u64;
        for x in 0..self.vertices {
            if self.last_edge[x] < next_edge && state.degree[x * self.colors + color] + 2 != self.n
            {
                return true;
            }
            if seen & (1 << x) != 0 {
                continue;
            }
            let comp = self.component(state, color, x);
            seen |= comp;
            if comp.count_ones() as usize >= self.n {
                return true;
            }
            let mut m = comp;
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                if state.colored[y] & !adj[y] & comp != 0 {
                    return true;
                }
            }
        }
        false
    }

    fn capacity_ok(&self, state: &State, next_edge: usize) -> bool {
        let Some(cap) = self.capacity else {
            return true;
        };
        let remaining = self.edges.len() - next_edge;
        let mut room = 0;
        for color in 0..self.colors {
            let limit = if self.defective(state, color, next_edge) {
                cap.saturating_sub(1)
            } else {
                cap
            };
            if state.count[color] > limit {
                return false;
            }
            room += limit - state.count[color];
        }
        room >= remaining
    }

    /// Vertices whose edges are all colored once edge `idx` is.
    fn closes_rows(&self, idx: usize) -> &'static [u8] {
        let (u, v) = self.edges[idx];
        if v != self.vertices - 1 {
            &[]
        } else if u + 2 == self.vertices {
            &[0, 1]
        } else {
            &[0]
        }
    }

    fn rows_ok(&self, state: &State, idx: usize) -> bool {
        if !self.vertex_symmetry {
            return true;
        }
        let (u, v) = self.edges[idx];
        for &which in self.closes_rows(idx) {
            let w = if which == 0 { u } else { v };
            if w > 0 && self.signature(state, w) > self.signature(state, w - 1) {
                return false;
            }
        }
        true
    }

    fn apply(&self, state: &mut State, idx: usize, color: usize, on: bool) {
        let (u, v) = self.edges[idx];
        let base = color * self.vertices;
        if on {
            state.adj[base + u] |= 1 << v;
            state.adj[base + v] |= 1 << u;
            state.degree[u * self.colors + color] += 1;
            state.degree[v * self.colors + color] += 1;
            state.colored[u] |= 1 << v;
            state.colored[v] |= 1 << u;
            state.count[color] += 1;
            state.assigned[idx] = color;
        } else {
            state.adj[base + u] &= !(1 << v);
            state.adj[base + v] &= !(1 << u);
            state.degree[u * self.colors + color] -= 1;
            state.degree[v * self.colors + color] -= 1;
            state.colored[u] &= !(1 << v);
            state.colored[v] &= !(1 << u);
            state.count[color] -= 1;
            state.assigned[idx] = usize::MAX;
        }
    }

    fn candidates(&self, state: &mut State) -> Vec<usize> {
        let limit = if self.color_symmetry {
            (state.used + 1).min(self.colors)
        } else {
            self.colors
        };
        let mut out: Vec<usize> = (0..limit).collect();
        if let Some(rng) = state.rng.as_mut() {
            out.shuffle(rng);
        }
        out
    }

    /// Tries every color at edge `idx`; `sink` receives each consistent
    /// prefix of length `collect_at` instead of descending further.
    fn dfs(
        &self,
        state: &mut State,
        idx: usize,
        shared: &Shared,
        collect_at: Option<usize>,
        sink: &mut Vec<Vec<usize>>,
    ) -> Step {
        if idx == self.edges.len() {
            return Step::Found;
        }
        if collect_at == Some(idx) {
            sink.push(state.assigned[..idx].to_vec());
            return Step::Continue;
        }
        for color in self.candidates(state) {
            if shared.stop.load(Ordering::Relaxed) {
                return Step::Stop;
            }
            if shared.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                shared.exhausted.store(true, Ordering::Relaxed);
                shared.stop.store(true, Ordering::Relaxed);
                return Step::Stop;
            }
            self.apply(state, idx, color, true);
            let prev_used = state.used;
            state.used = state.used.max(color + 1);
            let (u, _) = self.edges[idx];
            let ok = self.capacity_ok(state, idx + 1)
                && self.rows_ok(state, idx)
                && !self.violates(state, color, u);
            if ok {
                match self.dfs(state, idx + 1, shared, collect_at, sink) {
                    Step::Continue => {}
                    other => return other,
                }
            }
            state.used = prev_used;
            self.apply(state, idx, color, false);
        }
        Step::Continue
    }

    fn fresh_state(&self, seed: Option<u64>) -> State {
        State {
            adj: vec![0; self.colors * self.vertices],
            degree: vec![0; self.colors * self.vertices],
            colored: vec![0; self.vertices],
            count: vec![0; self.colors],
            assigned: vec![usize::MAX; self.edges.len()],
            used: 0,
            rng: seed.map(ChaCha8Rng::seed_from_u64),
        }
    }

    /// Replays a prefix collected by [`Problem::dfs`].
    fn replay(&self, state: &mut State, prefix: &[usize]) {
        for (idx, &color) in prefix.iter().enumerate() {
            self.apply(state, idx, color, true);
            state.used = state.used.max(color + 1);
        }
    }

    fn coloring(&self, state: &State) -> EdgeColoring {
        let g = Graph::complete(self.vertices);
        EdgeColoring::new(
            &g,
            self.colors,
            state.assigned.iter().map(|&c| c + 1).collect(),
        )
        .expect("complete assignment")
    }
}

fn validate(cfg: &SearchConfig) -> Result<(), SearchError> {
    if cfg.vertices == 0 || cfg.vertices > 64 {
        return Err(SearchError::InvalidConfig(format!(
            "vertices = {} outside 1..=64",
            cfg.vertices
        )));
    }
    if cfg.colors == 0 {
        return Err(SearchError::InvalidConfig("colors must be positive".into()));
    }
    if cfg.n < 2 || cfg.n % 2 == 1 {
        return Err(SearchError::InvalidConfig(format!(
            "n = {} must be even and at least 2",
            cfg.n
        )));
    }
    if cfg.budget == 0 || cfg.threads == 0 {
        return Err(SearchError::InvalidConfig(
            "budget and threads must be positive".into(),
        ));
    }
    Ok(())
}

/// Searches for an avoider. `NoneExists` is only returned after the reduced
/// space is exhausted within budget.
pub fn search_avoider(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    search_with_stats(cfg).0
}

pub fn search_with_stats(cfg: &SearchConfig) -> (Result<SearchOutcome, SearchError>, SearchStats) {
    if let Err(e) = validate(cfg) {
        return (Err(e), SearchStats::default());
    }
    let edges: Vec<(usize, usize)> = Graph::complete(cfg.vertices).edges().to_vec();
    let mut last_edge = vec![0; cfg.vertices];
    for (i, &(u, v)) in edges.iter().enumerate() {
        last_edge[u] = i;
        last_edge[v] = i;
    }
    let problem = Problem {
        vertices: cfg.vertices,
        colors: cfg.colors,
        n: cfg.n,
        capacity: cfg.capacity_pruning.then(|| (cfg.n - 2) / 2 * cfg.vertices),
        edges,
        last_edge,
        color_symmetry: cfg.color_symmetry,
        vertex_symmetry: cfg.vertex_symmetry,
        budget: cfg.budget,
    };
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
    };

    let root = problem.fresh_state(cfg.seed);
    if !problem.capacity_ok(&root, 0) {
        return (Ok(SearchOutcome::NoneExists), SearchStats::default());
    }

    let result = if cfg.threads == 1 {
        let mut state = root;
        match problem.dfs(&mut state, 0, &shared, None, &mut Vec::new()) {
            Step::Found => Some(problem.coloring(&state)),
            _ => None,
        }
    } else {
        run_parallel(&problem, &shared, cfg)
    };

    let stats = SearchStats {
        nodes: shared.nodes.load(Ordering::Relaxed).min(cfg.budget),
    };
    let outcome = match result {
        Some(c) => Ok(SearchOutcome::Avoider(c)),
        None if shared.exhausted.load(Ordering::Relaxed) => {
            Err(SearchError::BudgetExhausted { nodes: stats.nodes })
        }
        None => Ok(SearchOutcome::NoneExists),
    };
    (outcome, stats)
}

/// Splits the tree at a shallow depth and hands prefixes to workers. The
/// verdict does not depend on the worker count; which avoider is returned
/// may.
fn run_parallel(problem: &Problem, shared: &Shared, cfg: &SearchConfig) -> Option<EdgeColoring> {
    let want = cfg.threads * 8;
    let mut depth = 1;
    let mut prefixes = Vec::new();
    loop {
        prefixes.clear();
        let mut state = problem.fresh_state(cfg.seed);
        match problem.dfs(&mut state, 0, shared, Some(depth), &mut prefixes) {
            Step::Found => return Some(problem.coloring(&state)),
            Step::Stop => return None,
            Step::Continue => {}
        }
        if prefixes.len() >= want || depth >= problem.edges.len() {
            break;
        }
        depth += 1;
    }

    let next = AtomicUsize::new(0);
    let found: Mutex<Option<(usize, EdgeColoring)>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for worker in 0..cfg.threads {
            let (next, found, prefixes) = (&next, &found, &prefixes);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= prefixes.len() || shared.stop.load(Ordering::Relaxed) {
                    break;
                }
                let seed = cfg.seed.map(|s| s ^ ((worker as u64) << 32) ^ i as u64);
                let mut state = problem.fresh_state(seed);
                problem.replay(&mut state, &prefixes[i]);
                if let Step::Found =
                    problem.dfs(&mut state, prefixes[i].len(), shared, None, &mut Vec::new())
                {
                    let mut slot = found.lock().expect("lock poisoned");
                    if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                        *slot = Some((i, problem.coloring(&state)));
                    }
                    shared.stop.store(true, Ordering::Relaxed);
                }
            });
        }
    });
    let found = found.into_inner().expect("lock poisoned").map(|(_, c)| c);
    if found.is_some() {
        // A stop raised by a discovery is not budget exhaustion.
        shared.exhausted.store(false, Ordering::Relaxed);
    }
    found
}
