//! Simple undirected graphs on dense vertex ids, edge colorings, and
//! connected components.
//!
//! Graphs are immutable once built. Edges are stored normalized (`u < v`)
//! and sorted lexicographically; an [`EdgeColoring`] is indexed by that
//! edge order.

use std::collections::VecDeque;

use thiserror::Error;

/// Errors raised while building graphs and colorings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("color {color} outside 1..={color_count}")]
    ColorOutOfRange { color: usize, color_count: usize },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { expected: usize, got: usize },
    #[error("color count must be positive")]
    NoColors,
}

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    /// Endpoint order within a pair does not matter.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(vertex_count, list))
    }

    fn from_sorted(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            adj,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted(vertex_count, Vec::new())
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges = (0..vertex_count)
            .flat_map(|u| (u + 1..vertex_count).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(vertex_count, edges)
    }

    /// Path `0 - 1 - ... - (vertex_count-1)`.
    pub fn path(vertex_count: usize) -> Self {
        let edges = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Self::from_sorted(vertex_count, edges)
    }

    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "a cycle needs at least 3 vertices");
        let edges = (1..vertex_count)
            .map(|v| (v - 1, v))
            .chain([(0, vertex_count - 1)]);
        Self::new(vertex_count, edges).expect("cycle edges are valid")
    }

    /// Star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_sorted(leaves + 1, edges)
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted(self.vertex_count + other.vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the
    /// given order. Returns the graph together with the local-to-global map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &v in vertices {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX && local[v] < local[w] {
                    edges.push((local[v], local[w]));
                }
            }
        }
        edges.sort_unstable();
        (Self::from_sorted(vertices.len(), edges), vertices.to_vec())
    }

    /// Same vertex set with every edge touching `removed` deleted.
    pub fn without_vertices(&self, removed: &[bool]) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !removed[u] && !removed[v])
            .collect();
        Self::from_sorted(self.vertex_count, edges)
    }

    /// Same vertex set plus one edge; `None` if the edge exists or is invalid.
    pub fn with_edge(&self, u: usize, v: usize) -> Option<Graph> {
        if u == v || u >= self.vertex_count || v >= self.vertex_count || self.has_edge(u, v) {
            return None;
        }
        let mut edges = self.edges.clone();
        let e = (u.min(v), u.max(v));
        let pos = edges.binary_search(&e).unwrap_err();
        edges.insert(pos, e);
        Some(Self::from_sorted(self.vertex_count, edges))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::new(self.vertex_count, edges).expect("a permutation keeps the graph simple")
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && components(self).count() == 1
    }
}

/// Total map from the edges of a graph to colors `1..=color_count`,
/// aligned with [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    color_count: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, color_count: usize, colors: Vec<usize>) -> Result<Self, GraphError> {
        if color_count == 0 {
            return Err(GraphError::NoColors);
        }
        if colors.len() != g.edge_count() {
            return Err(GraphError::ColoringLength {
                expected: g.edge_count(),
                got: colors.len(),
            });
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > color_count) {
            return Err(GraphError::ColorOutOfRange { color, color_count });
        }
        Ok(EdgeColoring {
            color_count,
            colors,
        })
    }

    /// Every edge gets color 1.
    pub fn monochromatic(g: &Graph, color_count: usize) -> Self {
        assert!(color_count > 0);
        EdgeColoring {
            color_count,
            colors: vec![1; g.edge_count()],
        }
    }

    /// Colors each edge `(u, v)`, `u < v`, with `color(u, v)`.
    pub fn from_fn<F>(g: &Graph, color_count: usize, mut color: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> usize,
    {
        let colors = g.edges().iter().map(|&(u, v)| color(u, v)).collect();
        Self::new(g, color_count, colors)
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// Color of the edge at `index` in [`Graph::edges`].
    pub fn color_at(&self, index: usize) -> usize {
        self.colors[index]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of edge `{u, v}` in `g`, if present.
    pub fn color_of(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        g.edge_index(u, v).map(|i| self.colors[i])
    }

    /// Same assignment viewed with a larger palette (extra colors unused).
    pub fn with_color_count(&self, color_count: usize) -> Result<Self, GraphError> {
        if let Some(&color) = self.colors.iter().find(|&&c| c > color_count) {
            return Err(GraphError::ColorOutOfRange { color, color_count });
        }
        if color_count == 0 {
            return Err(GraphError::NoColors);
        }
        Ok(EdgeColoring {
            color_count,
            colors: self.colors.clone(),
        })
    }

    /// Restriction to the subgraph induced by `vertices` (see [`Graph::induced`]).
    pub fn induced(&self, g: &Graph, vertices: &[usize]) -> (Graph, EdgeColoring) {
        let (sub, map) = g.induced(vertices);
        let colors = sub
            .edges()
            .iter()
            .map(|&(a, b)| {
                self.color_of(g, map[a], map[b])
                    .expect("induced edge exists")
            })
            .collect();
        (
            sub,
            EdgeColoring {
                color_count: self.color_count,
                colors,
            },
        )
    }
}

/// Component id per vertex plus component sizes. Ids are dense and assigned
/// in order of each component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    labels: Vec<usize>,
    sizes: Vec<usize>,
}

impl ComponentLabeling {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Vertex lists per component, each ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (v, &c) in self.labels.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

pub fn components(g: &Graph) -> ComponentLabeling {
    components_avoiding(g, &vec![false; g.vertex_count()])
}

/// Components of `g` with the `removed` vertices deleted. Removed vertices
/// are labeled `usize::MAX` and not counted.
pub(crate) fn components_avoiding(g: &Graph, removed: &[bool]) -> ComponentLabeling {
    let n = g.vertex_count();
    let mut labels = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if removed[start] || labels[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        labels[start] = id;
        queue.push_back(start);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(v) {
                if !removed[w] && labels[w] == usize::MAX {
                    labels[w] = id;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }
    ComponentLabeling { labels, sizes }
}

/// Spanning subgraph formed by the edges of color `color`.
pub fn color_class(g: &Graph, c: &EdgeColoring, color: usize) -> Result<Graph, GraphError> {
    if color == 0 || color > c.color_count() {
        return Err(GraphError::ColorOutOfRange {
            color,
            color_count: c.color_count(),
        });
    }
    let edges = g
        .edges()
        .iter()
        .zip(c.colors())
        .filter(|&(_, &col)| col == color)
        .map(|(&e, _)| e)
        .collect();
    Ok(Graph::from_sorted(g.vertex_count(), edges))
}

/// All color classes, index `i` holding color `i + 1`.
pub fn color_classes(g: &Graph, c: &EdgeColoring) -> Vec<Graph> {
    (1..=c.color_count())
        .map(|i| color_class(g, c, i).expect("color in range"))
        .collect()
}
