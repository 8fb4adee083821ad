//! Coloring generators: affine-plane colorings, greedy clique covers, and
//! seeded uniform random colorings.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, which produces
//! the same stream on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeColoring, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("q = {0} is not prime")]
    NotPrime(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    AffinePlane {
        q: usize,
    },
    DisjointCliques {
        vertices: usize,
        colors: usize,
        max_clique: usize,
    },
    Random {
        vertices: usize,
        colors: usize,
        seed: u64,
    },
}

impl Construction {
    /// Builds the coloring; `Ok(None)` when the greedy clique cover fails.
    pub fn build(&self) -> Result<Option<(Graph, EdgeColoring)>, ConstructionError> {
        match *self {
            Construction::AffinePlane { q } => affine_plane_coloring(q).map(Some),
            Construction::DisjointCliques {
                vertices,
                colors,
                max_clique,
            } => {
                if vertices == 0 || colors == 0 || max_clique == 0 {
                    return Err(ConstructionError::InvalidParameters(
                        "vertices, colors and max_clique must be positive".into(),
                    ));
                }
                Ok(disjoint_cliques_coloring(vertices, colors, max_clique)
                    .map(|c| (Graph::complete(vertices), c)))
            }
            Construction::Random {
                vertices,
                colors,
                seed,
            } => {
                if vertices == 0 || colors == 0 {
                    return Err(ConstructionError::InvalidParameters(
                        "vertices and colors must be positive".into(),
                    ));
                }
                Ok(Some(random_coloring(vertices, colors, seed)))
            }
        }
    }
}

pub fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Coloring of `K_{q²}` by line direction over `F_q`, for prime `q`.
///
/// Point `(x, y)` is vertex `x·q + y`. The edge between two points gets
/// color `m + 1` when the line through them has slope `m`, and color `q + 1`
/// when it is vertical. Each color class is `q` disjoint `q`-cliques.
pub fn affine_plane_coloring(q: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    if !is_prime(q) {
        return Err(ConstructionError::NotPrime(q));
    }
    let g = Graph::complete(q * q);
    // inverse[d] · d ≡ 1 (mod q)
    let inverse: Vec<usize> = (0..q)
        .map(|d| (1..q).find(|&e| d * e % q == 1).unwrap_or(0))
        .collect();
    let c = EdgeColoring::from_fn(&g, q + 1, |u, v| {
        let (x1, y1) = (u / q, u % q);
        let (x2, y2) = (v / q, v % q);
        if x1 == x2 {
            q + 1
        } else {
            let dx = (x2 + q - x1) % q;
            let dy = (y2 + q - y1) % q;
            dy * inverse[dx] % q + 1
        }
    })
    .expect("colors lie in 1..=q+1");
    Ok((g, c))
}

/// First-fit grouping of `order` into cliques of at most `max_clique`
/// vertices whose internal edges are all still uncolored.
fn greedy_groups(order: &[usize], max_clique: usize, colored: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        let slot = groups
            .iter()
            .position(|grp| grp.len() < max_clique && grp.iter().all(|&w| !colored[v][w]));
        match slot {
            Some(i) => groups[i].push(v),
            None => groups.push(vec![v]),
        }
    }
    groups
}

/// Greedy cover of `K_N` by `k` colors, each a disjoint union of cliques
/// with at most `max_clique` vertices. `None` if edges are left over.
pub fn disjoint_cliques_coloring(
    vertices: usize,
    colors: usize,
    max_clique: usize,
) -> Option<EdgeColoring> {
    let g = Graph::complete(vertices);
    let mut assigned = vec![vec![false; vertices]; vertices];
    let mut color_of = vec![vec![0usize; vertices]; vertices];
    let order: Vec<usize> = (0..vertices).collect();
    for color in 1..=colors {
        for grp in greedy_groups(&order, max_clique, &assigned) {
            for (i, &a) in grp.iter().enumerate() {
                for &b in &grp[i + 1..] {
                    assigned[a][b] = true;
                    assigned[b][a] = true;
                    color_of[a][b] = color;
                    color_of[b][a] = color;
                }
            }
        }
    }
    let mut out = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        if !assigned[u][v] {
            return None;
        }
        out.push(color_of[u][v]);
    }
    EdgeColoring::new(&g, colors, out).ok()
}

/// Seeded partial coloring of `K_N`: for each color a random first-fit
/// clique grouping (groups of at most `max_clique`) claims its uncolored
/// internal edges. Edges no group claims are left out of the graph, so
/// every monochromatic component has at most `max_clique` vertices.
pub fn clique_cover_coloring(
    vertices: usize,
    colors: usize,
    max_clique: usize,
    seed: u64,
) -> (Graph, EdgeColoring) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assigned = vec![vec![false; vertices]; vertices];
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..vertices).collect();
    for color in 1..=colors {
        order.shuffle(&mut rng);
        for grp in greedy_groups(&order, max_clique, &assigned) {
            for (i, &a) in grp.iter().enumerate() {
                for &b in &grp[i + 1..] {
                    assigned[a][b] = true;
                    assigned[b][a] = true;
                    edges.push(((a.min(b), a.max(b)), color));
                }
            }
        }
    }
    edges.sort_unstable();
    let g = Graph::new(vertices, edges.iter().map(|&(e, _)| e)).expect("edges are distinct");
    let c = EdgeColoring::new(&g, colors.max(1), edges.iter().map(|&(_, c)| c).collect())
        .expect("valid colors");
    (g, c)
}

/// Uniform independent colors on the edges of `K_N`, drawn in lexicographic
/// edge order.
pub fn random_coloring(vertices: usize, colors: usize, seed: u64) -> (Graph, EdgeColoring) {
    let g = Graph::complete(vertices);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = EdgeColoring::from_fn(&g, colors, |_, _| rng.gen_range(1..=colors))
        .expect("colors in range");
    (g, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{color_class, components};

    fn class_sizes(g: &Graph, c: &EdgeColoring) -> Vec<Vec<usize>> {
        (1..=c.color_count())
            .map(|i| components(&color_class(g, c, i).unwrap()).sizes().to_vec())
            .collect()
    }

    #[test]
    fn affine_small_cases() {
        let (g, c) = affine_plane_coloring(2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(c.color_count(), 3);
        assert_eq!(class_sizes(&g, &c), vec![vec![2, 2]; 3]);

        let (g, c) = affine_plane_coloring(3).unwrap();
        assert_eq!(c.color_count(), 4);
        for i in 1..=4 {
            let class = color_class(&g, &c, i).unwrap();
            assert_eq!(class.edge_count(), 9);
            assert_eq!(components(&class).sizes(), &[3, 3, 3]);
        }
        assert_eq!(
            affine_plane_coloring(4),
            Err(ConstructionError::NotPrime(4))
        );
        assert_eq!(
            affine_plane_coloring(1),
            Err(ConstructionError::NotPrime(1))
        );
    }

    #[test]
    fn greedy_cliques() {
        let c = disjoint_cliques_coloring(4, 3, 2).unwrap();
        let g = Graph::complete(4);
        assert_eq!(class_sizes(&g, &c), vec![vec![2, 2]; 3]);
        let c = disjoint_cliques_coloring(3, 1, 3).unwrap();
        assert_eq!(c.colors(), &[1, 1, 1]);
        assert!(disjoint_cliques_coloring(5, 1, 2).is_none());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_coloring(9, 3, 42), random_coloring(9, 3, 42));
        assert_ne!(random_coloring(9, 3, 42).1, random_coloring(9, 3, 43).1);
        let (_, c) = random_coloring(4, 1, 5);
        assert!(c.colors().iter().all(|&x| x == 1));
    }

    #[test]
    fn clique_cover_respects_group_size() {
        for seed in 0..20 {
            let (g, c) = clique_cover_coloring(14, 4, 4, seed);
            assert!(class_sizes(&g, &c).iter().flatten().all(|&s| s <= 4));
        }
    }

    #[test]
    fn construction_dispatch() {
        assert!(Construction::AffinePlane { q: 5 }
            .build()
            .unwrap()
            .is_some());
        assert!(Construction::DisjointCliques {
            vertices: 5,
            colors: 1,
            max_clique: 2
        }
        .build()
        .unwrap()
        .is_none());
        assert!(Construction::Random {
            vertices: 0,
            colors: 2,
            seed: 0
        }
        .build()
        .is_err());
    }
}
