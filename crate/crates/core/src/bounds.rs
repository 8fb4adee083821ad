//! Edge-count bounds for graphs and colorings without large connected
//! matchings, and the hypothesis checklist of the dense-coloring theorem.

use thiserror::Error;

use crate::graph::{color_class, components, EdgeColoring, Graph};
use crate::ramsey::{check_n, max_connected_matching, CMWitness};
use crate::rational::{frac, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph has a connected matching of size {size} >= n/2")]
    HasConnectedMatching { size: usize },
    #[error("color {} has a connected matching of size n/2", .0.color)]
    HasMonochromaticCM(CMWitness),
    #[error("n = {0} must be even and at least 2")]
    OddN(usize),
}

pub(crate) fn binom2(v: usize) -> Rational {
    int(v * v.saturating_sub(1) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBoundCheck {
    pub edges: usize,
    pub bound: Rational,
    pub slack: Rational,
    pub holds: bool,
}

/// `e(G) <= (n-2)/2 · v(G)` for a graph without a connected matching of size `n/2`.
pub fn erdos_gallai_check(g: &Graph, n: usize) -> Result<EdgeBoundCheck, BoundsError> {
    check_n(n).map_err(|_| BoundsError::OddN(n))?;
    let cm = max_connected_matching(g);
    if 2 * cm.size >= n {
        return Err(BoundsError::HasConnectedMatching { size: cm.size });
    }
    let bound = frac(n as i64 - 2, 2) * int(g.vertex_count());
    let slack = bound - int(g.edge_count());
    Ok(EdgeBoundCheck {
        edges: g.edge_count(),
        bound,
        slack,
        holds: slack >= Rational::from_integer(0),
    })
}

/// Result of the small-components bound `e(G) <= C(v,2) - n²/32`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallComponentsCheck {
    pub applicable: bool,
    /// Why the hypotheses fail, when they do.
    pub reason: Option<String>,
    pub largest_component: usize,
    pub edges: usize,
    pub bound: Rational,
    pub holds: Option<bool>,
    pub slack: Option<Rational>,
}

/// Applies when `k >= 4`, `n >= 4`, `v(G) = (k - 1/2)n`, the coloring uses
/// at most `k` colors, and every monochromatic component has at most `n`
/// vertices.
pub fn small_components_bound(
    g: &Graph,
    c: &EdgeColoring,
    k: usize,
    n: usize,
) -> SmallComponentsCheck {
    let largest_component = (1..=c.color_count())
        .map(|i| {
            let class = color_class(g, c, i).expect("color in range");
            components(&class)
                .sizes()
                .iter()
                .copied()
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    let v = g.vertex_count();
    let bound = binom2(v) - frac((n * n) as i64, 32);
    let reason = if k < 4 {
        Some(format!("k = {k} < 4"))
    } else if n < 4 {
        Some(format!("n = {n} < 4"))
    } else if 2 * v != (2 * k - 1) * n {
        Some(format!(
            "v(G) = {v} differs from (k-1/2)n = {}/2",
            (2 * k - 1) * n
        ))
    } else if c.color_count() > k {
        Some(format!("coloring uses {} > k colors", c.color_count()))
    } else if largest_component > n {
        Some(format!(
            "a monochromatic component has {largest_component} > n vertices"
        ))
    } else {
        None
    };
    let applicable = reason.is_none();
    let slack = applicable.then(|| bound - int(g.edge_count()));
    SmallComponentsCheck {
        applicable,
        reason,
        largest_component,
        edges: g.edge_count(),
        bound,
        holds: slack.map(|s| s >= Rational::from_integer(0)),
        slack,
    }
}

/// Parameters `(k, ε, δ, n)`; validity is reported by
/// [`dense_hypotheses`], not enforced on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseParams {
    pub k: usize,
    pub epsilon: Rational,
    pub delta: Rational,
    pub n: usize,
}

impl DenseParams {
    pub fn alpha(&self) -> Rational {
        frac(1, 2) - self.epsilon
    }

    /// `ε³ / (3k²)`, the strict upper limit for `δ`.
    pub fn delta_limit(&self) -> Rational {
        self.epsilon * self.epsilon * self.epsilon / int(3 * self.k * self.k)
    }

    /// `(k - 1/2 + ε) n`.
    pub fn vertex_threshold(&self) -> Rational {
        (int(self.k) - frac(1, 2) + self.epsilon) * int(self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
    /// Distance to the boundary; positive values are on the passing side
    /// except for `<=`-type bounds where zero also passes.
    pub margin: Rational,
}

pub fn dense_hypotheses(p: &DenseParams, g: &Graph, c: &EdgeColoring) -> Vec<Hypothesis> {
    let zero = Rational::from_integer(0);
    let v = g.vertex_count();
    let eps_margin = frac(1, 2) - p.epsilon;
    let delta_margin = p.delta_limit() - p.delta;
    let vertex_margin = int(v) - p.vertex_threshold();
    let edge_margin = int(g.edge_count()) - (Rational::from_integer(1) - p.delta) * binom2(v);
    vec![
        Hypothesis {
            name: "k >= 4",
            holds: p.k >= 4,
            margin: int(p.k) - int(4),
        },
        Hypothesis {
            name: "0 < epsilon <= 1/2",
            holds: p.epsilon > zero && eps_margin >= zero,
            margin: eps_margin,
        },
        Hypothesis {
            name: "0 <= delta < epsilon^3/(3k^2)",
            holds: p.delta >= zero && delta_margin > zero,
            margin: delta_margin,
        },
        Hypothesis {
            name: "n even, n >= 4",
            holds: p.n >= 4 && p.n.is_multiple_of(2),
            margin: int(p.n) - int(4),
        },
        Hypothesis {
            name: "coloring uses at most k colors",
            holds: c.color_count() <= p.k,
            margin: int(p.k) - int(c.color_count()),
        },
        Hypothesis {
            name: "v(G) > (k-1/2+epsilon)n",
            holds: vertex_margin > zero,
            margin: vertex_margin,
        },
        Hypothesis {
            name: "e(G) >= (1-delta)C(v(G),2)",
            holds: edge_margin >= zero,
            margin: edge_margin,
        },
    ]
}
