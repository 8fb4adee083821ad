//! Step-by-step numeric trace of the counting argument behind the dense
//! coloring theorem, run on a concrete coloring that avoids monochromatic
//! connected matchings of size `n/2`.
//!
//! The argument bounds the low-degree vertices, then the strong ones,
//! deletes both, and shows the survivors span too few edges. Since no
//! coloring meeting every hypothesis exists, on any input at least one
//! step reports a failure; the report records which.

use num_traits::Zero;

use crate::bounds::{
    binom2, dense_hypotheses, small_components_bound, BoundsError, DenseParams, Hypothesis,
};
use crate::graph::{color_class, components, EdgeColoring, Graph};
use crate::loss::{classify_vertices, coloring_loss, LossError, VertexClass};
use crate::ramsey::find_mono_cm;
use crate::rational::{frac, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditStep {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub hypotheses: Vec<Hypothesis>,
    /// `(k - 1/2) n`.
    pub degree_threshold: Rational,
    /// Vertices of degree below the threshold.
    pub low_degree: Vec<usize>,
    pub low_degree_bound: Option<Rational>,
    pub classes: Vec<VertexClass>,
    pub small_outside_low: Vec<usize>,
    /// Strong vertices outside `low_degree`.
    pub strong: Vec<usize>,
    pub beta: Rational,
    pub strong_bound: Option<Rational>,
    pub residual: Vec<usize>,
    /// Largest monochromatic component in the subgraph induced by the
    /// residual Q-saturated vertices.
    pub survivor_max_component: usize,
    pub coloring_loss: Rational,
    /// Vertex-loss sum with Q-saturated vertices charged `k(n-1)/2 - deg/2`.
    pub vertex_loss_sum: Rational,
    /// Same with the shifted charge `k(n-1)/2 - (deg-1)/2`.
    pub vertex_loss_sum_shifted: Rational,
    pub steps: Vec<AuditStep>,
}

impl AuditReport {
    pub fn first_failure(&self) -> Option<&AuditStep> {
        self.steps.iter().find(|s| !s.holds)
    }
}

fn fmt(r: &Rational) -> String {
    crate::rational::display(r)
}

pub fn audit_dense_coloring(
    p: &DenseParams,
    g: &Graph,
    c: &EdgeColoring,
) -> Result<AuditReport, BoundsError> {
    let n = p.n;
    let padded = c
        .with_color_count(p.k.max(c.color_count()))
        .expect("palette only grows");
    let c = &padded;
    if let Some(w) = find_mono_cm(g, c, n).map_err(|_| BoundsError::OddN(n))? {
        return Err(BoundsError::HasMonochromaticCM(w));
    }
    let to_bounds = |e: LossError| match e {
        LossError::HasMonochromaticCM(w) => BoundsError::HasMonochromaticCM(w),
        _ => BoundsError::OddN(n),
    };
    let v = g.vertex_count();
    let k = p.k;
    let kk = int(k * k);
    let zero = Rational::zero();
    let hypotheses = dense_hypotheses(p, g, c);
    let mut steps: Vec<AuditStep> = hypotheses
        .iter()
        .map(|h| AuditStep {
            name: h.name,
            holds: h.holds,
            detail: format!("margin {}", fmt(&h.margin)),
        })
        .collect();

    let missing = binom2(v) - int(g.edge_count());
    let missing_cap = p.delta * kk * int(n * n) / int(2);
    steps.push(AuditStep {
        name: "missing edges < delta k^2 n^2 / 2",
        holds: missing < missing_cap,
        detail: format!("missing {} vs {}", fmt(&missing), fmt(&missing_cap)),
    });

    let degree_threshold = (int(k) - frac(1, 2)) * int(n);
    let low_degree: Vec<usize> = (0..v)
        .filter(|&x| int(g.degree(x)) < degree_threshold)
        .collect();
    let eps_ok = p.epsilon > zero;
    let low_degree_bound = eps_ok.then(|| p.delta * kk * int(n) / p.epsilon);
    let low_ok = low_degree_bound.is_some_and(|b| int(low_degree.len()) <= b);
    steps.push(AuditStep {
        name: "|V_low| <= delta k^2 n / epsilon",
        holds: low_ok,
        detail: format!(
            "|V_low| = {} vs {}",
            low_degree.len(),
            low_degree_bound.as_ref().map_or("undefined".into(), fmt)
        ),
    });

    let classes = classify_vertices(g, c, n).map_err(to_bounds)?;
    let mut is_low = vec![false; v];
    for &x in &low_degree {
        is_low[x] = true;
    }
    let small_outside_low: Vec<usize> = (0..v)
        .filter(|&x| !is_low[x] && classes[x] == VertexClass::Small)
        .collect();
    steps.push(AuditStep {
        name: "no small vertex outside V_low",
        holds: small_outside_low.is_empty(),
        detail: format!("{} small vertices of high degree", small_outside_low.len()),
    });

    let strong: Vec<usize> = (0..v)
        .filter(|&x| !is_low[x] && classes[x] == VertexClass::Strong)
        .collect();
    let beta = int(strong.len()) / int(n);
    let strong_bound = eps_ok.then(|| int(2) * p.delta * kk / (p.epsilon * p.epsilon));
    steps.push(AuditStep {
        name: "beta <= 2 delta k^2 / epsilon^2",
        holds: strong_bound.is_some_and(|b| beta <= b),
        detail: format!(
            "beta = {} vs {}",
            fmt(&beta),
            strong_bound.as_ref().map_or("undefined".into(), fmt)
        ),
    });

    let mut removed = is_low.clone();
    for &x in &strong {
        removed[x] = true;
    }
    let residual: Vec<usize> = (0..v).filter(|&x| !removed[x]).collect();
    steps.push(AuditStep {
        name: "residual vertices > (k-1/2)n",
        holds: int(residual.len()) > degree_threshold,
        detail: format!("{} vs {}", residual.len(), fmt(&degree_threshold)),
    });

    let survivors: Vec<usize> = residual
        .iter()
        .copied()
        .filter(|&x| classes[x] == VertexClass::QSaturated)
        .collect();
    let (sub, sub_c) = c.induced(g, &survivors);
    let survivor_max_component = (1..=sub_c.color_count())
        .map(|i| {
            let class = color_class(&sub, &sub_c, i).expect("color in range");
            components(&class)
                .sizes()
                .iter()
                .copied()
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    steps.push(AuditStep {
        name: "surviving monochromatic components have <= n-1 vertices",
        holds: survivor_max_component < n,
        detail: format!("largest {survivor_max_component}"),
    });

    // The contradiction is drawn on exactly (k-1/2)n survivors.
    let target = (2 * k).saturating_sub(1) * n / 2;
    if survivors.len() >= target {
        let kept = &survivors[..target];
        let (h, hc) = c.induced(g, kept);
        let small = small_components_bound(&h, &hc, k, n);
        steps.push(AuditStep {
            name: "small-components bound applies to G'",
            holds: small.applicable && small.holds == Some(true),
            detail: small
                .reason
                .clone()
                .unwrap_or_else(|| format!("e(G') = {} <= {}", small.edges, fmt(&small.bound))),
        });
        let cap = binom2(target) - missing_cap;
        steps.push(AuditStep {
            name: "e(G') <= C(v(G'),2) - delta k^2 n^2 / 2",
            holds: int(h.edge_count()) <= cap,
            detail: format!("e(G') = {} vs {}", h.edge_count(), fmt(&cap)),
        });
    } else {
        steps.push(AuditStep {
            name: "G' on (k-1/2)n Q-saturated survivors exists",
            holds: false,
            detail: format!("{} survivors, need {target}", survivors.len()),
        });
    }

    let coloring_loss = coloring_loss(g, c, n).map_err(to_bounds)?;
    let budget = int(k) * frac(n as i64 - 1, 2);
    let charge = |x: usize, shift: i64| match classes[x] {
        VertexClass::Strong => frac(n as i64 - 1, 4),
        VertexClass::QSaturated => budget - frac(g.degree(x) as i64 - shift, 2),
        VertexClass::Small => zero,
    };
    let vertex_loss_sum: Rational = (0..v).map(|x| charge(x, 0)).sum();
    let vertex_loss_sum_shifted: Rational = (0..v).map(|x| charge(x, 1)).sum();
    steps.push(AuditStep {
        name: "vertex-loss sum <= coloring loss",
        holds: vertex_loss_sum <= coloring_loss,
        detail: format!(
            "{} <= {} (shifted charge: {})",
            fmt(&vertex_loss_sum),
            fmt(&coloring_loss),
            fmt(&vertex_loss_sum_shifted)
        ),
    });

    Ok(AuditReport {
        hypotheses,
        degree_threshold,
        low_degree,
        low_degree_bound,
        classes,
        small_outside_low,
        strong,
        beta,
        strong_bound,
        residual,
        survivor_max_component,
        coloring_loss,
        vertex_loss_sum,
        vertex_loss_sum_shifted,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{affine_plane_coloring, random_coloring};

    fn params() -> DenseParams {
        DenseParams {
            k: 4,
            epsilon: frac(1, 2),
            delta: frac(1, 500),
            n: 4,
        }
    }

    #[test]
    fn affine_k9_fails_vertex_hypothesis() {
        let (g, c) = affine_plane_coloring(3).unwrap();
        let report = audit_dense_coloring(&params(), &g, &c).unwrap();
        assert_eq!(
            report.first_failure().unwrap().name,
            "v(G) > (k-1/2+epsilon)n"
        );
        assert_eq!(report.low_degree, (0..9).collect::<Vec<_>>());
        assert_eq!(report.degree_threshold, int(14));
        assert!(report.strong.is_empty());
        assert!(report.vertex_loss_sum <= report.coloring_loss);
    }

    #[test]
    fn padded_star_triangle() {
        let g = Graph::complete(4);
        let c = EdgeColoring::from_fn(&g, 4, |_, v| if v == 3 { 1 } else { 2 }).unwrap();
        let report = audit_dense_coloring(&params(), &g, &c).unwrap();
        assert!(!report.hypotheses[5].holds);
        assert_eq!(report.low_degree.len(), 4);
        assert!(report.strong.is_empty());
        assert_eq!(report.classes[3], VertexClass::Strong);
        // F(G) = 4·(3/2)·4 - 6 = 18; charges 9/2 + 3/4 for the Q-saturated
        // leaf (4·3/2 - 3/2) and the strong center.
        assert_eq!(report.coloring_loss, int(18));
        assert_eq!(report.vertex_loss_sum, frac(21, 4));
        assert_eq!(report.vertex_loss_sum_shifted, frac(23, 4));
    }

    #[test]
    fn random_k17_is_not_a_candidate() {
        let (g, c) = random_coloring(17, 4, 7);
        assert!(matches!(
            audit_dense_coloring(&params(), &g, &c),
            Err(BoundsError::HasMonochromaticCM(_))
        ));
    }
}
