//! Edge-loss accounting against the budgets `(n-1)/2 · v(G)` for one color
//! and `k · (n-1)/2 · v(G)` for `k` colors.
//!
//! Per-vertex losses are read off the S/Q/I partition of the vertex's
//! component:
//!
//! | part | single color            | `k` colors (by class)          |
//! |------|-------------------------|--------------------------------|
//! | S    | `(n-1)/4`               | strong: `(n-1)/4`              |
//! | Q    | `(n-1)/2 - deg(v)/2`    | Q-saturated: `k(n-1)/2 - deg(v)/2` |
//! | I    | `0`                     | small: `0`                     |
//!
//! The vertex losses never sum to more than the graph loss. All arithmetic
//! is exact.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::graph::{color_class, components, ComponentLabeling, EdgeColoring, Graph};
use crate::partition::{sqi_partition, verify_sqi, Part, PartitionError, SqiPartition};
use crate::ramsey::{check_n, find_mono_cm, max_connected_matching, CMWitness};
use crate::rational::{frac, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LossError {
    #[error("graph has a connected matching of size {size} >= n/2")]
    HasConnectedMatching { size: usize, component: Vec<usize> },
    #[error("color {} has a connected matching of size n/2", .0.color)]
    HasMonochromaticCM(CMWitness),
    #[error("invalid partition for component {component}: {reason}")]
    InvalidPartition { component: usize, reason: String },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Strong,
    QSaturated,
    Small,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexClass::Strong => "strong",
            VertexClass::QSaturated => "q-saturated",
            VertexClass::Small => "small",
        })
    }
}

/// One S/Q/I partition per component, in global vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartitions {
    pub labeling: ComponentLabeling,
    pub parts: Vec<SqiPartition>,
}

impl ComponentPartitions {
    /// Part of every vertex; panics if some vertex is unassigned.
    pub fn roles(&self) -> Vec<Part> {
        let n = self.labeling.labels().len();
        let mut roles = vec![None; n];
        for p in &self.parts {
            for (v, r) in p.roles(n).into_iter().enumerate() {
                if r.is_some() {
                    roles[v] = r;
                }
            }
        }
        roles
            .into_iter()
            .map(|r| r.expect("every vertex has a part"))
            .collect()
    }
}

fn ensure_no_cm(g: &Graph, n: usize) -> Result<(), LossError> {
    check_n(n).map_err(|_| PartitionError::OddN(n))?;
    let cm = max_connected_matching(g);
    if 2 * cm.size >= n {
        return Err(LossError::HasConnectedMatching {
            size: cm.size,
            component: cm.component,
        });
    }
    Ok(())
}

fn ensure_no_mono_cm(g: &Graph, c: &EdgeColoring, n: usize) -> Result<(), LossError> {
    match find_mono_cm(g, c, n).map_err(|_| PartitionError::OddN(n))? {
        Some(w) => Err(LossError::HasMonochromaticCM(w)),
        None => Ok(()),
    }
}

/// Partitions every component of `g` (no membership check).
pub fn decompose_components(g: &Graph, n: usize) -> Result<ComponentPartitions, LossError> {
    let labeling = components(g);
    let mut parts = Vec::with_capacity(labeling.count());
    for members in labeling.members() {
        let (sub, map) = g.induced(&members);
        parts.push(sqi_partition(&sub, n)?.mapped(&map));
    }
    Ok(ComponentPartitions { labeling, parts })
}

fn half_budget(n: usize) -> Rational {
    frac(n as i64 - 1, 2)
}

/// `(n-1)/2 · v(G) - e(G)` for graphs without a connected matching of size `n/2`.
pub fn loss_of_graph(g: &Graph, n: usize) -> Result<Rational, LossError> {
    ensure_no_cm(g, n)?;
    Ok(half_budget(n) * int(g.vertex_count()) - int(g.edge_count()))
}

fn vertex_loss(part: Part, n: usize, degree: usize) -> Rational {
    match part {
        Part::S => frac(n as i64 - 1, 4),
        Part::Q => half_budget(n) - frac(degree as i64, 2),
        Part::I => Rational::zero(),
    }
}

/// Per-vertex losses for the given per-component partitions, each of which
/// is re-verified first.
pub fn vertex_losses(
    g: &Graph,
    n: usize,
    partitions: &ComponentPartitions,
) -> Result<Vec<Rational>, LossError> {
    if partitions.labeling != components(g) {
        return Err(LossError::InvalidPartition {
            component: 0,
            reason: "component labeling mismatch".into(),
        });
    }
    for (id, (members, p)) in partitions
        .labeling
        .members()
        .iter()
        .zip(&partitions.parts)
        .enumerate()
    {
        let (sub, map) = g.induced(members);
        let mut local = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let to_local = |set: &[usize]| -> Result<Vec<usize>, LossError> {
            set.iter()
                .map(|&v| match local.get(v) {
                    Some(&l) if l != usize::MAX => Ok(l),
                    _ => Err(LossError::InvalidPartition {
                        component: id,
                        reason: format!("vertex {v} outside the component"),
                    }),
                })
                .collect()
        };
        let lp = SqiPartition {
            s: to_local(&p.s)?,
            q: to_local(&p.q)?,
            i: to_local(&p.i)?,
            n,
        };
        let report = verify_sqi(&sub, n, &lp);
        if !report.conditions_hold() {
            let failed = std::iter::once(&report.cover)
                .chain(&report.conditions)
                .find(|c| !c.holds())
                .expect("some check failed");
            return Err(LossError::InvalidPartition {
                component: id,
                reason: failed.name.to_string(),
            });
        }
    }
    let roles = partitions.roles();
    Ok((0..g.vertex_count())
        .map(|v| vertex_loss(roles[v], n, g.degree(v)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossMode {
    SingleColor,
    MultiColor { colors: usize },
}

/// Per-vertex losses next to the graph total they are charged against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LossLedger {
    pub mode: LossMode,
    pub n: usize,
    pub values: Vec<Rational>,
    pub total: Rational,
    pub classes: Option<Vec<VertexClass>>,
    /// One entry for a single color; one per color (index `i` = color `i+1`)
    /// otherwise.
    pub partitions: Vec<ComponentPartitions>,
}

impl LossLedger {
    pub fn sum(&self) -> Rational {
        self.values.iter().copied().sum()
    }

    pub fn slack(&self) -> Rational {
        self.total - self.sum()
    }

    pub fn holds(&self) -> bool {
        self.sum() <= self.total
    }
}

/// Checks that the vertex losses of `g` sum to at most its loss.
pub fn check_vertex_loss_sum(g: &Graph, n: usize) -> Result<(bool, LossLedger), LossError> {
    let total = loss_of_graph(g, n)?;
    let partitions = decompose_components(g, n)?;
    let values = vertex_losses(g, n, &partitions)?;
    let ledger = LossLedger {
        mode: LossMode::SingleColor,
        n,
        values,
        total,
        classes: None,
        partitions: vec![partitions],
    };
    Ok((ledger.holds(), ledger))
}

/// Partitions of every color class, index `i` holding color `i + 1`.
pub fn color_partitions(
    g: &Graph,
    c: &EdgeColoring,
    n: usize,
) -> Result<Vec<ComponentPartitions>, LossError> {
    ensure_no_mono_cm(g, c, n)?;
    (1..=c.color_count())
        .map(|color| decompose_components(&color_class(g, c, color).expect("color in range"), n))
        .collect()
}

fn classes_from(partitions: &[ComponentPartitions], vertex_count: usize) -> Vec<VertexClass> {
    let roles: Vec<Vec<Part>> = partitions.iter().map(ComponentPartitions::roles).collect();
    (0..vertex_count)
        .map(|v| {
            if roles.iter().any(|r| r[v] == Part::S) {
                VertexClass::Strong
            } else if roles.iter().all(|r| r[v] == Part::Q) {
                VertexClass::QSaturated
            } else {
                VertexClass::Small
            }
        })
        .collect()
}

pub fn classify_vertices(
    g: &Graph,
    c: &EdgeColoring,
    n: usize,
) -> Result<Vec<VertexClass>, LossError> {
    Ok(classes_from(&color_partitions(g, c, n)?, g.vertex_count()))
}

/// `k · (n-1)/2 · v(G) - e(G)` for colorings without a monochromatic
/// connected matching of size `n/2`.
pub fn coloring_loss(g: &Graph, c: &EdgeColoring, n: usize) -> Result<Rational, LossError> {
    ensure_no_mono_cm(g, c, n)?;
    Ok(int(c.color_count()) * half_budget(n) * int(g.vertex_count()) - int(g.edge_count()))
}

fn class_loss(class: VertexClass, colors: usize, n: usize, degree: usize) -> Rational {
    match class {
        VertexClass::Strong => frac(n as i64 - 1, 4),
        VertexClass::QSaturated => int(colors) * half_budget(n) - frac(degree as i64, 2),
        VertexClass::Small => Rational::zero(),
    }
}

pub fn coloring_vertex_losses(
    g: &Graph,
    c: &EdgeColoring,
    n: usize,
) -> Result<Vec<Rational>, LossError> {
    let classes = classify_vertices(g, c, n)?;
    Ok((0..g.vertex_count())
        .map(|v| class_loss(classes[v], c.color_count(), n, g.degree(v)))
        .collect())
}

/// Single-color losses of every vertex in every color class:
/// `out[i][v]` is the loss of `v` in color `i + 1`.
pub fn per_color_vertex_losses(
    g: &Graph,
    c: &EdgeColoring,
    n: usize,
) -> Result<Vec<Vec<Rational>>, LossError> {
    let partitions = color_partitions(g, c, n)?;
    partitions
        .iter()
        .enumerate()
        .map(|(i, p)| vertex_losses(&color_class(g, c, i + 1).expect("color in range"), n, p))
        .collect()
}

/// Multicolor analogue of [`check_vertex_loss_sum`].
pub fn check_coloring_loss_sum(
    g: &Graph,
    c: &EdgeColoring,
    n: usize,
) -> Result<(bool, LossLedger), LossError> {
    let total = coloring_loss(g, c, n)?;
    let partitions = color_partitions(g, c, n)?;
    let classes = classes_from(&partitions, g.vertex_count());
    let values = (0..g.vertex_count())
        .map(|v| class_loss(classes[v], c.color_count(), n, g.degree(v)))
        .collect();
    let ledger = LossLedger {
        mode: LossMode::MultiColor {
            colors: c.color_count(),
        },
        n,
        values,
        total,
        classes: Some(classes),
        partitions,
    };
    Ok((ledger.holds(), ledger))
}
