//! S/Q/I partitions of connected graphs without a matching of size `n/2`.
//!
//! For a connected graph with `ν(G) < n/2` the partition satisfies
//!
//! 1. `|Q| + 2|S| = min(v(G), n - 1)`,
//! 2. `I` is independent, and empty when `v(G) <= n - 1`,
//! 3. every vertex of `Q` has at most one neighbor in `I`,
//! 4. every vertex of `I` has degree below `n/2`.
//!
//! Small graphs (`v(G) <= n - 1`) put everything in `Q`. Larger ones take
//! `S` from the Tutte–Berge witness, place one vertex of every odd component
//! of `G - S` except the largest in `I`, and move vertices of `I` back
//! into `Q` until condition 1 is tight.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::matching::{maximum_matching, tutte_berge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    S,
    Q,
    I,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::S => "S",
            Part::Q => "Q",
            Part::I => "I",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has a matching of size {matching} >= n/2 = {}", n / 2)]
    HasLargeMatching { matching: usize, n: usize },
    #[error("n = {0} must be even and at least 2")]
    OddN(usize),
}

/// Disjoint vertex sets, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqiPartition {
    pub s: Vec<usize>,
    pub q: Vec<usize>,
    pub i: Vec<usize>,
    pub n: usize,
}

impl SqiPartition {
    /// Part of every vertex in `0..vertex_count`; `None` if unassigned.
    pub fn roles(&self, vertex_count: usize) -> Vec<Option<Part>> {
        let mut roles = vec![None; vertex_count];
        for (set, part) in [(&self.s, Part::S), (&self.q, Part::Q), (&self.i, Part::I)] {
            for &v in set {
                if v < vertex_count {
                    roles[v] = Some(part);
                }
            }
        }
        roles
    }

    pub fn vertex_count(&self) -> usize {
        self.s.len() + self.q.len() + self.i.len()
    }

    /// Same partition with every vertex `v` renamed to `map[v]`.
    pub fn mapped(&self, map: &[usize]) -> SqiPartition {
        let remap = |set: &[usize]| {
            let mut out: Vec<usize> = set.iter().map(|&v| map[v]).collect();
            out.sort_unstable();
            out
        };
        SqiPartition {
            s: remap(&self.s),
            q: remap(&self.q),
            i: remap(&self.i),
            n: self.n,
        }
    }
}

pub(crate) fn check_n(n: usize) -> Result<(), PartitionError> {
    if n < 2 || n % 2 == 1 {
        Err(PartitionError::OddN(n))
    } else {
        Ok(())
    }
}

pub fn sqi_partition(g: &Graph, n: usize) -> Result<SqiPartition, PartitionError> {
    check_n(n)?;
    if !g.is_connected() {
        return Err(PartitionError::NotConnected);
    }
    let matching = maximum_matching(g).size();
    if 2 * matching >= n {
        return Err(PartitionError::HasLargeMatching { matching, n });
    }
    let v = g.vertex_count();
    if v < n {
        return Ok(SqiPartition {
            s: Vec::new(),
            q: (0..v).collect(),
            i: Vec::new(),
            n,
        });
    }

    let witness = tutte_berge(g);
    let s = witness.set;
    let mut i: Vec<usize> = witness
        .odd_components
        .iter()
        .skip(1)
        .map(|c| c[0])
        .collect();
    i.sort_unstable();

    // |Q| + 2|S| = 2ν + 1 <= n - 1 here; close the gap from the smallest ids.
    let q_len = v - s.len() - i.len();
    let gap = (n - 1) - (q_len + 2 * s.len());
    let moved: Vec<usize> = i.drain(..gap).collect();
    debug_assert_eq!(moved.len(), gap);

    let mut excluded = vec![false; v];
    for &x in s.iter().chain(&i) {
        excluded[x] = true;
    }
    let q = (0..v).filter(|&x| !excluded[x]).collect();
    Ok(SqiPartition { s, q, i, n })
}

/// A failed condition and what witnesses the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Vertex missing from, or repeated in, the partition.
    Cover {
        vertex: usize,
    },
    Count {
        lhs: usize,
        rhs: usize,
    },
    NotIndependent {
        u: usize,
        v: usize,
    },
    NonemptyI {
        vertex: usize,
    },
    TooManyINeighbors {
        vertex: usize,
        first: usize,
        second: usize,
    },
    HighDegree {
        vertex: usize,
        degree: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Cover { vertex } => write!(f, "vertex {vertex} not covered exactly once"),
            Violation::Count { lhs, rhs } => write!(f, "|Q|+2|S| = {lhs} != {rhs}"),
            Violation::NotIndependent { u, v } => write!(f, "edge {{{u}, {v}}} inside I"),
            Violation::NonemptyI { vertex } => {
                write!(f, "I contains {vertex} although v(G) <= n-1")
            }
            Violation::TooManyINeighbors {
                vertex,
                first,
                second,
            } => {
                write!(f, "Q vertex {vertex} has I neighbors {first} and {second}")
            }
            Violation::HighDegree { vertex, degree } => {
                write!(f, "I vertex {vertex} has degree {degree}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub violation: Option<Violation>,
}

impl ConditionCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Outcome of [`verify_sqi`]: the covering check, the four conditions in
/// order, and the consequences `|S| < n/2`, `|Q| < n`, `|S| <= |I|`
/// (strict once `v(G) > n - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqiReport {
    pub cover: ConditionCheck,
    pub conditions: [ConditionCheck; 4],
    pub derived: Vec<(&'static str, bool)>,
}

impl SqiReport {
    pub fn conditions_hold(&self) -> bool {
        self.cover.holds() && self.conditions.iter().all(ConditionCheck::holds)
    }

    pub fn all_hold(&self) -> bool {
        self.conditions_hold() && self.derived.iter().all(|&(_, ok)| ok)
    }
}

pub fn verify_sqi(g: &Graph, n: usize, p: &SqiPartition) -> SqiReport {
    let v = g.vertex_count();
    let mut count = vec![0usize; v];
    let mut cover_violation = None;
    for &x in p.s.iter().chain(&p.q).chain(&p.i) {
        if x >= v {
            cover_violation.get_or_insert(Violation::Cover { vertex: x });
        } else {
            count[x] += 1;
        }
    }
    if let Some(x) = (0..v).find(|&x| count[x] != 1) {
        cover_violation.get_or_insert(Violation::Cover { vertex: x });
    }
    let roles = p.roles(v);
    let in_i = |x: usize| roles[x] == Some(Part::I);

    let lhs = p.q.len() + 2 * p.s.len();
    let rhs = v.min(n.saturating_sub(1));
    let c1 = (lhs != rhs).then_some(Violation::Count { lhs, rhs });

    let c2 = p
        .i
        .iter()
        .filter(|&&x| x < v)
        .find_map(|&x| {
            g.neighbors(x)
                .iter()
                .find(|&&w| in_i(w))
                .map(|&w| Violation::NotIndependent {
                    u: x.min(w),
                    v: x.max(w),
                })
        })
        .or_else(|| (v < n && !p.i.is_empty()).then(|| Violation::NonemptyI { vertex: p.i[0] }));

    let c3 = p.q.iter().filter(|&&x| x < v).find_map(|&x| {
        let mut it = g.neighbors(x).iter().filter(|&&w| in_i(w));
        match (it.next(), it.next()) {
            (Some(&first), Some(&second)) => Some(Violation::TooManyINeighbors {
                vertex: x,
                first,
                second,
            }),
            _ => None,
        }
    });

    let c4 =
        p.i.iter()
            .filter(|&&x| x < v)
            .find(|&&x| 2 * g.degree(x) >= n)
            .map(|&x| Violation::HighDegree {
                vertex: x,
                degree: g.degree(x),
            });

    let (s, q, i) = (p.s.len(), p.q.len(), p.i.len());
    let derived = vec![
        ("|S| < n/2", 2 * s < n),
        ("|Q| < n", q < n),
        ("|S| <= |I|", s <= i),
        ("|S| < |I| when v(G) > n-1", v < n || s < i),
    ];

    SqiReport {
        cover: ConditionCheck {
            name: "partition covers V",
            violation: cover_violation,
        },
        conditions: [
            ConditionCheck {
                name: "|Q|+2|S| = min{v(G),n-1}",
                violation: c1,
            },
            ConditionCheck {
                name: "I independent (empty if v(G) <= n-1)",
                violation: c2,
            },
            ConditionCheck {
                name: "Q vertices have <= 1 neighbor in I",
                violation: c3,
            },
            ConditionCheck {
                name: "I vertices have degree < n/2",
                violation: c4,
            },
        ],
        derived,
    }
}

/// `C(|Q|+|S|, 2) + |I|·|S| + |Q|`, an upper bound on the edge count of a
/// graph carrying a valid partition.
pub fn partition_edge_bound(p: &SqiPartition) -> u64 {
    let (s, q, i) = (p.s.len() as u64, p.q.len() as u64, p.i.len() as u64);
    let top = q + s;
    top * top.saturating_sub(1) / 2 + i * s + q
}
