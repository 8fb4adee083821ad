//! Scanning `N = 1, 2, ...` for the smallest complete graph on which every
//! `k`-coloring has a monochromatic connected matching of size `n/2`.

use super::engine::{search_avoider, SearchConfig, SearchError, SearchOutcome};
use super::find_mono_cm;
use crate::graph::{EdgeColoring, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// `K_value` is certified, and `avoider` colors `K_{value-1}`.
    Exact { value: usize, avoider: EdgeColoring },
    /// Only `value > verified` is established, witnessed by `avoider` on
    /// `K_verified`. `budget_exhausted` is false when the scan hit `n_max`.
    LowerBound {
        verified: usize,
        avoider: EdgeColoring,
        budget_exhausted: bool,
    },
}

impl RamseyOutcome {
    pub fn avoider(&self) -> (usize, &EdgeColoring) {
        match self {
            RamseyOutcome::Exact { value, avoider } => (value - 1, avoider),
            RamseyOutcome::LowerBound {
                verified, avoider, ..
            } => (*verified, avoider),
        }
    }
}

/// Each `N` gets its own `budget`. Every avoider found is re-checked, and so
/// is its restriction to the first `N-1` vertices.
pub fn ramsey_cm(
    colors: usize,
    n: usize,
    n_max: usize,
    budget: u64,
) -> Result<RamseyOutcome, SearchError> {
    let mut best = (
        1,
        EdgeColoring::monochromatic(&Graph::complete(1), colors.max(1)),
    );
    let mut cfg = SearchConfig {
        budget,
        ..SearchConfig::new(1, colors, n)
    };
    for vertices in 1..=n_max {
        cfg.vertices = vertices;
        match search_avoider(&cfg) {
            Ok(SearchOutcome::Avoider(c)) => {
                let g = Graph::complete(vertices);
                assert_eq!(
                    find_mono_cm(&g, &c, n).ok(),
                    Some(None),
                    "search returned a non-avoider"
                );
                if vertices > 1 {
                    let keep: Vec<usize> = (0..vertices - 1).collect();
                    let (h, hc) = c.induced(&g, &keep);
                    assert_eq!(
                        find_mono_cm(&h, &hc, n).ok(),
                        Some(None),
                        "restriction of an avoider must avoid"
                    );
                }
                best = (vertices, c);
            }
            Ok(SearchOutcome::NoneExists) => {
                if vertices == 1 {
                    return Err(SearchError::InvalidConfig(
                        "K_1 cannot contain a matching".into(),
                    ));
                }
                return Ok(RamseyOutcome::Exact {
                    value: vertices,
                    avoider: best.1,
                });
            }
            Err(SearchError::BudgetExhausted { .. }) => {
                return Ok(RamseyOutcome::LowerBound {
                    verified: best.0,
                    avoider: best.1,
                    budget_exhausted: true,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(RamseyOutcome::LowerBound {
        verified: best.0,
        avoider: best.1,
        budget_exhausted: false,
    })
}
