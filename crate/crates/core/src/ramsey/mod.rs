//! Monochromatic connected matchings: detection, avoider search, and exact
//! small Ramsey numbers for connected matchings.

mod engine;
mod scan;

pub use engine::{
    search_avoider, search_with_stats, SearchConfig, SearchError, SearchOutcome, SearchStats,
};
pub use scan::{ramsey_cm, RamseyOutcome};

use thiserror::Error;

use crate::graph::{color_class, components, EdgeColoring, Graph};
use crate::matching::{maximum_matching, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("n = {0} must be even and at least 2")]
    OddN(usize),
}

/// Largest matching lying inside a single component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedMatching {
    pub size: usize,
    /// Component carrying the matching, ascending; empty for the null graph.
    pub component: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// A maximum matching splits over components, so one global matching gives
/// every per-component maximum. Ties go to the component with the smallest
/// vertex.
pub fn max_connected_matching(g: &Graph) -> ConnectedMatching {
    let labeling = components(g);
    let m = maximum_matching(g);
    let mut per = vec![0usize; labeling.count()];
    for &(u, _) in m.edges() {
        per[labeling.label(u)] += 1;
    }
    let Some(best) = (0..per.len()).max_by(|&a, &b| per[a].cmp(&per[b]).then(b.cmp(&a))) else {
        return ConnectedMatching {
            size: 0,
            component: Vec::new(),
            edges: Vec::new(),
        };
    };
    let component = labeling.members().swap_remove(best);
    let edges = m
        .edges()
        .iter()
        .copied()
        .filter(|&(u, _)| labeling.label(u) == best)
        .collect();
    ConnectedMatching {
        size: per[best],
        component,
        edges,
    }
}

/// A matching of size `n/2` inside one monochromatic component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMWitness {
    pub color: usize,
    pub component: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
}

impl CMWitness {
    /// Independent re-check against the coloring: right size, right color,
    /// disjoint edges, and `component` is exactly one component of the color
    /// class containing every matching edge.
    pub fn validate(&self, g: &Graph, c: &EdgeColoring, n: usize) -> bool {
        if self.matching.len() != n / 2 || self.matching.is_empty() {
            return false;
        }
        let Ok(class) = color_class(g, c, self.color) else {
            return false;
        };
        if Matching::from_edges(&class, &self.matching).is_err() {
            return false;
        }
        let labeling = components(&class);
        let id = labeling.label(self.matching[0].0);
        let members = &labeling.members()[id];
        members == &self.component
            && self
                .matching
                .iter()
                .all(|&(u, v)| labeling.label(u) == id && labeling.label(v) == id)
    }
}

pub(crate) fn check_n(n: usize) -> Result<(), DetectError> {
    if n < 2 || n % 2 == 1 {
        Err(DetectError::OddN(n))
    } else {
        Ok(())
    }
}

/// Smallest color whose class has a component with a matching of size
/// `n/2`, if any.
pub fn find_mono_cm(
    g: &Graph,
    c: &EdgeColoring,
    n: usize,
) -> Result<Option<CMWitness>, DetectError> {
    check_n(n)?;
    for color in 1..=c.color_count() {
        let class = color_class(g, c, color).expect("color in range");
        let best = max_connected_matching(&class);
        if 2 * best.size >= n {
            let mut matching = best.edges;
            matching.truncate(n / 2);
            return Ok(Some(CMWitness {
                color,
                component: best.component,
                matching,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_matching_examples() {
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_connected_matching(&two_k2).size, 1);
        assert_eq!(max_connected_matching(&two_k2).component, vec![0, 1]);
        assert_eq!(max_connected_matching(&Graph::path(4)).size, 2);
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(max_connected_matching(&two_k3).size, 1);
        assert_eq!(max_connected_matching(&Graph::empty(0)).size, 0);
        let cm = max_connected_matching(&Graph::empty(1).disjoint_union(&Graph::path(4)));
        assert_eq!((cm.size, cm.component), (2, vec![1, 2, 3, 4]));
    }

    #[test]
    fn detector_examples() {
        let k4 = Graph::complete(4);
        let mono = EdgeColoring::monochromatic(&k4, 1);
        let w = find_mono_cm(&k4, &mono, 4).unwrap().unwrap();
        assert_eq!(w.color, 1);
        assert_eq!(w.matching.len(), 2);
        assert!(w.validate(&k4, &mono, 4));

        let st = EdgeColoring::from_fn(&k4, 2, |_, v| if v == 3 { 1 } else { 2 }).unwrap();
        assert_eq!(find_mono_cm(&k4, &st, 4).unwrap(), None);
        assert_eq!(find_mono_cm(&k4, &st, 3), Err(DetectError::OddN(3)));
    }

    #[test]
    fn forged_witness_is_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let c = EdgeColoring::monochromatic(&g, 1);
        let forged = CMWitness {
            color: 1,
            component: vec![0, 1, 2, 3],
            matching: vec![(0, 1), (2, 3)],
        };
        assert!(!forged.validate(&g, &c, 4));
        let wrong_color = CMWitness {
            color: 2,
            component: vec![0, 1],
            matching: vec![(0, 1)],
        };
        assert!(!wrong_color.validate(&g, &c, 2));
        let ok = CMWitness {
            color: 1,
            component: vec![0, 1],
            matching: vec![(0, 1)],
        };
        assert!(ok.validate(&g, &c, 2));
    }
}
