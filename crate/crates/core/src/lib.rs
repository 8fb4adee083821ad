//! Connected matchings in edge-colored graphs: maximum matchings and the
//! Gallai–Edmonds decomposition, S/Q/I partitions of graphs without large
//! matchings, exact edge-loss accounting, extremal edge bounds, avoiding
//! colorings, and exhaustive search for small connected-matching Ramsey
//! numbers.

pub mod audit;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod format;
pub mod graph;
pub mod loss;
pub mod matching;
pub mod partition;
pub mod ramsey;
pub mod rational;
