//! Fixtures, exhaustive instance generators and the verification suites.

mod fixtures;
mod labeled;
mod report;
mod suites;

pub use fixtures::{load_fixture, Fixture, FixtureLabels, FIXTURE_NAMES};
pub use labeled::{enumerate_labeled_graphs, labeled_graph, vertex_pairs, LabeledGraphs, LABELED_MAX_ORDER};
pub use report::{Failure, SuiteReport};
pub use suites::{run_suite, SuiteId, SuiteParams};
