//! Invariant analysis for the associated graded ring of a numerical
//! semigroup ring.
//!
//! Everything is computed at the semigroup level: membership sieves, the
//! order function and ideal powers, Apéry sets of the semigroup and of its
//! blow-up, the reduction number, the socle of the homogeneous maximal
//! ideal, and from those the Cohen-Macaulay, Buchsbaum and Gorenstein
//! verdicts. The `search` module enumerates semigroup corpora, re-checks the
//! whole battery of structure theorems on each member, and hunts for
//! counterexamples to two open questions.

pub mod graded;
pub mod report;
pub mod search;
pub mod semigroup;
pub mod threegen;

pub use graded::{analyze, blowup, AnalysisReport, AperyRecord, GradedError, GradedRing, SocleBasis, SocleEntry};
pub use report::ReportDocument;
pub use search::{
    enumerate, hunt, load_corpus, minimal_generating_systems, sweep_theorems, EnumerationParams,
    Hit, OpenQuestion, SearchError, SweepResult, Violation,
};
pub use semigroup::{NumericalSemigroup, OrderTable, SemigroupError};
pub use threegen::{k_invariant, symmetric_threegen_check, verify_structure, ThreeGenError, ThreeGenReport};
