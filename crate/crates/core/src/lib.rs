//! Shifted standard tableaux toolbox: exact counting through the
//! hook-length formula, the modified jeu de taquin standardization map and
//! its constant-fiber property, the split/merge bijection between
//! arbitrary fillings and (standard tableau, hook tabloid) pairs, a
//! uniform random tableau sampler, and brute-force oracles that verify
//! all of it exhaustively at small sizes.

pub mod error;
pub mod hook_tabloid;
pub mod merge;
pub mod oracle;
pub mod sampler;
pub mod shape;
pub mod split;
pub mod tabloid;

pub use error::{AlgoError, HookError, OracleError, SamplerError, ShapeError, TabloidError};
pub use hook_tabloid::{
    candidates, classify_candidate, js, rjs, Candidate, CandidateKind, HookTabloid,
};
pub use merge::{merge, merge_row};
pub use oracle::{
    enumerate_ssyt, fiber_census, for_each_tabloid, roundtrip_check, Bounds, CensusWitness,
    FiberCensus, RoundTripMode, RoundTripReport,
};
pub use sampler::{
    exhaustive_driver_report, sample_ssyt, tabloid_from_permutation, uniformity_report, SeededRng,
    UniformityReport,
};
pub use shape::{Cell, Diagram, OrderScheme, ShapeKind, StrictPartition, TotalOrder};
pub use split::{split, split_row, Case2Reason, Split2Outcome, Split3Case, SplitObserver};
pub use tabloid::{CellSet, Path, ShiftedTabloid};
