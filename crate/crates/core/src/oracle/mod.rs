//! Brute-force ground truth.
//!
//! Every sweep enumerates its whole space: ordered pairs of long cycles, long
//! cycles against a fixed diagonal, or all plane permutations. Nothing here
//! uses a closed form. Parallel sweeps split the outer loop into disjoint index
//! ranges; each worker fills a private integer table and the tables are summed
//! once at the end, so the output does not depend on the worker count.

mod cache;
mod sweep;
mod table;

pub use cache::OracleCache;
pub use sweep::{
    count_factorizations, expected_k_cycles, fixed_left_cycle_counts, pair_histogram,
    plane_histogram, reflected_ntae_totals, sweep_cycle_types_reduced, sweep_factorizations, sweep_fixed_diagonal, sweep_pairs, PairSweep,
    PlaneSweep, SweepOptions, DEFAULT_GUARD, FACTORIZATION_GUARD,
};
pub use table::{CountTable, OracleQuery, OracleResult, SweepKind, TallyKey, VERSION};
