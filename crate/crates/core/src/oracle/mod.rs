//! Ground truth for testing: exhaustive solvers, the temporal matching
//! reduction and instance generators.

mod bruteforce;
mod generate;
mod matching;

pub use bruteforce::{ctc_bruteforce, etc_bruteforce, etc_min_cost, OracleCaps, OracleOutcome};
pub use generate::{counterexample_five, gen_path, gen_planted, gen_random};
pub use matching::{reduce_tm_to_etc, tm_bruteforce, Reduction, TmInstance};
