//! Adversarial thinning, exhaustive oracles and the seeded experiment grid.

mod adversary;
mod experiment;
mod oracle;

pub use adversary::{adversary_delete, AdversaryKind, AdversaryStrategy};
pub use experiment::{
    run_experiment, run_trial, run_trials, trial_seed, EdgeTarget, ExperimentCell,
    ExperimentReport, ExperimentRow, Probability, Timing, TrialOutcome,
};
pub use oracle::{
    brute_force_cycle_oracle, cycle_length_counts, enumerate_cycles, format_length_set,
    ORACLE_LIMIT,
};
