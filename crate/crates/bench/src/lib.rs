//! Shared fixtures for the criterion benches.

use dunkl_core::states::{enumerate_level, state, LevelIndex};
use dunkl_core::{CoordinateSystem, GaussianState, MuParams};

/// A parameter choice with three distinct, non-trivial values.
pub fn generic_mu() -> MuParams {
    MuParams::from_ratios([(1, 3), (1, 4), (1, 5)]).expect("in domain")
}

/// Every state of `system` at exactly `level`.
pub fn level_states(system: CoordinateSystem, level: u32, mu: &MuParams) -> Vec<GaussianState> {
    enumerate_level(LevelIndex(level), system)
        .iter()
        .map(|q| state(q, mu).expect("enumerated labels are valid"))
        .collect()
}
