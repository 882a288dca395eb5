//! Terminating basic hypergeometric series and the identities built on them.

pub mod identities;
pub mod pochhammer;
pub mod sampler;
pub mod series;
pub mod transforms;

pub use identities::{sides, verify_identity, IdentityId, TransformInstance};
pub use pochhammer::{qpoch, qpoch_multi, qpoch_ratio};
pub use series::{is_vwp_balanced, series_eval, HypSeriesSpec, Kind, Param};
pub use transforms::{
    induction_step_residual, induction_step_sum, pair_sum, rank_two_residual, transform_ii_lhs,
    transform_iii_lhs, transform_iii_residual, verify_transform_II, verify_transform_III, InductionReading,
    TypeCReading,
};
