//! Minimum-angle oracle, the constructive witness, the regularity detector and
//! the Monte-Carlo verifier.

mod oracle;
mod regularity;
mod verify;
mod witness;

pub use oracle::{all_triple_angles, for_each_triple_angle, min_angle, triple_count, AngleReport};
pub use regularity::regularity_score;
pub use verify::{
    check_configuration, sample_configuration, sample_hyperbolic_disk, trial_rng, verify_theorem,
    Sampler, TrialOutcome, VerificationSummary, ViolationRecord, EUCLIDEAN_SLACK,
};
pub use witness::{
    angular_ordering, constructive_witness, within_bound, Branch, WitnessCertificate,
};
