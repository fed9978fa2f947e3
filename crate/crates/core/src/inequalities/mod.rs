//! Closed-form evaluators, inequality and identity checks, power-law fits and
//! the seeded sweep harness.

mod checks;
mod fit;
mod formulas;
mod sweep;

pub use checks::{
    best_fit_reuleaux, best_posed_polar_reuleaux, best_regular_triangle,
    blaschke_lebesgue_stability, cap_domain_chain, check_area_perimeter_polarity, check_barbier,
    check_blaschke_lebesgue, check_isominwidth, check_polar_area_identity, check_polar_hausdorff,
    check_reduction_distance, contact_angle_report, inradius_excess, isominwidth_bound,
    CapDomainChain, ContactAngleReport, ReductionDistance, VerificationRecord, CONSTANT_WIDTH_TOL,
};
pub use fit::{fit_power_law, geometric_grid, PowerFit};
pub use formulas::{
    f_derivative, f_eval, f_w_eval, f_w_slope_at_zero, polar_area_from_dual, tip_gap_coefficient,
    tip_gap_coefficient_alt, tip_profile, TipProfile,
};
pub use sweep::{
    family_body, random_close_pair, random_corpus, rows_to_csv, stability_sweep, sweep_pose,
    verify_suite, Corpus, Family, StabilityFitReport, Suite, SweepRow, CSV_HEADER, IDENTITY_TOL,
    POLAR_HAUSDORFF_TOL,
};
