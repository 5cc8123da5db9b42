//! The group-ring valued evaluator over monic polynomials coprime to I, its Stickelberger
//! coefficients, the rank-n elements built from sublattice counts, and their identities.

mod identities;
mod series;
mod theta;

pub use identities::{
    check_character_tail, check_euler_agreement, check_mod_norm_factorization, check_noinf_relation,
    check_noinf_weights, check_norm_grouping, check_phi_agreement, check_rank_one, check_tail, param_tag,
    split_quadratic, verify_identities,
};
pub use series::{
    char_l_poly, euler_series, stickelberger_q, CharLPoly, GrSeries, SeriesMethod, StickCtx, StickelbergerQ,
    TailVerdict, TailViolation,
};
pub use theta::{phi_series, phi_series_sum, theta1, theta_n, theta_noinf, PhiSeriesMethod};
