//! Generating series for the cohomology of Hilbert schemes of points on a
//! K3 surface.

mod gottsche;
mod molien;
mod qseries;

pub use gottsche::{gottsche_series, k3_betti_numbers};
pub use molien::{
    extract_pzn, molien_pg, molien_pg_expanded, GradedCharSeries, DEFAULT_T_ORDER, MAX_RANK,
};
pub use qseries::{
    ak_series, delta2_series, delta_series, dim_series, eps_series, euler_series, modular_identity_rhs,
    mq_series, weight_factor_series, weight_factor_z_coeff, QSeries, DEFAULT_Q_ORDER,
};
