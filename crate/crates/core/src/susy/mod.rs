//! Closed-form physics of the Pöschl-Teller well and its SUSY partners.

mod delta;
mod integrals;
mod params;
mod partner;

pub use delta::{
    delta_ground_state, delta_singular_point, delta_susy_beta, delta_susy_potential_regular,
    delta_well, DeltaWell,
};
pub use integrals::{
    l_function, l_hypergeometric, m_function, m_hypergeometric, m_infinity, zeta_bound,
};
pub use params::{
    analytic_spectrum, factorization, ground_state, is_transparent, make_params, pt_potential,
    FactorizationPair, PTParams, SpectrumReport, Transparency, TRANSPARENCY_TOL,
};
pub use partner::{
    beta, beta_prime, missing_state, omega, partner_from_beta, partner_potential,
    singular_point, singular_point_minus, singular_point_plus, two_susy_particular,
    two_susy_potential, zeta_from_left_origin, Branch, SusyBranchConfig,
};
