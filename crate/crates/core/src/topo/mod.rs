//! Computable stand-ins for homotopy hypotheses: signed boundary matrices,
//! Betti numbers over GF(2) and the rationals, Euler characteristics, a
//! tri-state fundamental group test, and sphere certificates.

mod certify;
mod chain;
mod pi1;

pub use certify::{
    certify_sphere, certify_sphere_with_budget, certify_standalone, SphereCertificate, SphereChecks,
    Verdict,
};
pub use chain::{
    betti_numbers, boundary_matrices, euler_characteristic, rank_gf2, rank_rational, BoundaryMatrix,
    ChainComplexData, Coefficients,
};
pub use pi1::{
    abelianization, edge_path_presentation, pi1_trivial, presentation_trivial, simplify, Pi1Report,
    Presentation, Tri, DEFAULT_PI1_BUDGET,
};
