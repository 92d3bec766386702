//! Universal polynomials for tautological integrals over symmetric products
//! of curves, an interpolation-free recursion that recomputes them, and the
//! closed forms they are checked against.

mod cache;
mod closed;
mod recursion;
mod structure;
mod universal;

pub use cache::Engine;
pub use closed::{
    castelnuovo_count, castelnuovo_series, closed_a, closed_b, closed_b_literal, closed_c4, closed_form_catalogue, closed_s4, hphipsi0_literal_series, hphipsi0_series, hphipsi_closed_series,
    hphipsi_literal_series,
    hpsi_series, sigma1_coefficient, sigma1_coefficient_literal, ClosedFormInfo, Provenance,
};
pub use recursion::{recursion_integral, Recursion};
pub use structure::{ch_series, defect_series, hphi_series, hphipsi_series, hpsi_engine_series, segre_top_series};
pub use universal::{
    held_out_degrees, parse_term_label, sample_degrees, term_label, universal_integral,
    SamplePoint, UniversalIntegral, Witness,
};
