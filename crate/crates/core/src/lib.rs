//! Complex, antilinearly-invariant deformations of root systems built from
//! factorized Weyl-group elements.
//!
//! The pipeline: pick a root system, choose vertex subsets of the two colors
//! of its Dynkin bicoloration, compose the factorized element
//! `sigma~ = sigma~_- sigma~_+`, build the deformation matrix `theta` from
//! powers of `sigma~` over the exact ring Q(i)[c, k]/(k^2 = c^2 - c), verify
//! its five defining constraints symbolically, generate the reduced orbits
//! and root space, and check invariance under the involutory factors.
//! A scanner classifies every bicolored candidate of a system.

pub mod deform;
pub mod error;
pub mod export;
pub mod reduced;
pub mod ring;
pub mod scan;
pub mod table;
pub mod weyl;

pub use deform::{
    build_theta, build_theta_variant, deform_simple_roots, factorize, verify_constraints,
    AnsatzVariant, ConstraintReport, DeformMatrix, FactorizedElement,
};
pub use error::Error;
pub use export::{export_model, ModelExport, ModelKind, ModelParams};
pub use reduced::{
    check_invariance, deformed_space, reduced_orbit, reduced_root_space, DeformedSpace,
    InvarianceReport, ReducedRootSpace,
};
pub use ring::{CPoly, GaussRat, RingMatrix, RingScalar};
pub use scan::{classify, enumerate_candidates, scan, scan_report, Candidate,
    CandidateClassification};
pub use table::{orbit_table_cells, parse_cell, render_cell, render_orbit_table, SuperscriptStyle};
pub use weyl::{Color, Root, RootSystem, WeylElement};
