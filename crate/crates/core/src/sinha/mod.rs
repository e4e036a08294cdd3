//! The normalized complex `NY` of the cohomology of Sinha's cosimplicial
//! model, its E2 page, the Vassiliev degree shift and the Kan-extension
//! comparison.

mod complex;
mod kan;
mod page;

pub use complex::{
    d1_integral, d1_matrix, degeneracy_pullback, degenerate_quotient_dim, face_integral, face_pullback,
    normalized_basis, normalized_dim_formula, outer_faces_vanish, ColumnComplex, IntegralDifferential,
};
pub use kan::{kan_unit_check, kan_unit_check_variant, KanReport, KanVariant, KAN_MAX_N};
pub use page::{
    e1_page, e2_entry, e2_page, e2_page_with_limits, on_lattice, vassiliev_e1_view, Bidegree, Limits, PageLabel, PageTable,
};
