//! Topological invariants of atom spectra: finite Kolmogorov spaces as
//! posets, limit-point iteration and stratification, spectral-space
//! checks and Hochster duals, two countable symbolic spaces, finite
//! Ext-between-atoms models, and the classification of open subsets
//! whose localizing subcategories are closed under injective envelopes.

pub mod classify;
pub mod error;
pub mod model;
pub mod poset;
pub mod symbolic;

pub use classify::{
    brute_force_qualifying, check_dimension_bound, check_epi_containment, classify_graded_kx,
    const_set, cprojdim_atom, dims_report, epi_set, gldim_via_atoms, graded_dims,
    graded_open_qualifies, projdim_atom, qualifying_opens, DimValue, DimsReport,
    EnumeratedClassification, DEFAULT_DEGREE_CAP,
};
pub use error::{Error, Result};
pub use model::{
    model_from_commutative_poset, model_from_quiver, model_from_triangular, model_graded_kx,
    ExtEntry, ExtValue, FiniteModel, GradedKxModel, QuiverPresentation,
};
pub use poset::{
    FinitePoset, PointSubset, Preorder, SpectralReport, StratificationReport, DEFAULT_SIZE_CAP,
};
