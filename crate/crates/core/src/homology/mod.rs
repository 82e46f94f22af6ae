//! The topology engine.
//!
//! Two complementary computation paths live here:
//!
//! - An *exact oracle* over small simplicial complexes: signed integer
//!   boundary operators, Hodge Laplacians, and Betti numbers obtained by
//!   exact rank computation ([`boundary_matrix`], [`hodge_laplacian`],
//!   [`betti`]).
//! - A *persistence engine* for Vietoris–Rips filtrations of point clouds
//!   over the two-element field. [`rips_filtration`] + [`persistence`]
//!   materialize the filtration and reduce its boundary matrix with the
//!   twist/clearing optimization; [`rips_persistence`] computes the same
//!   diagram without materializing any triangle, which is what makes
//!   thousand-point clouds tractable. The two routes are cross-validated
//!   against each other and against the exact oracle in the test suite.

mod diagram;
mod exact;
mod filtration;
mod reduction;
mod rips;
mod simplex;

pub use diagram::{betti_curve, Feature, PersistenceDiagram};
pub use exact::{betti, boundary_matrix, hodge_laplacian, BoundaryMatrix, IntMatrix};
pub use filtration::{rips_filtration, FilteredSimplex, Filtration};
pub use reduction::persistence;
pub use rips::rips_persistence;
pub use simplex::{Simplex, SimplicialComplex};
