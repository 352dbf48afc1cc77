//! Exact deformation cohomology of morphisms of Lie-Yamaguti algebras.
//!
//! Everything is computed over the rationals with exact arithmetic:
//! cochain complexes are assembled as dense matrices, cohomology comes from
//! ranks and kernels, and formal deformations are checked order by order.

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod corpus;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod linalg;
pub mod model;
pub mod report;
pub mod representation;

pub use algebra::{check_homomorphism_pair, LeibnizConvention, LieYamagutiAlgebra, MorphismLYA};
pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, Subspace};
pub use report::{Verdict, Witness};
pub use representation::{MorphismRepresentation, Representation};
