//! Exact computation of duals and Galois hulls of multi-twisted codes over finite fields.
//!
//! A multi-twisted code is described by a [`CodeSpec`]: a field, block lengths `m_j`,
//! shift constants `λ_j` and a generator polynomial matrix over `F_q[x]`. From it the
//! library derives the reduced GPM, the identical-equation matrix, GPMs of the κ-Galois
//! dual and of the κ-Galois hull, and the hull dimension, with a dense linear-algebra
//! [`oracle`] to cross-check every result.
//!
//! ```
//! use mthull::{classify, parse_spec, AssumptionPolicy, Classification};
//!
//! let spec = parse_spec(
//!     "p = 2\ne = 2\nmodulus = t^2 + t + 1\nblocks = 3, 5\nlambdas = 1, t\ngpm = [1 | t^2; 0 | x + t^2]",
//! )
//! .unwrap();
//! let report = classify(&spec, 1, AssumptionPolicy::Strict).unwrap();
//! assert_eq!(report.dim_code, 7);
//! assert_eq!(report.dim_hull, 1);
//! assert_eq!(report.classification, Classification::Intermediate);
//! ```

pub mod checks;
pub mod cli;
pub mod error;
pub mod galois;
pub mod gf;
pub mod hull;
pub mod mtcode;
pub mod oracle;
pub mod poly;
pub mod polymat;
pub mod report;
pub mod text;

pub use error::{Error, Result};
pub use galois::{contains, containment_witness, dual_gpm, galois_inner, Dual, GaloisContext};
pub use gf::{ElementStyle, FieldElement, FieldSpec};
pub use hull::{classify, AssumptionPolicy, Classification, HullReport};
pub use mtcode::CodeSpec;
pub use oracle::{hongwei_rank, hull_by_definition, min_distance, DenseMatrix, DEFAULT_BUDGET};
pub use poly::{LaurentPoly, Poly};
pub use polymat::{HnfResult, PolyMatrix};
pub use text::{parse_matrix, parse_poly, parse_spec};
