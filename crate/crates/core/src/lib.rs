//! Exact growth series of Weyl groups of Kac–Moody algebras.
//!
//! Starting from a generalized Cartan matrix this crate
//!
//! * enumerates Weyl group elements by length through the orbit of the Weyl
//!   vector `ρ` ([`orbit`]),
//! * counts minimal parabolic coset representatives through the orbit of
//!   `μ_J` and checks `P(A) = P(A_J) · R_J` order by order,
//! * provides closed forms for finite types and Bott's product for untwisted
//!   affine types ([`catalog`]),
//! * reconstructs rational functions from truncated series with exact
//!   fraction-free elimination ([`ratfit`]).
//!
//! Everything is integer or rational arithmetic; nothing rounds. The crate is
//! `no_std` and needs only `alloc`.
//!
//! ```
//! use kmgrowth_core::{catalog, orbit};
//!
//! let h = catalog::hyperbolic_h();
//! let s = orbit::poincare_series(&h, Some(4), orbit::Strategy::FrontierSign).unwrap();
//! assert_eq!(s.series.coeffs(), &[1, 6, 20, 52, 117]);
//! ```

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod orbit;
pub mod polyseries;
pub mod ratfit;
pub mod reference;

pub use error::{Error, Result};
pub use lattice::{GeneralizedCartanMatrix, RootVector, SubsetJ, WeightVector};
pub use orbit::{ReducedWord, Strategy};
pub use polyseries::{IntPolynomial, TruncatedSeries};
pub use ratfit::RationalFit;
