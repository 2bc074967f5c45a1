//! Exact combinatorial models for cluster-tilting classification over
//! Dynkin path algebras and symmetric Nakayama algebras.
//!
//! Everything here is integer arithmetic on finite data: Dynkin quivers and
//! their Coxeter transformations ([`diagram`]), the bounded derived category
//! of a Dynkin path algebra modelled by τ-orbit coordinates ([`derived`],
//! with an independent mesh-knitting oracle in [`hammock`]), its orbit
//! category under ν∘\[1\] together with equivariant cluster-tilting search
//! ([`orbit`]), and serial module categories of symmetric Nakayama algebras
//! with syzygy calculus and a rational-linear-algebra oracle ([`nakayama`]).
//!
//! No floating point is used anywhere; the Nakayama homomorphism oracle
//! works over exact rationals.
//!
//! ```
//! use ctforge_core::diagram::{DynkinDiagram, DynkinFamily, Quiver};
//! use ctforge_core::orbit::OrbitCategory;
//!
//! // T(kQ) for the D_4 quiver is d-representation-finite only for d = 4.
//! let diagram = DynkinDiagram::new(DynkinFamily::D, 4)?;
//! let category = OrbitCategory::new(Quiver::default_orientation(diagram));
//! let finite = category.classify_set(2, 10, 66).expect("within budget");
//! assert_eq!(finite.into_iter().collect::<Vec<_>>(), vec![4]);
//!
//! // The symmetric Nakayama algebra with 6 simples and Loewy length 7 has
//! // a 2-cluster-tilting module, found by search and by arithmetic alike.
//! use ctforge_core::nakayama::{classify_numeric, ModEnumeration, NakayamaAlgebra};
//! let algebra = NakayamaAlgebra::new(6, 1)?;
//! assert!(classify_numeric(1, 6, 2));
//! assert!(matches!(
//!     algebra.enumerate_d_cluster_tilting(2, 60),
//!     ModEnumeration::Done(sets) if !sets.is_empty()
//! ));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clique;
pub mod derived;
pub mod diagram;
pub mod hammock;
pub mod linalg;
pub mod matrix;
pub mod nakayama;
pub mod orbit;

pub use derived::{DerivedCategory, DerivedObject, ModuleForm, NakayamaPermutation};
pub use diagram::{DynkinDiagram, DynkinFamily, Quiver};
pub use matrix::IntMatrix;
pub use nakayama::{NakayamaAlgebra, SerialModule};
pub use orbit::{CtCertificate, EnumerationOutcome, OrbitCategory, OrbitObject};
