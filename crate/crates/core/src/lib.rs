//! Exact computational engine for unoriented SL(3) conical foams.
//!
//! The crate is organized in four layers:
//!
//! * [`web`] — trivalent webs, Tait colorings, Kempe moves and classes,
//!   homogeneity / Kempe-smallness classification, web transformations.
//! * [`gf2`] — exact arithmetic over GF(2): trivariate polynomials,
//!   controlled-denominator fractions, symmetric polynomials in the
//!   elementary basis, univariate `GF(2)[E]`, graded matrices with
//!   Smith normal form, Laurent polynomials in `q`.
//! * [`foam`] — conical-foam presentations, admissible colorings,
//!   bicolored Euler characteristics, degree, and the closed-foam
//!   evaluation.
//! * [`statespace`] — universal-construction state spaces from cup/cap
//!   generator families: pairing matrices, rank and graded rank under
//!   base change, idempotent verification.

pub mod foam;
pub mod gf2;
pub mod statespace;
pub mod web;

pub use foam::{AdmissibleColoring, EvaluationReport, FoamError, FoamPresentation};
pub use gf2::{BaseChange, EPoly, Gf2Fraction, Gf2Poly, GradedMatrix, Laurent, SymPoly};
pub use statespace::{GeneratorFamily, PairingMatrix, StateSpaceError, StateSpaceReport};
pub use web::{Color, ColorPair, KempePartition, TaitColoring, Web, WebError};
