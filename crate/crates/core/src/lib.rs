//! Symbolic and numerical workbench for matrix algebras over free products
//! of copies of C[0,1] (optionally with a circle algebra factor).
//!
//! The crate has five layers:
//!
//! * [`ncpoly`] — the normalized noncommutative *-polynomial algebra in the
//!   coordinate letters `t_i`, the square-root letters `w_i` (with
//!   `w_i^2 = 1 - t_i`) and an optional unitary letter `u`, with a confluent
//!   degree-nonincreasing rewrite system and exact coefficients.
//! * [`matalg`] — square matrices over those polynomials, the structured
//!   subalgebra patterns `A(j,k)`, `B(j,k)`, `D(k)`, the diagonal embedding,
//!   two conditional expectations, and a small entry-wise subspace language.
//! * [`span`] — exact truncated linear algebra: echelonized spans, membership,
//!   and generated-subalgebra closure under products.
//! * [`freeprod`] — reduced words for free products amalgamated over the
//!   diagonal, the letterwise conditional expectation onto the diagonal
//!   free product of function algebras, and the concrete matrix model.
//! * [`numrep`] — sampled finite-dimensional representations, numerical
//!   evaluation and operator norms for claims with no symbolic certificate.
//!
//! Core arithmetic is generic over the coefficient scalar via [`scalar::Scalar`];
//! the exact Gaussian-rational instantiation is the default and is what every
//! verification routine uses. Concrete aliases live at the crate root.

pub mod freeprod;
pub mod matalg;
pub mod ncpoly;
pub mod numrep;
pub mod scalar;
pub mod span;

pub use ncpoly::{Config, Letter, PolyError, Syllable, Word};
pub use scalar::Scalar;

/// Exact rational number.
pub type Rat = num_rational::BigRational;
/// Default exact scalar: complex numbers with rational real and imaginary parts.
pub type Coeff = num_complex::Complex<Rat>;
/// Double-precision complex scalar, for numeric experiments.
pub type Coeff64 = num_complex::Complex64;

/// Polynomial over the default exact scalar.
pub type QPoly = ncpoly::Poly<Coeff>;
/// Matrix polynomial over the default exact scalar.
pub type QMatPoly = matalg::MatPoly<Coeff>;
/// Echelonized polynomial span over the default exact scalar.
pub type QPolyBasis = span::PolyBasis<Coeff>;
/// Echelonized matrix-polynomial span over the default exact scalar.
pub type QBasis = span::Basis<Coeff>;
/// Free-product element over the default exact scalar.
pub type QFpElement = freeprod::FpElement<Coeff>;
