//! Exact-arithmetic toolkit for rational multiple planes built from
//! Hirzebruch surfaces.
//!
//! The crate manipulates the defining data of degree-`m` covers of the
//! plane that pull a pencil of lines back to a pencil of rational curves:
//!
//! * [`picard`] — the rank-2 Picard lattice of `F_h`: intersection
//!   pairing, canonical class, adjunction and Riemann-Roch.
//! * [`invariants`] — closed-form numerical invariants of the triple
//!   covers `S -> F_1` with split Tschirnhausen bundle.
//! * [`poly`] — the bigraded section algebra of `F_h` over an exact
//!   coefficient field, with the elimination kernel (resultants, gcds,
//!   squarefree decomposition) everything else is built on.
//! * [`branch`] — structure polynomials, the discriminant curve, and the
//!   certified singularity census that decides whether a sampled cover
//!   is general.
//! * [`construct`] — the geometric construction on `F_h`: parameter
//!   solutions, the complete-intersection scheme `Z` and the net through
//!   it.
//! * [`cremona`] — the De Jonquieres feasibility classifier deciding
//!   Cremona equivalence of the constructed covers.
//! * [`files`] — JSON cover files and reports, bit-reproducible.
//!
//! All certifying arithmetic is exact. The polynomial types are generic
//! over the coefficient scalar (see [`scalar::Coeff`]); the concrete
//! instantiations used by the certificates are fixed by the aliases
//! below, and a floating-point instantiation of the same types backs the
//! redundant numeric probes in the test suite.

pub mod branch;
pub mod construct;
pub mod cremona;
pub mod error;
pub mod files;
pub mod invariants;
pub mod picard;
pub mod poly;
pub mod scalar;

pub use error::Error;

/// Exact integer for lattice arithmetic and closed-form invariants.
pub type Int = num_bigint::BigInt;

/// Exact rational coefficient field of the section algebra.
pub type Rat = num_rational::BigRational;

/// Section of a line bundle on `F_h`, exact rational coefficients.
pub type Poly = poly::BiPoly<Rat>;

/// Chart polynomial with exact rational coefficients.
pub type Affine = poly::AffinePoly<Rat>;

/// Univariate polynomial with exact rational coefficients.
pub type QPoly = poly::UniPoly<Rat>;

pub type Result<T> = std::result::Result<T, Error>;
