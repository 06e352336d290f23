//! Cell stratification of punctual Hilbert schemes `M_r` of monomial curve
//! singularities `k[[t^a1, ..., t^am]]`.
//!
//! The pipeline runs bottom-up:
//!
//! * [`semigroup`]: the value semigroup, its gaps, delta-invariant and conductor.
//! * [`gamma`]: Gamma-modules of a fixed colength and their shifted Delta-sets.
//! * [`schubert`]: Schubert indices and the Schubert closure order.
//! * [`symcalc`]: exact polynomials in the family parameters and truncated series.
//! * [`cells`]: canonical ideal families (one affine cell per Gamma-module) and
//!   their Plücker points.
//! * [`closure`]: closure verdicts between cells via one-parameter degenerations.
//! * [`report`]: per-r aggregation, JSON/table output.
//! * [`oracle`]: brute-force cross-checks used by `--oracle-check` and the tests.
//!
//! Everything symbolic is generic over the coefficient field through
//! [`Scalar`]; the aliases below fix it to exact big rationals, which is what
//! the report and the CLI use.

pub mod cells;
pub mod closure;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod schubert;
pub mod semigroup;
pub mod symcalc;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rat = num_rational::BigRational;
/// Polynomial in the family parameters over [`Rat`].
pub type Poly = symcalc::ParamPoly<Rat>;
/// Truncated power series in `t` with [`Poly`] coefficients.
pub type Series = symcalc::TruncSeries<Rat>;
/// Canonical family over [`Rat`].
pub type Family = cells::CanonicalFamily<Rat>;
/// Plücker point over [`Rat`].
pub type Plucker = cells::PluckerPoint<Rat>;
