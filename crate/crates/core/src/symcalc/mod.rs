//! Exact symbolic kernel: polynomials in the family parameters, truncated
//! power series in `t` over them, and projective `s -> 0` limits.

mod laurent;
mod poly;
mod series;

pub use laurent::{limit_s_to_zero, scaled_limit, SPoly};
pub use poly::{Monomial, ParamPoly};
pub use series::{series_mul, TruncSeries};

/// Order of a series, `None` standing for `ord(0) = ∞`.
pub fn generic_order<K: crate::Scalar>(f: &TruncSeries<K>) -> Option<usize> {
    f.generic_order()
}
